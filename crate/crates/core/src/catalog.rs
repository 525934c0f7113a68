//! A fixed list of small types covering every family the engine treats
//! differently.

use crate::dynkin::{validate_type, Family, RfsType};

/// `(family, n, f numerator, f denominator, t)`.
pub const CATALOG: [(Family, u32, u64, u64, u32); 10] = [
    (Family::A, 2, 2, 2, 1),
    (Family::A, 3, 4, 3, 1),
    (Family::A, 5, 1, 1, 2),
    (Family::D, 4, 1, 1, 1),
    (Family::D, 4, 1, 1, 2),
    (Family::D, 4, 1, 1, 3),
    (Family::D, 5, 1, 1, 1),
    (Family::E, 6, 1, 1, 1),
    (Family::D, 6, 1, 3, 1),
    (Family::D, 6, 2, 3, 1),
];

pub fn catalog() -> Vec<RfsType> {
    CATALOG
        .iter()
        .map(|&(family, n, num, den, t)| validate_type(family, n, num, den, t).expect("catalog types are valid"))
        .collect()
}

//! Self-injective Nakayama algebras of type `(A_n, s/n, 1)`: uniserial modules
//! `X_i(m)` indexed by socle and Loewy length.
//!
//! The identification with the stable AR quiver is `X_i(m) ↔ (1 − i, m)`,
//! which makes `τX_i(m) = X_{i+1}(m)` the translation `(p, q) ↦ (p − 1, q)`.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::dynkin::{validate_type, Family, RfsType, TypeFamily, Vertex};
use crate::error::{Error, Result};
use crate::stable::{ObjectSet, StableCategory};

/// The Nakayama algebra with `s` simples and Loewy length `n + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct NakayamaAlgebra {
    s: u32,
    n: u32,
}

/// `X_socle(length)`. Length `0` is the zero module and length `n + 1` a
/// projective-injective; both vanish in the stable category.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct NakayamaModule {
    pub socle: u32,
    pub length: u32,
}

impl fmt::Display for NakayamaModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X_{}({})", self.socle, self.length)
    }
}

impl NakayamaModule {
    pub const fn new(socle: u32, length: u32) -> Self {
        NakayamaModule { socle, length }
    }
}

impl NakayamaAlgebra {
    pub fn new(s: u32, n: u32) -> Result<Self> {
        if s == 0 || n == 0 {
            return Err(Error::InvalidParameter(format!("s = {s}, n = {n} must be positive")));
        }
        Ok(NakayamaAlgebra { s, n })
    }

    pub fn from_rfs(rfs: &RfsType) -> Result<Self> {
        if rfs.type_family() != TypeFamily::Nakayama {
            return Err(Error::NotNakayama(rfs.to_string()));
        }
        Self::new(rfs.simple_count() as u32, rfs.n())
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn loewy_length(&self) -> u32 {
        self.n + 1
    }

    pub fn is_symmetric(&self) -> bool {
        self.n.is_multiple_of(self.s)
    }

    /// The type `(A_n, s/n, 1)`.
    pub fn rfs(&self) -> RfsType {
        validate_type(Family::A, self.n, u64::from(self.s), u64::from(self.n), 1)
            .expect("every (A_n, s/n, 1) is a valid type")
    }

    /// Index normalisation into `1..=s`.
    pub fn bar(&self, i: i64) -> u32 {
        ((i - 1).rem_euclid(i64::from(self.s)) + 1) as u32
    }

    /// Whether the module vanishes in the stable category.
    pub fn is_stably_zero(&self, x: NakayamaModule) -> bool {
        x.length == 0 || x.length == self.n + 1
    }

    /// `τ^{-k} X_a(b) = X_{a−k}(b)`.
    pub fn tau_inv(&self, x: NakayamaModule, k: i64) -> NakayamaModule {
        NakayamaModule::new(self.bar(i64::from(x.socle) - k), x.length)
    }

    fn check_module(&self, x: NakayamaModule) -> Result<()> {
        if !(1..=self.s).contains(&x.socle) {
            return Err(Error::SocleOutOfRange { index: x.socle, s: self.s });
        }
        if !(1..=self.n).contains(&x.length) {
            return Err(Error::OutOfRange {
                length: x.length,
                max: self.n,
            });
        }
        Ok(())
    }

    pub fn to_vertex(&self, x: NakayamaModule) -> Result<Vertex> {
        self.check_module(x)?;
        Ok(Vertex::new(
            (1 - i64::from(x.socle)).rem_euclid(i64::from(self.s)),
            x.length,
        ))
    }

    pub fn from_vertex(&self, v: Vertex) -> Result<NakayamaModule> {
        if !(1..=self.n).contains(&v.q) {
            return Err(Error::RowOutOfRange { q: v.q, n: self.n });
        }
        Ok(NakayamaModule::new(self.bar(1 - v.p), v.q))
    }

    /// `X_i(m)` is a stable brick iff `m ≤ s` or `n + 1 − s ≤ m ≤ n`.
    pub fn brick_criterion(&self, length: u32) -> Result<bool> {
        if !self.is_symmetric() {
            return Err(Error::NotSymmetric { s: self.s, n: self.n });
        }
        if !(1..=self.n).contains(&length) {
            return Err(Error::OutOfRange { length, max: self.n });
        }
        Ok(length <= self.s || length + self.s > self.n)
    }

    /// The triangle `X_i(r) → X_i(r+j) ⊕ τ^{-k}X_i(r−k) → τ^{-k}X_i(r−k+j) → Ω^{-1}X_i(r)`.
    pub fn triangle_family(&self, i: u32, r: u32, k: u32, j: u32) -> Result<TriangleFamily> {
        let ok = (1..=self.s).contains(&i) && 0 < k && k <= r && r <= self.n && 1 <= j && j + r <= self.n + 1;
        if !ok {
            return Err(Error::SideConditionViolated(format!(
                "s={}, n={}, i={i}, r={r}, k={k}, j={j}",
                self.s, self.n
            )));
        }
        let k = i64::from(k);
        let base = |len: u32| NakayamaModule::new(i, len);
        Ok(TriangleFamily {
            first: base(r),
            middle: (base(r + j), self.tau_inv(base(r - k as u32), k)),
            third: self.tau_inv(base(r - k as u32 + j), k),
            shift_of: base(r),
        })
    }

    /// Reduction to the symmetric algebra with `gcd(s, n)` simples.
    pub fn gcd_cover(&self) -> GcdCover {
        let e = self.s.gcd(&self.n);
        GcdCover {
            upstairs: *self,
            downstairs: NakayamaAlgebra { s: e, n: self.n },
        }
    }

    /// Replacement for a non-brick `X_i(as+b)` in the two-sided perp of `set`
    /// on a symmetric algebra: `X_i(b)` when `n ≥ 2as + b`, otherwise
    /// `X_i(n − s + b)`. The result is verified to be a brick in the perp.
    pub fn extension_pick(&self, cat: &StableCategory, set: &ObjectSet, x: NakayamaModule) -> Result<NakayamaModule> {
        if !self.is_symmetric() {
            return Err(Error::NotSymmetric { s: self.s, n: self.n });
        }
        self.check_module(x)?;
        let (s, n) = (self.s, self.n);
        if self.brick_criterion(x.length)? {
            return Err(Error::PreconditionViolated(format!("{x} is a stable brick")));
        }
        let perp = cat.two_sided_perp(set)?;
        if !perp.contains(&self.to_vertex(x)?) {
            return Err(Error::PreconditionViolated(format!("{x} is not in the two-sided perp")));
        }
        let a = (x.length - 1) / s;
        let b = x.length - a * s;
        let length = if n >= 2 * a * s + b { b } else { n - s + b };
        let pick = NakayamaModule::new(x.socle, length);
        let v = self.to_vertex(pick)?;
        if !cat.is_stable_brick(v)? || !perp.contains(&v) {
            return Err(Error::PickNotInPerp(pick.to_string()));
        }
        Ok(pick)
    }
}

/// Corners of the triangle built from `(i, r, k, j)`. The fourth corner is
/// `Ω^{-1}(shift_of)`, kept symbolic. Corners may be stably zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TriangleFamily {
    pub first: NakayamaModule,
    pub middle: (NakayamaModule, NakayamaModule),
    pub third: NakayamaModule,
    pub shift_of: NakayamaModule,
}

/// The covering from the `s`-simple algebra to the symmetric `gcd(s, n)`-simple
/// algebra of the same Loewy length, identifying ν-orbits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GcdCover {
    pub upstairs: NakayamaAlgebra,
    pub downstairs: NakayamaAlgebra,
}

impl GcdCover {
    pub fn e(&self) -> u32 {
        self.downstairs.s
    }

    pub fn project(&self, x: NakayamaModule) -> NakayamaModule {
        NakayamaModule::new(self.downstairs.bar(i64::from(x.socle)), x.length)
    }

    pub fn preimage_module(&self, x: NakayamaModule) -> Vec<NakayamaModule> {
        (1..=self.upstairs.s)
            .filter(|&i| self.downstairs.bar(i64::from(i)) == x.socle)
            .map(|i| NakayamaModule::new(i, x.length))
            .collect()
    }

    pub fn project_vertex(&self, v: Vertex) -> Result<Vertex> {
        let x = self.upstairs.from_vertex(v)?;
        self.downstairs.to_vertex(self.project(x))
    }

    /// Full preimage of a set of canonical vertices downstairs.
    pub fn preimage(&self, set: &ObjectSet) -> Result<ObjectSet> {
        let mut out = BTreeSet::new();
        for &v in set {
            for x in self.preimage_module(self.downstairs.from_vertex(v)?) {
                out.insert(self.upstairs.to_vertex(x)?);
            }
        }
        Ok(ObjectSet::from_canonical(out))
    }
}

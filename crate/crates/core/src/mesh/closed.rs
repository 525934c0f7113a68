use crate::dynkin::Vertex;

/// Closed form on ZA_ℓ: the dimension is 1 exactly when
/// `p ≤ r < p + q ≤ r + s ≤ p + ℓ` for `x = (p, q)`, `y = (r, s)`.
pub fn hom_dim_closed_a(ell: u32, x: Vertex, y: Vertex) -> u32 {
    let (p, q) = (x.p, i64::from(x.q));
    let (r, s) = (y.p, i64::from(y.q));
    let ell = i64::from(ell);
    u32::from(p <= r && r < p + q && p + q <= r + s && r + s <= p + ell)
}

/// Whether `y` lies in the support of `Hom(x, −)` on ZD_n.
///
/// Low rows are `q ≤ n − 2`; high rows `n − 1` and `n` only reach high
/// vertices of matching parity of `p + q`.
pub fn supp_nonzero_d(n: u32, x: Vertex, y: Vertex) -> bool {
    let n = i64::from(n);
    let (p, q) = (x.p, i64::from(x.q));
    let (a, b) = (y.p, i64::from(y.q));
    if q <= n - 2 {
        let first = p <= a && a < p + q && p + q - 1 < a + b;
        let reach = a + b.min(n - 1);
        let second = a < p + n - 1 && p + n - 1 <= reach && reach <= p + q + n - 2;
        first || second
    } else {
        let first = b <= n - 2 && a <= p + n - 2 && p + n - 2 < a + b;
        let second = b >= n - 1 && p <= a && a <= p + n - 2 && (a + b - p - q).rem_euclid(2) == 0;
        first || second
    }
}

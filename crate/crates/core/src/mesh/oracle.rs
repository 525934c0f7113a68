//! Independent Hom oracle through the bounded derived category of the path
//! algebra of Δ.
//!
//! The column `{(0, q)}` is identified with the indecomposable projectives
//! `P(q)` of the quiver Δ^op (an arrow `(0, a) → (0, b)` is a map
//! `P(a) → P(b)`). The class of `(p, q)` in the Grothendieck group is
//! `Φ^{-p}[P(q)]` with Φ the Coxeter matrix, and the shift degree of the
//! object increases by one every time the sign of the class flips. Between
//! two modules `M ≠ N` at most one of `Hom(M, N)` and `Ext¹(M, N)` is nonzero
//! (Dynkin quivers are representation-directed), so both are read off the
//! Euler form.

use std::collections::HashMap;
use std::sync::Mutex;

use crate::dynkin::{DynkinDiagram, Vertex};

type Class = Vec<i64>;

#[derive(Debug)]
pub struct EulerOracle {
    diagram: DynkinDiagram,
    projectives: Vec<Class>,
    coxeter: Vec<Vec<i64>>,
    coxeter_inv: Vec<Vec<i64>>,
    cache: Mutex<HashMap<Vertex, (Class, i64)>>,
}

impl EulerOracle {
    pub fn new(diagram: &DynkinDiagram) -> Self {
        let n = diagram.n() as usize;
        // reach[j][q]: a path j → … → q exists in Δ.
        let mut reach = vec![vec![false; n]; n];
        for (j, row) in reach.iter_mut().enumerate() {
            row[j] = true;
        }
        // Labels are a topological order, so one ascending sweep closes paths.
        for _ in 0..n {
            for &(a, b) in diagram.edges() {
                let (a, b) = (a as usize - 1, b as usize - 1);
                for row in reach.iter_mut() {
                    if row[a] {
                        row[b] = true;
                    }
                }
            }
        }
        // dim P(q)_j = number of paths q → j in Δ^op = paths j → q in Δ.
        let projectives: Vec<Class> = (0..n)
            .map(|q| (0..n).map(|j| i64::from(reach[j][q])).collect())
            .collect();
        // C has the projective classes as columns: C[j][q] = dim P(q)_j.
        let c: Vec<Vec<i64>> = (0..n).map(|j| (0..n).map(|q| projectives[q][j]).collect()).collect();
        let c_inv = unitriangular_inverse(&c);
        let ct = transpose(&c);
        let c_inv_t = transpose(&c_inv);
        // Φ = −Cᵀ C⁻¹ sends P(q) to −I(q); Φ⁻¹ = −C C⁻ᵀ.
        let coxeter = negate(&matmul(&ct, &c_inv));
        let coxeter_inv = negate(&matmul(&c, &c_inv_t));
        EulerOracle {
            diagram: diagram.clone(),
            projectives,
            coxeter,
            coxeter_inv,
            cache: Mutex::new(HashMap::new()),
        }
    }

    /// Euler form of Δ^op: `⟨a, b⟩ = Σ a_i b_i − Σ_{arrows i→j} a_i b_j`,
    /// where each edge `a → b` of Δ is the arrow `b → a` of Δ^op.
    pub fn euler_form(&self, x: &[i64], y: &[i64]) -> i64 {
        let diag: i64 = x.iter().zip(y).map(|(a, b)| a * b).sum();
        let off: i64 = self
            .diagram
            .edges()
            .iter()
            .map(|&(a, b)| x[b as usize - 1] * y[a as usize - 1])
            .sum();
        diag - off
    }

    /// Dimension vector and shift degree of the object at `v`.
    pub fn object(&self, v: Vertex) -> (Class, i64) {
        if let Some(hit) = self.cache.lock().expect("oracle cache").get(&v) {
            return hit.clone();
        }
        let mut class = self.projectives[(v.q - 1) as usize].clone();
        let mut degree = 0i64;
        let (step, dir) = if v.p >= 0 {
            (&self.coxeter_inv, 1)
        } else {
            (&self.coxeter, -1)
        };
        for _ in 0..v.p.abs() {
            let next = apply(step, &class);
            if sign(&next) != sign(&class) {
                degree += dir;
            }
            class = next;
        }
        let dims: Class = class.iter().map(|c| c.abs()).collect();
        let out = (dims, degree);
        self.cache.lock().expect("oracle cache").insert(v, out.clone());
        out
    }

    /// `dim Hom(x, y)`: `Hom(M[i], N[j])` is `hom(M, N)` for `j = i`,
    /// `ext¹(M, N)` for `j = i + 1`, and zero otherwise.
    pub fn hom(&self, x: Vertex, y: Vertex) -> u32 {
        if x == y {
            return 1;
        }
        let (m, i) = self.object(x);
        let (n, j) = self.object(y);
        let form = self.euler_form(&m, &n);
        let dim = match j - i {
            0 => form.max(0),
            1 => (-form).max(0),
            _ => 0,
        };
        dim as u32
    }
}

fn sign(c: &[i64]) -> i8 {
    if c.iter().all(|&x| x >= 0) {
        1
    } else if c.iter().all(|&x| x <= 0) {
        -1
    } else {
        panic!("class {c:?} is not a root: Coxeter iteration left the root system")
    }
}

fn apply(m: &[Vec<i64>], v: &[i64]) -> Class {
    m.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

fn matmul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = b[0].len();
    a.iter()
        .map(|row| (0..n).map(|j| row.iter().zip(b).map(|(x, brow)| x * brow[j]).sum()).collect())
        .collect()
}

fn transpose(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| a[j][i]).collect()).collect()
}

fn negate(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    a.iter().map(|row| row.iter().map(|x| -x).collect()).collect()
}

/// Inverse of an upper unitriangular integer matrix by back substitution.
fn unitriangular_inverse(c: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = c.len();
    for (i, row) in c.iter().enumerate() {
        assert_eq!(row[i], 1, "Cartan matrix must be unitriangular");
        assert!(row[..i].iter().all(|&x| x == 0), "Cartan matrix must be upper triangular");
    }
    let mut inv = vec![vec![0i64; n]; n];
    for i in (0..n).rev() {
        let mut row: Vec<i64> = (0..n).map(|j| i64::from(i == j)).collect();
        for k in i + 1..n {
            for (r, x) in row.iter_mut().zip(&inv[k]) {
                *r -= c[i][k] * x;
            }
        }
        inv[i] = row;
    }
    inv
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coxeter_matrices_are_inverse() {
        for d in [DynkinDiagram::a(5), DynkinDiagram::d(6), DynkinDiagram::e(8)] {
            let o = EulerOracle::new(&d);
            let prod = matmul(&o.coxeter, &o.coxeter_inv);
            for (i, row) in prod.iter().enumerate() {
                for (j, &x) in row.iter().enumerate() {
                    assert_eq!(x, i64::from(i == j));
                }
            }
        }
    }

    #[test]
    fn euler_form_on_projectives_reads_entries() {
        let d = DynkinDiagram::e(7);
        let o = EulerOracle::new(&d);
        let m = o.object(Vertex::new(3, 5)).0;
        for q in 1..=7 {
            let p = &o.projectives[q - 1];
            assert_eq!(o.euler_form(p, &m), m[q - 1]);
        }
    }

    #[test]
    fn coxeter_orbit_period() {
        // [2] = τ^{-h}: after h = m_Δ + 1 steps the class returns with degree 2.
        for d in [DynkinDiagram::a(4), DynkinDiagram::d(5), DynkinDiagram::e(6)] {
            let o = EulerOracle::new(&d);
            let h = d.m_delta() + 1;
            for q in 1..=d.n() {
                let (c0, d0) = o.object(Vertex::new(0, q));
                let (c1, d1) = o.object(Vertex::new(h, q));
                let (c2, d2) = o.object(Vertex::new(-h, q));
                assert_eq!((c0.clone(), d0 + 2), (c1, d1));
                assert_eq!((c0, d0 - 2), (c2, d2));
            }
        }
    }

    #[test]
    fn oracle_examples() {
        let a3 = DynkinDiagram::a(3);
        let o = EulerOracle::new(&a3);
        assert_eq!(o.hom(Vertex::new(0, 2), Vertex::new(1, 2)), 1);
        assert_eq!(o.hom(Vertex::new(4, 3), Vertex::new(4, 3)), 1);
    }
}

//! Hom dimensions in the mesh category k(ZΔ).
//!
//! [`MeshCategory`] holds one hammock table per row, each computed from a
//! source in column 0; every other source is reached by τ-invariance.

mod closed;
mod oracle;

pub use closed::{hom_dim_closed_a, supp_nonzero_d};
pub use oracle::EulerOracle;

use crate::dynkin::{tau, DynkinDiagram, Vertex};

/// Dimensions of `Hom(source, −)` over columns `source.p ..= source.p + width`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HammockTable {
    source: Vertex,
    width: i64,
    n: u32,
    dims: Vec<u32>,
}

impl HammockTable {
    /// Forward propagation in increasing `p`:
    /// `d(v) = max(0, Σ_{u→v} d(u) − d(τv))` for `v ≠ source`.
    ///
    /// The clip only fires at `source[1]`, where the mesh sum is `−1`.
    pub fn compute(diagram: &DynkinDiagram, source: Vertex) -> Self {
        let n = diagram.n();
        let width = diagram.m_delta() + i64::from(n);
        let mut table = HammockTable {
            source,
            width,
            n,
            dims: vec![0; (width as usize + 1) * n as usize],
        };
        for col in 0..=width {
            // Edges go from smaller to larger labels, so increasing q is a
            // topological order inside a column.
            for q in 1..=n {
                let v = Vertex::new(source.p + col, q);
                let d = if v == source {
                    1
                } else {
                    let incoming: i64 = diagram
                        .predecessors(v)
                        .into_iter()
                        .map(|u| i64::from(table.dim(u)))
                        .sum();
                    (incoming - i64::from(table.dim(tau(v, 1)))).max(0) as u32
                };
                let idx = table.index(v).expect("inside window");
                table.dims[idx] = d;
            }
        }
        table
    }

    fn index(&self, v: Vertex) -> Option<usize> {
        let col = v.p - self.source.p;
        if !(0..=self.width).contains(&col) || v.q == 0 || v.q > self.n {
            return None;
        }
        Some(col as usize * self.n as usize + (v.q - 1) as usize)
    }

    pub fn source(&self) -> Vertex {
        self.source
    }

    /// Inclusive column range covered by the table.
    pub fn window(&self) -> (i64, i64) {
        (self.source.p, self.source.p + self.width)
    }

    /// `dim Hom(source, v)`; zero outside the window.
    pub fn dim(&self, v: Vertex) -> u32 {
        self.index(v).map_or(0, |i| self.dims[i])
    }

    /// All vertices with nonzero Hom from the source.
    pub fn support(&self) -> Vec<Vertex> {
        let mut out = Vec::new();
        for col in 0..=self.width {
            for q in 1..=self.n {
                let v = Vertex::new(self.source.p + col, q);
                if self.dim(v) > 0 {
                    out.push(v);
                }
            }
        }
        out
    }
}

/// Hammock tables for all rows of one diagram.
#[derive(Debug, Clone)]
pub struct MeshCategory {
    diagram: DynkinDiagram,
    rows: Vec<HammockTable>,
}

impl MeshCategory {
    pub fn new(diagram: &DynkinDiagram) -> Self {
        let rows = (1..=diagram.n())
            .map(|q| HammockTable::compute(diagram, Vertex::new(0, q)))
            .collect();
        MeshCategory {
            diagram: diagram.clone(),
            rows,
        }
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    /// `dim Hom_{k(ZΔ)}(x, y)`.
    pub fn hom(&self, x: Vertex, y: Vertex) -> u32 {
        let table = &self.rows[(x.q - 1) as usize];
        table.dim(Vertex::new(y.p - x.p, y.q))
    }

    /// Columns beyond `p(x) + reach()` carry no maps from `x`.
    pub fn reach(&self) -> i64 {
        self.diagram.m_delta() + i64::from(self.diagram.n())
    }

    pub fn table(&self, q: u32) -> &HammockTable {
        &self.rows[(q - 1) as usize]
    }
}

/// `dim Hom_{k(ZΔ)}(x, y)` from a fresh hammock table.
pub fn hom_dim_mesh(diagram: &DynkinDiagram, x: Vertex, y: Vertex) -> u32 {
    HammockTable::compute(diagram, x).dim(y)
}

/// The Nakayama map `τ^{-m_Δ}` on ZΔ.
pub fn nu_mesh(diagram: &DynkinDiagram, v: Vertex) -> Vertex {
    tau(v, -diagram.m_delta())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hom_examples() {
        let a3 = DynkinDiagram::a(3);
        assert_eq!(hom_dim_mesh(&a3, Vertex::new(0, 2), Vertex::new(1, 2)), 1);
        for d in [DynkinDiagram::a(4), DynkinDiagram::d(5), DynkinDiagram::e(8)] {
            for q in 1..=d.n() {
                let v = Vertex::new(7, q);
                assert_eq!(hom_dim_mesh(&d, v, v), 1);
            }
        }
        let d6 = DynkinDiagram::d(6);
        assert_eq!(hom_dim_mesh(&d6, Vertex::new(0, 6), Vertex::new(3, 6)), 0);
    }

    #[test]
    fn table_matches_fresh_computation() {
        let d = DynkinDiagram::d(5);
        let mesh = MeshCategory::new(&d);
        for q in 1..=5 {
            for q2 in 1..=5 {
                for p in -3..12 {
                    let x = Vertex::new(4, q);
                    let y = Vertex::new(p, q2);
                    assert_eq!(mesh.hom(x, y), hom_dim_mesh(&d, x, y));
                }
            }
        }
    }

    #[test]
    fn nu_examples() {
        assert_eq!(nu_mesh(&DynkinDiagram::a(3), Vertex::new(0, 1)), Vertex::new(3, 1));
        assert_eq!(nu_mesh(&DynkinDiagram::d(6), Vertex::new(2, 4)), Vertex::new(11, 4));
        assert_eq!(nu_mesh(&DynkinDiagram::e(7), Vertex::new(0, 7)), Vertex::new(17, 7));
    }

    #[test]
    fn table_vanishes_at_window_edge() {
        for d in [DynkinDiagram::a(6), DynkinDiagram::d(7), DynkinDiagram::e(6), DynkinDiagram::e(8)] {
            let mesh = MeshCategory::new(&d);
            for q in 1..=d.n() {
                let t = mesh.table(q);
                let (_, hi) = t.window();
                for q2 in 1..=d.n() {
                    assert_eq!(t.dim(Vertex::new(hi, q2)), 0);
                }
                assert_eq!(t.dim(t.source()), 1);
            }
        }
    }
}

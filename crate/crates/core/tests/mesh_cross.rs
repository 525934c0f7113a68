use smskit::mesh::{hom_dim_closed_a, supp_nonzero_d, EulerOracle, MeshCategory};
use smskit::{DynkinDiagram, Vertex};

fn window(d: &DynkinDiagram) -> Vec<Vertex> {
    let w = 3 * d.m_delta();
    (0..w).flat_map(|p| (1..=d.n()).map(move |q| Vertex::new(p, q))).collect()
}

#[test]
fn hammock_matches_closed_form_on_a() {
    for ell in 1..=6 {
        let d = DynkinDiagram::a(ell);
        let mesh = MeshCategory::new(&d);
        let vs = window(&d);
        for &x in &vs {
            for &y in &vs {
                assert_eq!(mesh.hom(x, y), hom_dim_closed_a(ell, x, y), "A_{ell} {x} {y}");
            }
        }
    }
}

#[test]
fn hammock_support_matches_d_formula() {
    for n in 4..=6 {
        let d = DynkinDiagram::d(n);
        let mesh = MeshCategory::new(&d);
        let vs = window(&d);
        for &x in &vs {
            for &y in &vs {
                assert_eq!(mesh.hom(x, y) > 0, supp_nonzero_d(n, x, y), "D_{n} {x} {y}");
            }
        }
    }
}

#[test]
fn hammock_matches_oracle_small() {
    for d in [DynkinDiagram::a(4), DynkinDiagram::d(5), DynkinDiagram::e(6)] {
        let mesh = MeshCategory::new(&d);
        let oracle = EulerOracle::new(&d);
        let vs = window(&d);
        for &x in vs.iter().take(3 * d.n() as usize) {
            for &y in &vs {
                assert_eq!(mesh.hom(x, y), oracle.hom(x, y), "{d} {x} {y}");
            }
        }
    }
}

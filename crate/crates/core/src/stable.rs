//! The stable category of an RFS algebra, with Hom spaces computed through the
//! covering functor `k(ZΔ) → A-stmod`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use crate::dynkin::{RfsType, Vertex};
use crate::error::{Error, Result};
use crate::mesh::MeshCategory;

/// A finite set of canonical vertices of the stable AR quiver.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ObjectSet {
    members: BTreeSet<Vertex>,
}

impl ObjectSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: &Vertex) -> bool {
        self.members.contains(v)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Vertex> + '_ {
        self.members.iter()
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.members.iter().copied().collect()
    }

    pub fn is_subset(&self, other: &ObjectSet) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn union(&self, other: &ObjectSet) -> ObjectSet {
        ObjectSet {
            members: self.members.union(&other.members).copied().collect(),
        }
    }

    pub(crate) fn from_canonical<I: IntoIterator<Item = Vertex>>(it: I) -> Self {
        ObjectSet {
            members: it.into_iter().collect(),
        }
    }
}

impl fmt::Display for ObjectSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl<'a> IntoIterator for &'a ObjectSet {
    type Item = &'a Vertex;
    type IntoIter = std::collections::btree_set::Iter<'a, Vertex>;
    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

/// One summand `Hom_{k(ZΔ)}(X, g^z·Y)` of a covering sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CoveringTerm {
    pub z: i64,
    pub lift: Vertex,
    pub dim: u32,
}

/// Why a check failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    NotBrick { object: Vertex, endo_dim: u32 },
    NonzeroHom { from: Vertex, to: Vertex, dim: u32 },
    Cardinality { expected: u64, actual: usize },
    NotNakayamaStable { object: Vertex, image: Vertex },
    NotGenerated { object: Vertex },
    EmptySetNotSms,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::NotBrick { object, endo_dim } => {
                write!(f, "{object} is not a stable brick (dim End = {endo_dim})")
            }
            Witness::NonzeroHom { from, to, dim } => write!(f, "dim Hom({from},{to}) = {dim}"),
            Witness::Cardinality { expected, actual } => {
                write!(f, "{actual} objects, expected {expected}")
            }
            Witness::NotNakayamaStable { object, image } => {
                write!(f, "ν{object} = {image} is not in the set")
            }
            Witness::NotGenerated { object } => write!(f, "{object} maps to no member"),
            Witness::EmptySetNotSms => f.write_str("empty set does not generate"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub orthogonal: bool,
    pub cardinality_ok: bool,
    pub nakayama_stable: bool,
    pub weak_generating: bool,
    pub is_sms: bool,
    pub witnesses: Vec<Witness>,
}

/// `A-stmod` for a standard RFS algebra of the given type.
///
/// All stable Hom dimensions between indecomposables are tabulated on
/// construction; the predicates are lookups.
#[derive(Debug, Clone)]
pub struct StableCategory {
    rfs: RfsType,
    mesh: MeshCategory,
    objects: Vec<Vertex>,
    index: HashMap<Vertex, usize>,
    hom: Vec<u32>,
    nu: Vec<usize>,
}

impl StableCategory {
    pub fn new(rfs: &RfsType) -> Self {
        let mesh = MeshCategory::new(rfs.diagram());
        let objects = rfs.all_objects();
        let index: HashMap<Vertex, usize> = objects.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut cat = StableCategory {
            rfs: rfs.clone(),
            mesh,
            objects,
            index,
            hom: Vec::new(),
            nu: Vec::new(),
        };
        let hw = cat.default_half_width();
        let n = cat.objects.len();
        let mut hom = vec![0u32; n * n];
        for (i, &x) in cat.objects.iter().enumerate() {
            for (j, &y) in cat.objects.iter().enumerate() {
                hom[i * n + j] = cat.covering_sum(x, y, hw);
            }
        }
        cat.hom = hom;
        cat.nu = cat.objects.iter().map(|&v| cat.index[&rfs.nu(v)]).collect();
        cat
    }

    pub fn rfs(&self) -> &RfsType {
        &self.rfs
    }

    pub fn mesh(&self) -> &MeshCategory {
        &self.mesh
    }

    /// The canonical vertices, sorted.
    pub fn objects(&self) -> &[Vertex] {
        &self.objects
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn index_of(&self, v: Vertex) -> Option<usize> {
        self.index.get(&v).copied()
    }

    fn idx(&self, v: Vertex) -> Result<usize> {
        self.index_of(v).ok_or(Error::NotCanonical(v))
    }

    /// Builds an [`ObjectSet`], rejecting non-canonical vertices.
    pub fn set<I: IntoIterator<Item = Vertex>>(&self, members: I) -> Result<ObjectSet> {
        let members: BTreeSet<Vertex> = members
            .into_iter()
            .map(|v| self.idx(v).map(|_| v))
            .collect::<Result<_>>()?;
        Ok(ObjectSet { members })
    }

    /// Canonicalizes arbitrary vertices of ZΔ into an [`ObjectSet`].
    pub fn set_of_lifts<I: IntoIterator<Item = Vertex>>(&self, members: I) -> Result<ObjectSet> {
        let rfs = &self.rfs;
        let n = rfs.n();
        members
            .into_iter()
            .map(|v| {
                if rfs.diagram().contains(v) {
                    Ok(rfs.canonical(v))
                } else {
                    Err(Error::RowOutOfRange { q: v.q, n })
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(ObjectSet::from_canonical)
    }

    pub fn all(&self) -> ObjectSet {
        ObjectSet::from_canonical(self.objects.iter().copied())
    }

    /// Lifts of the covering sum are kept within `p(X) ± (m_Δ + n)`.
    pub fn default_half_width(&self) -> i64 {
        self.mesh.reach()
    }

    /// The nonzero summands of `Σ_z Hom_{k(ZΔ)}(X, g^z·Y)` over lifts with
    /// `p ∈ [p(X) − half_width, p(X) + half_width]`.
    pub fn covering_terms(&self, x: Vertex, y: Vertex, half_width: i64) -> Vec<CoveringTerm> {
        let rfs = &self.rfs;
        let r = rfs.r();
        let slack = i64::from(rfs.n()) + 1;
        let lo = x.p - half_width;
        let hi = x.p + half_width;
        // p(g^z·Y) stays within n of p(Y) + z·r.
        let z_lo = (lo - y.p - slack).div_euclid(r) - 1;
        let z_hi = (hi - y.p + slack).div_euclid(r) + 1;
        let mut lift = rfs.apply_generator(y, z_lo);
        let mut out = Vec::new();
        for z in z_lo..=z_hi {
            if (lo..=hi).contains(&lift.p) {
                let dim = self.mesh.hom(x, lift);
                if dim > 0 {
                    out.push(CoveringTerm { z, lift, dim });
                }
            }
            lift = rfs.apply_generator(lift, 1);
        }
        out
    }

    fn covering_sum(&self, x: Vertex, y: Vertex, half_width: i64) -> u32 {
        self.covering_terms(x, y, half_width).iter().map(|t| t.dim).sum()
    }

    /// `dim stHom(X, Y)` computed afresh from the covering sum with the given
    /// window; the tabulated value uses [`Self::default_half_width`].
    pub fn stable_hom_dim_window(&self, x: Vertex, y: Vertex, half_width: i64) -> Result<u32> {
        self.idx(x)?;
        self.idx(y)?;
        Ok(self.covering_sum(x, y, half_width))
    }

    pub fn stable_hom_dim(&self, x: Vertex, y: Vertex) -> Result<u32> {
        Ok(self.hom_idx(self.idx(x)?, self.idx(y)?))
    }

    /// `dim stHom` between objects given by index into [`Self::objects`].
    pub fn hom_idx(&self, i: usize, j: usize) -> u32 {
        self.hom[i * self.objects.len() + j]
    }

    pub fn nu_idx(&self, i: usize) -> usize {
        self.nu[i]
    }

    pub fn nu(&self, x: Vertex) -> Result<Vertex> {
        Ok(self.objects[self.nu[self.idx(x)?]])
    }

    /// `{X, νX, ν²X, …}`.
    pub fn nu_orbit(&self, x: Vertex) -> Result<ObjectSet> {
        let start = self.idx(x)?;
        Ok(ObjectSet::from_canonical(self.orbit_indices(start).into_iter().map(|i| self.objects[i])))
    }

    pub(crate) fn orbit_indices(&self, start: usize) -> Vec<usize> {
        let mut out = vec![start];
        let mut i = self.nu[start];
        while i != start {
            out.push(i);
            i = self.nu[i];
        }
        out
    }

    /// The distinct ν-orbits, each sorted, ordered by their smallest member.
    pub fn nu_orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for i in 0..self.len() {
            if seen[i] {
                continue;
            }
            let mut orbit = self.orbit_indices(i);
            orbit.sort_unstable();
            for &j in &orbit {
                seen[j] = true;
            }
            out.push(orbit);
        }
        out
    }

    pub fn is_stable_brick(&self, x: Vertex) -> Result<bool> {
        Ok(self.stable_hom_dim(x, x)? == 1)
    }

    fn indices(&self, s: &ObjectSet) -> Result<Vec<usize>> {
        s.iter().map(|&v| self.idx(v)).collect()
    }

    /// First violation of orthogonality, if any.
    pub fn orthogonality_witness(&self, s: &ObjectSet) -> Result<Option<Witness>> {
        let idx = self.indices(s)?;
        for &i in &idx {
            let e = self.hom_idx(i, i);
            if e != 1 {
                return Ok(Some(Witness::NotBrick {
                    object: self.objects[i],
                    endo_dim: e,
                }));
            }
        }
        for &i in &idx {
            for &j in &idx {
                let h = self.hom_idx(i, j);
                if i != j && h != 0 {
                    return Ok(Some(Witness::NonzeroHom {
                        from: self.objects[i],
                        to: self.objects[j],
                        dim: h,
                    }));
                }
            }
        }
        Ok(None)
    }

    pub fn is_orthogonal_system(&self, s: &ObjectSet) -> Result<bool> {
        Ok(self.orthogonality_witness(s)?.is_none())
    }

    fn nakayama_witness(&self, s: &ObjectSet) -> Result<Option<Witness>> {
        for &i in &self.indices(s)? {
            let image = self.objects[self.nu[i]];
            if !s.contains(&image) {
                return Ok(Some(Witness::NotNakayamaStable {
                    object: self.objects[i],
                    image,
                }));
            }
        }
        Ok(None)
    }

    /// `ν(S) = S`.
    pub fn is_nakayama_stable(&self, s: &ObjectSet) -> Result<bool> {
        Ok(self.nakayama_witness(s)?.is_none())
    }

    fn generation_witness(&self, s: &ObjectSet) -> Result<Option<Witness>> {
        let idx = self.indices(s)?;
        if idx.is_empty() && !self.objects.is_empty() {
            return Ok(Some(Witness::EmptySetNotSms));
        }
        for x in 0..self.len() {
            if !idx.iter().any(|&j| self.hom_idx(x, j) > 0) {
                return Ok(Some(Witness::NotGenerated { object: self.objects[x] }));
            }
        }
        Ok(None)
    }

    /// Every indecomposable non-projective `X` has `stHom(X, S₀) ≠ 0` for some
    /// member `S₀`.
    pub fn weak_generates(&self, s: &ObjectSet) -> Result<bool> {
        Ok(self.generation_witness(s)?.is_none())
    }

    /// Orthogonal and weakly generating.
    pub fn is_sms(&self, s: &ObjectSet) -> Result<bool> {
        Ok(self.is_orthogonal_system(s)? && self.weak_generates(s)?)
    }

    pub fn check_all(&self, s: &ObjectSet) -> Result<CheckReport> {
        let mut witnesses = Vec::new();
        let orth = self.orthogonality_witness(s)?;
        let nak = self.nakayama_witness(s)?;
        let gen = self.generation_witness(s)?;
        let expected = self.rfs.simple_count();
        let cardinality_ok = s.len() as u64 == expected;
        let report = CheckReport {
            orthogonal: orth.is_none(),
            cardinality_ok,
            nakayama_stable: nak.is_none(),
            weak_generating: gen.is_none(),
            is_sms: orth.is_none() && gen.is_none(),
            witnesses: Vec::new(),
        };
        witnesses.extend(orth);
        if !cardinality_ok {
            witnesses.push(Witness::Cardinality {
                expected,
                actual: s.len(),
            });
        }
        witnesses.extend(nak);
        witnesses.extend(gen);
        Ok(CheckReport { witnesses, ..report })
    }

    fn perp_by(&self, s: &ObjectSet, keep: impl Fn(usize, usize) -> bool) -> Result<ObjectSet> {
        let idx = self.indices(s)?;
        Ok(ObjectSet::from_canonical(
            (0..self.len())
                .filter(|&y| idx.iter().all(|&x| keep(x, y)))
                .map(|y| self.objects[y]),
        ))
    }

    /// `S^⊥ = {Y | stHom(X, Y) = 0 for all X ∈ S}`.
    pub fn right_perp(&self, s: &ObjectSet) -> Result<ObjectSet> {
        self.perp_by(s, |x, y| self.hom_idx(x, y) == 0)
    }

    /// `^⊥S = {Y | stHom(Y, X) = 0 for all X ∈ S}`.
    pub fn left_perp(&self, s: &ObjectSet) -> Result<ObjectSet> {
        self.perp_by(s, |x, y| self.hom_idx(y, x) == 0)
    }

    pub fn two_sided_perp(&self, s: &ObjectSet) -> Result<ObjectSet> {
        self.perp_by(s, |x, y| self.hom_idx(x, y) == 0 && self.hom_idx(y, x) == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynkin::{validate_type, Family};

    fn cat(family: Family, n: u32, num: u64, den: u64, t: u32) -> StableCategory {
        StableCategory::new(&validate_type(family, n, num, den, t).unwrap())
    }

    fn v(p: i64, q: u32) -> Vertex {
        Vertex::new(p, q)
    }

    /// Lemma-level oracle for ZA_ℓ written out independently of the library.
    fn a_hom(ell: i64, (p, q): (i64, i64), (r, s): (i64, i64)) -> u32 {
        u32::from(p <= r && r < p + q && p + q <= r + s && r + s <= p + ell)
    }

    #[test]
    fn covering_sum_examples_on_a2() {
        let c = cat(Family::A, 2, 2, 2, 1);
        // Brute force over z ∈ [−5, 5] with lifts τ^{-2z}Y.
        let brute = |x: (i64, i64), y: (i64, i64)| -> u32 { (-5..=5).map(|z| a_hom(2, x, (y.0 + 2 * z, y.1))).sum() };
        assert_eq!(brute((0, 1), (0, 1)), 1);
        assert_eq!(brute((0, 1), (1, 1)), 0);
        assert_eq!(brute((1, 2), (0, 1)), 1);
        assert_eq!(c.stable_hom_dim(v(0, 1), v(0, 1)).unwrap(), 1);
        assert_eq!(c.stable_hom_dim(v(0, 1), v(1, 1)).unwrap(), 0);
        assert_eq!(c.stable_hom_dim(v(1, 2), v(0, 1)).unwrap(), 1);
        for &x in c.objects() {
            for &y in c.objects() {
                let b = brute((x.p, i64::from(x.q)), (y.p, i64::from(y.q)));
                assert_eq!(c.stable_hom_dim(x, y).unwrap(), b, "{x} {y}");
            }
        }
    }

    #[test]
    fn covering_terms_report_lift() {
        let c = cat(Family::A, 2, 2, 2, 1);
        let terms = c.covering_terms(v(1, 2), v(0, 1), c.default_half_width());
        assert_eq!(terms, vec![CoveringTerm { z: 1, lift: v(2, 1), dim: 1 }]);
    }

    #[test]
    fn nakayama_functor_examples() {
        let a2 = cat(Family::A, 2, 2, 2, 1);
        for &x in a2.objects() {
            assert_eq!(a2.nu(x).unwrap(), x);
            assert_eq!(a2.nu_orbit(x).unwrap().len(), 1);
        }
        let a3 = cat(Family::A, 3, 4, 3, 1);
        assert_eq!(a3.nu(v(0, 1)).unwrap(), v(3, 1));
        assert_eq!(a3.nu_orbit(v(0, 1)).unwrap().len(), 4);
        let d6 = cat(Family::D, 6, 1, 3, 1);
        for &x in d6.objects() {
            assert_eq!(d6.nu(x).unwrap(), x);
        }
    }

    #[test]
    fn brick_examples_on_d6_third() {
        let d6 = cat(Family::D, 6, 1, 3, 1);
        assert!(d6.is_stable_brick(v(0, 1)).unwrap());
        assert!(!d6.is_stable_brick(v(0, 3)).unwrap());
    }

    #[test]
    fn orthogonality_examples() {
        let a2 = cat(Family::A, 2, 2, 2, 1);
        let simples = a2.set([v(0, 1), v(1, 1)]).unwrap();
        assert!(a2.is_orthogonal_system(&simples).unwrap());
        let bad = a2.set([v(0, 1), v(1, 2)]).unwrap();
        assert_eq!(
            a2.orthogonality_witness(&bad).unwrap(),
            Some(Witness::NonzeroHom { from: v(1, 2), to: v(0, 1), dim: 1 })
        );
        assert!(a2.is_orthogonal_system(&ObjectSet::new()).unwrap());
    }

    #[test]
    fn sms_examples_on_a2() {
        let a2 = cat(Family::A, 2, 2, 2, 1);
        let top = a2.set([v(0, 2), v(1, 2)]).unwrap();
        let report = a2.check_all(&top).unwrap();
        assert!(report.is_sms && report.orthogonal && report.cardinality_ok && report.nakayama_stable);
        assert!(report.witnesses.is_empty());
        let empty = a2.check_all(&ObjectSet::new()).unwrap();
        assert!(!empty.is_sms && !empty.weak_generating);
        assert!(empty.witnesses.contains(&Witness::EmptySetNotSms));
    }

    #[test]
    fn perp_examples() {
        let d6 = cat(Family::D, 6, 1, 3, 1);
        let all = d6.all();
        assert!(d6.two_sided_perp(&all).unwrap().is_empty());
        assert!(d6.left_perp(&all).unwrap().is_empty());
        assert!(d6.right_perp(&all).unwrap().is_empty());
        let empty = ObjectSet::new();
        assert_eq!(d6.two_sided_perp(&empty).unwrap(), all);
        // High vertex S₀ = (1,6) with m = 2: the perp is {(3,1)} ∪ ∅ up to τ^{-3}.
        let s0 = d6.set([v(1, 6)]).unwrap();
        let expected = d6.set_of_lifts([v(3, 1)]).unwrap();
        assert_eq!(d6.two_sided_perp(&s0).unwrap(), expected);
    }

    #[test]
    fn rejects_non_canonical() {
        let a2 = cat(Family::A, 2, 2, 2, 1);
        assert!(matches!(a2.stable_hom_dim(v(2, 1), v(0, 1)), Err(Error::NotCanonical(_))));
        assert!(a2.set([v(5, 1)]).is_err());
    }
}

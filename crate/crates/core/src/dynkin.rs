//! Dynkin diagrams, the translation quiver ZΔ and its quotients ZΔ/⟨στ^{-r}⟩.
//!
//! Vertices of ZΔ are written `(p, q)` with `q` a vertex of Δ and `p` the
//! τ-column. Every diagram is oriented so that each edge `a → b` has `a < b`;
//! for an edge `a → b` the quiver ZΔ has arrows `(p, a) → (p, b)` and
//! `(p, b) → (p + 1, a)`, and `τ(p, q) = (p − 1, q)`.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    D,
    E,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A => "A",
            Family::D => "D",
            Family::E => "E",
        })
    }
}

/// Largest supported number of vertices of Δ.
pub const MAX_RANK: u32 = 1024;

/// Largest supported quotient shift `r`.
pub const MAX_SHIFT: u64 = 1 << 31;

/// A simply-laced Dynkin diagram with the vertex enumeration
/// `1 → 2 → … → n` for A, `1 → … → n−2 → n−1` plus `n−2 → n` for D, and
/// `1 → 2 → 3 → … → n−1` plus `3 → n` for E.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DynkinDiagram {
    family: Family,
    n: u32,
    edges: Vec<(u32, u32)>,
}

impl DynkinDiagram {
    pub fn new(family: Family, n: u32) -> Result<Self> {
        let ok = match family {
            Family::A => n >= 1,
            Family::D => n >= 4,
            Family::E => (6..=8).contains(&n),
        };
        if !ok {
            return Err(Error::InvalidDiagram(format!("{family}_{n}")));
        }
        if n > MAX_RANK {
            return Err(Error::InvalidParameter(format!("rank {n} exceeds {MAX_RANK}")));
        }
        let edges = match family {
            Family::A => (1..n).map(|a| (a, a + 1)).collect(),
            Family::D => {
                let mut e: Vec<_> = (1..n - 1).map(|a| (a, a + 1)).collect();
                e.push((n - 2, n));
                e
            }
            Family::E => {
                let mut e: Vec<_> = (1..n - 1).map(|a| (a, a + 1)).collect();
                e.push((3, n));
                e
            }
        };
        Ok(DynkinDiagram { family, n, edges })
    }

    pub fn a(n: u32) -> Self {
        Self::new(Family::A, n).expect("A_n with n >= 1")
    }

    pub fn d(n: u32) -> Self {
        Self::new(Family::D, n).expect("D_n with n >= 4")
    }

    pub fn e(n: u32) -> Self {
        Self::new(Family::E, n).expect("E_n with n in 6..=8")
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// The bound beyond which every path of ZΔ vanishes in the mesh category
    /// (the Coxeter number minus one).
    pub fn m_delta(&self) -> i64 {
        let n = i64::from(self.n);
        match (self.family, self.n) {
            (Family::A, _) => n,
            (Family::D, _) => 2 * n - 3,
            (Family::E, 6) => 11,
            (Family::E, 7) => 17,
            (Family::E, _) => 29,
        }
    }

    /// Oriented edges `(a, b)` meaning `a → b`, always with `a < b`.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn contains(&self, v: Vertex) -> bool {
        (1..=self.n).contains(&v.q)
    }

    /// For D_n: rows `n − 1` and `n` are high, the rest low. Other families
    /// have no high rows.
    pub fn is_high(&self, q: u32) -> bool {
        self.family == Family::D && q + 1 >= self.n
    }

    /// Direct successors of `v` in ZΔ.
    pub fn successors(&self, v: Vertex) -> Vec<Vertex> {
        let mut out = Vec::with_capacity(3);
        for &(a, b) in &self.edges {
            if v.q == a {
                out.push(Vertex::new(v.p, b));
            }
            if v.q == b {
                out.push(Vertex::new(v.p + 1, a));
            }
        }
        out
    }

    /// Direct predecessors of `v` in ZΔ.
    pub fn predecessors(&self, v: Vertex) -> Vec<Vertex> {
        let mut out = Vec::with_capacity(3);
        for &(a, b) in &self.edges {
            if v.q == b {
                out.push(Vertex::new(v.p, a));
            }
            if v.q == a {
                out.push(Vertex::new(v.p - 1, b));
            }
        }
        out
    }

    pub fn has_arrow(&self, from: Vertex, to: Vertex) -> bool {
        self.successors(from).contains(&to)
    }
}

impl fmt::Display for DynkinDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.family, self.n)
    }
}

/// A vertex `(p, q)` of ZΔ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Vertex {
    pub p: i64,
    pub q: u32,
}

impl Vertex {
    pub const fn new(p: i64, q: u32) -> Self {
        Vertex { p, q }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// `τ^power (p, q) = (p − power, q)`.
pub fn tau(v: Vertex, power: i64) -> Vertex {
    Vertex::new(v.p - power, v.q)
}

/// Frequency `f` of an Asashiba type, kept in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Frequency {
    num: u64,
    den: u64,
}

impl Frequency {
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if num == 0 || den == 0 {
            return Err(Error::InvalidParameter(format!(
                "frequency {num}/{den} must be positive"
            )));
        }
        let g = num.gcd(&den);
        Ok(Frequency {
            num: num / g,
            den: den / g,
        })
    }

    pub fn numerator(&self) -> u64 {
        self.num
    }

    pub fn denominator(&self) -> u64 {
        self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    /// `self · k` if it is an integer.
    fn times(&self, k: u64) -> Option<u64> {
        let prod = self.num.checked_mul(k)?;
        (prod % self.den == 0).then_some(prod / self.den)
    }
}

impl fmt::Display for Frequency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// The eight families of types of representation-finite self-injective
/// algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TypeFamily {
    /// `(A_n, s/n, 1)`: self-injective Nakayama algebras.
    Nakayama,
    /// `(A_{2p+1}, s, 2)`.
    ATwisted,
    /// `(D_n, s, 1)`.
    D,
    /// `(D_{3m}, s/3, 1)` with `3 ∤ s`.
    DThird,
    /// `(D_n, s, 2)`.
    DTwisted,
    /// `(D_4, s, 3)`.
    DTriality,
    /// `(E_n, s, 1)`.
    E,
    /// `(E_6, s, 2)`.
    E6Twisted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SigmaKind {
    Identity,
    AFlip,
    DSwap,
    D4Triality,
    E6Flip,
}

/// The generator `στ^{-r}` of the group defining the stable AR quiver.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuotientGenerator {
    pub sigma_kind: SigmaKind,
    /// The τ-power applied before σ, i.e. `−r`.
    pub shift: i64,
}

/// An Asashiba type `(Δ, f, t)` with its derived invariants.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RfsType {
    diagram: DynkinDiagram,
    f: Frequency,
    t: u32,
    r: i64,
    simple_count: u64,
    family: TypeFamily,
    /// Metadata only: non-standard algebras share the combinatorics of their
    /// standard counterpart.
    pub standard: bool,
}

/// Checks `(family_n, f_numerator/f_denominator, t)` against the
/// classification and computes `r = f·m_Δ` and `n·f`.
///
/// A D-type frequency written with denominator 3 names the family
/// `(D_{3m}, s/3, 1)` and its numerator is read as `s`, so `3/3` is rejected
/// because `3 | s`.
pub fn validate_type(family: Family, n: u32, f_numerator: u64, f_denominator: u64, t: u32) -> Result<RfsType> {
    if !(1..=3).contains(&t) {
        return Err(Error::InvalidParameter(format!("t = {t} must be 1, 2 or 3")));
    }
    let diagram = DynkinDiagram::new(family, n)?;
    let f = Frequency::new(f_numerator, f_denominator)?;
    let label = format!("({diagram}, {f_numerator}/{f_denominator}, {t})");

    let m = diagram.m_delta() as u64;
    let r = f
        .times(m)
        .ok_or_else(|| Error::NonIntegralInvariant(label.clone(), "r = f·m_Δ"))?;
    let simple_count = f
        .times(u64::from(n))
        .ok_or_else(|| Error::NonIntegralInvariant(label.clone(), "n·f"))?;
    if r > MAX_SHIFT {
        return Err(Error::InvalidParameter(format!("{label}: r = {r} exceeds {MAX_SHIFT}")));
    }

    let literal_third = family == Family::D && t == 1 && f_denominator == 3;
    let type_family = match (family, t) {
        (Family::A, 1) => Some(TypeFamily::Nakayama),
        (Family::A, 2) if n % 2 == 1 && n >= 3 && f.is_integer() => Some(TypeFamily::ATwisted),
        (Family::D, 1) if literal_third => {
            (n.is_multiple_of(3) && n / 3 >= 2 && !f_numerator.is_multiple_of(3)).then_some(TypeFamily::DThird)
        }
        (Family::D, 1) if f.is_integer() => Some(TypeFamily::D),
        (Family::D, 1) if f.denominator() == 3 && n.is_multiple_of(3) && n / 3 >= 2 => Some(TypeFamily::DThird),
        (Family::D, 2) if f.is_integer() => Some(TypeFamily::DTwisted),
        (Family::D, 3) if n == 4 && f.is_integer() => Some(TypeFamily::DTriality),
        (Family::E, 1) if f.is_integer() => Some(TypeFamily::E),
        (Family::E, 2) if n == 6 && f.is_integer() => Some(TypeFamily::E6Twisted),
        _ => None,
    };
    let type_family = type_family.ok_or(Error::TypeNotInClassification(label))?;

    Ok(RfsType {
        diagram,
        f,
        t,
        r: r as i64,
        simple_count,
        family: type_family,
        standard: true,
    })
}

impl RfsType {
    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    pub fn n(&self) -> u32 {
        self.diagram.n
    }

    pub fn f(&self) -> Frequency {
        self.f
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn m_delta(&self) -> i64 {
        self.diagram.m_delta()
    }

    /// Number of isoclasses of simple modules, `n·f`.
    pub fn simple_count(&self) -> u64 {
        self.simple_count
    }

    pub fn type_family(&self) -> TypeFamily {
        self.family
    }

    /// Number of indecomposable non-projective modules, `n·r`.
    pub fn object_count(&self) -> usize {
        self.diagram.n as usize * self.r as usize
    }

    pub fn is_symmetric(&self) -> bool {
        match self.family {
            TypeFamily::Nakayama => u64::from(self.n()) % self.simple_count == 0,
            TypeFamily::DThird => self.f.numerator() == 1,
            TypeFamily::D | TypeFamily::E => self.f.numerator() == 1 && self.f.is_integer(),
            _ => false,
        }
    }

    pub fn generator(&self) -> QuotientGenerator {
        let sigma_kind = match self.family {
            TypeFamily::ATwisted => SigmaKind::AFlip,
            TypeFamily::DTwisted => SigmaKind::DSwap,
            TypeFamily::DTriality => SigmaKind::D4Triality,
            TypeFamily::E6Twisted => SigmaKind::E6Flip,
            _ => SigmaKind::Identity,
        };
        QuotientGenerator {
            sigma_kind,
            shift: -self.r,
        }
    }

    /// Width `t·r` of the fundamental strip used for canonical representatives.
    pub fn period(&self) -> i64 {
        i64::from(self.t) * self.r
    }

    /// `g = στ^{-r}` applied `power` times (negative powers allowed).
    pub fn apply_generator(&self, v: Vertex, power: i64) -> Vertex {
        let kind = self.generator().sigma_kind;
        let mut w = v;
        if power >= 0 {
            for _ in 0..power {
                w = sigma_of(kind, &self.diagram, tau(w, -self.r), 1);
            }
        } else {
            let inv = i64::from(self.t) - 1;
            for _ in 0..(-power) {
                w = tau(sigma_of(kind, &self.diagram, w, inv), self.r);
            }
        }
        w
    }

    /// The orbit representative with `p ∈ [0, t·r)` that is smallest in
    /// `(p, q)` order.
    pub fn canonical(&self, v: Vertex) -> Vertex {
        let period = self.period();
        let mut best: Option<Vertex> = None;
        let mut w = v;
        for _ in 0..self.t {
            let cand = Vertex::new(w.p.rem_euclid(period), w.q);
            best = Some(match best {
                Some(b) if b <= cand => b,
                _ => cand,
            });
            w = self.apply_generator(w, 1);
        }
        best.expect("t >= 1")
    }

    pub fn is_canonical(&self, v: Vertex) -> bool {
        self.diagram.contains(v) && self.canonical(v) == v
    }

    /// The `n·r` canonical vertices, sorted.
    pub fn all_objects(&self) -> Vec<Vertex> {
        let mut out = Vec::with_capacity(self.object_count());
        for p in 0..self.period() {
            for q in 1..=self.n() {
                let v = Vertex::new(p, q);
                if self.canonical(v) == v {
                    out.push(v);
                }
            }
        }
        out
    }

    /// The Nakayama functor on the stable AR quiver: `canonical(τ^{-m_Δ} v)`.
    pub fn nu(&self, v: Vertex) -> Vertex {
        self.canonical(tau(v, -self.m_delta()))
    }
}

impl fmt::Display for RfsType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.diagram, self.f, self.t)
    }
}

fn sigma_of(kind: SigmaKind, diagram: &DynkinDiagram, v: Vertex, times: i64) -> Vertex {
    let mut w = v;
    for _ in 0..times {
        w = sigma_once(kind, diagram, w);
    }
    w
}

fn sigma_once(kind: SigmaKind, diagram: &DynkinDiagram, v: Vertex) -> Vertex {
    let n = diagram.n();
    let Vertex { p, q } = v;
    match kind {
        SigmaKind::Identity => v,
        SigmaKind::AFlip => {
            let half = i64::from((n - 1) / 2);
            Vertex::new(p + i64::from(q) - half - 1, n + 1 - q)
        }
        SigmaKind::DSwap => match q {
            _ if q == n - 1 => Vertex::new(p, n),
            _ if q == n => Vertex::new(p, n - 1),
            _ => v,
        },
        SigmaKind::D4Triality => match q {
            1 => Vertex::new(p - 1, 3),
            3 => Vertex::new(p, 4),
            4 => Vertex::new(p + 1, 1),
            _ => v,
        },
        SigmaKind::E6Flip => match q {
            1 => Vertex::new(p - 2, 5),
            2 => Vertex::new(p - 1, 4),
            4 => Vertex::new(p + 1, 2),
            5 => Vertex::new(p + 2, 1),
            _ => v,
        },
    }
}

/// The automorphism σ of ZΔ attached to the type.
pub fn sigma(rfs: &RfsType, v: Vertex) -> Vertex {
    sigma_of(rfs.generator().sigma_kind, rfs.diagram(), v, 1)
}

/// σ of the given kind acting on `diagram`, without reference to a type.
pub fn sigma_kind_apply(kind: SigmaKind, diagram: &DynkinDiagram, v: Vertex) -> Vertex {
    sigma_once(kind, diagram, v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(family: Family, n: u32, num: u64, den: u64, t: u32) -> RfsType {
        validate_type(family, n, num, den, t).unwrap()
    }

    #[test]
    fn classify_examples() {
        let a = ty(Family::A, 3, 4, 3, 1);
        assert_eq!((a.m_delta(), a.r(), a.simple_count()), (3, 4, 4));
        let d = ty(Family::D, 6, 1, 3, 1);
        assert_eq!((d.m_delta(), d.r(), d.simple_count()), (9, 3, 2));
        assert!(matches!(
            validate_type(Family::D, 6, 3, 3, 1),
            Err(Error::TypeNotInClassification(_))
        ));
    }

    #[test]
    fn classify_rejections() {
        assert!(matches!(validate_type(Family::D, 6, 1, 2, 1), Err(Error::NonIntegralInvariant(..))));
        assert!(matches!(validate_type(Family::A, 3, 1, 2, 1), Err(Error::NonIntegralInvariant(..))));
        assert!(matches!(validate_type(Family::A, 4, 1, 1, 2), Err(Error::TypeNotInClassification(_))));
        assert!(matches!(validate_type(Family::A, 1, 1, 1, 2), Err(Error::TypeNotInClassification(_))));
        assert!(matches!(validate_type(Family::D, 5, 1, 1, 3), Err(Error::TypeNotInClassification(_))));
        assert!(matches!(validate_type(Family::E, 7, 1, 1, 2), Err(Error::TypeNotInClassification(_))));
        assert!(matches!(validate_type(Family::D, 3, 1, 1, 1), Err(Error::InvalidDiagram(_))));
        assert!(matches!(validate_type(Family::A, 3, 1, 1, 4), Err(Error::InvalidParameter(_))));
        assert!(matches!(validate_type(Family::A, 3, 0, 1, 1), Err(Error::InvalidParameter(_))));
        assert!(matches!(validate_type(Family::A, 5000, 1, 1, 1), Err(Error::InvalidParameter(_))));
        assert!(matches!(validate_type(Family::A, 1, u64::MAX, 1, 1), Err(Error::InvalidParameter(_))));
        // D_3m with f = 2/3 is family (d); D_6 with f = 2 is family (c).
        assert_eq!(ty(Family::D, 6, 2, 3, 1).type_family(), TypeFamily::DThird);
        assert_eq!(ty(Family::D, 6, 2, 1, 1).type_family(), TypeFamily::D);
        // A_1 is accepted for every s.
        assert_eq!(ty(Family::A, 1, 3, 1, 1).object_count(), 3);
    }

    #[test]
    fn symmetric_flags() {
        assert!(ty(Family::A, 2, 2, 2, 1).is_symmetric());
        assert!(ty(Family::A, 6, 2, 6, 1).is_symmetric());
        assert!(!ty(Family::A, 3, 4, 3, 1).is_symmetric());
        assert!(ty(Family::D, 6, 1, 3, 1).is_symmetric());
        assert!(!ty(Family::D, 6, 2, 3, 1).is_symmetric());
        assert!(ty(Family::D, 4, 1, 1, 1).is_symmetric());
        assert!(!ty(Family::D, 4, 2, 1, 1).is_symmetric());
        assert!(!ty(Family::D, 4, 1, 1, 2).is_symmetric());
        assert!(ty(Family::E, 6, 1, 1, 1).is_symmetric());
        assert!(!ty(Family::E, 6, 1, 1, 2).is_symmetric());
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau(Vertex::new(0, 2), 1), Vertex::new(-1, 2));
        assert_eq!(tau(Vertex::new(5, 1), 0), Vertex::new(5, 1));
        assert_eq!(tau(Vertex::new(1, 4), -3), Vertex::new(4, 4));
    }

    #[test]
    fn sigma_examples() {
        let a3 = ty(Family::A, 3, 1, 1, 2);
        assert_eq!(sigma(&a3, Vertex::new(0, 1)), Vertex::new(-1, 3));
        let d4 = ty(Family::D, 4, 1, 1, 2);
        assert_eq!(sigma(&d4, Vertex::new(2, 4)), Vertex::new(2, 3));
        let id = ty(Family::E, 7, 1, 1, 1);
        assert_eq!(sigma(&id, Vertex::new(3, 5)), Vertex::new(3, 5));
    }

    #[test]
    fn canonical_examples() {
        let a2 = ty(Family::A, 2, 2, 2, 1);
        assert_eq!(a2.canonical(Vertex::new(5, 1)), Vertex::new(1, 1));
        let d4 = ty(Family::D, 4, 1, 1, 3);
        assert_eq!(d4.r(), 5);
        let v = Vertex::new(0, 1);
        let gv = sigma(&d4, tau(v, -5));
        assert_eq!(d4.canonical(gv), d4.canonical(v));
        let a3 = ty(Family::A, 3, 4, 3, 1);
        assert_eq!(a3.canonical(Vertex::new(-1, 2)), Vertex::new(3, 2));
    }

    #[test]
    fn object_counts() {
        let a2 = ty(Family::A, 2, 2, 2, 1);
        assert_eq!(
            a2.all_objects(),
            vec![Vertex::new(0, 1), Vertex::new(0, 2), Vertex::new(1, 1), Vertex::new(1, 2)]
        );
        assert_eq!(ty(Family::A, 3, 4, 3, 1).all_objects().len(), 12);
        assert_eq!(ty(Family::E, 6, 1, 1, 1).all_objects().len(), 66);
        for t in [ty(Family::A, 5, 1, 1, 2), ty(Family::D, 4, 1, 1, 3), ty(Family::E, 6, 2, 1, 2)] {
            assert_eq!(t.all_objects().len(), t.object_count(), "{t}");
        }
    }

    #[test]
    fn generator_inverse() {
        for t in [ty(Family::A, 5, 1, 1, 2), ty(Family::D, 4, 1, 1, 3), ty(Family::E, 6, 1, 1, 2)] {
            for v in t.all_objects() {
                assert_eq!(t.apply_generator(t.apply_generator(v, 3), -3), v);
            }
        }
    }
}

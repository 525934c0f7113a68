//! Enumeration of simple-minded systems and extension of ν-stable orthogonal
//! systems.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use crate::dynkin::{TypeFamily, Vertex};
use crate::error::{Error, Result};
use crate::nakayama::NakayamaAlgebra;
use crate::stable::{ObjectSet, StableCategory};

pub const DEFAULT_MAX_NODES: u64 = 50_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    /// Chosen from the type family.
    #[default]
    Auto,
    Generic,
    Nakayama,
    D3m,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub max_nodes: u64,
    pub verify_each: bool,
    pub strategy: Strategy,
    pub parallel: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_nodes: DEFAULT_MAX_NODES,
            verify_each: false,
            strategy: Strategy::Auto,
            parallel: false,
        }
    }
}

impl SearchConfig {
    pub fn with_budget(max_nodes: u64) -> Result<Self> {
        if max_nodes == 0 {
            return Err(Error::InvalidParameter("budget must be positive".into()));
        }
        Ok(SearchConfig {
            max_nodes,
            ..Self::default()
        })
    }
}

/// Result of a search. When the budget ran out, `sets` holds what was found
/// so far and `exhaustive` is false.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    pub sets: Vec<ObjectSet>,
    pub exhaustive: bool,
    pub nodes: u64,
    pub budget: u64,
}

impl Enumeration {
    pub fn into_exhaustive(self) -> Result<Vec<ObjectSet>> {
        if self.exhaustive {
            Ok(self.sets)
        } else {
            Err(Error::BudgetExceeded { budget: self.budget })
        }
    }
}

#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    fn full(n: usize) -> Self {
        let mut b = Self::new(n);
        for i in 0..n {
            b.set(i);
        }
        b
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn or(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a | b).collect())
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &word)| {
            (0..64).filter(move |b| word >> b & 1 == 1).map(move |b| w * 64 + b)
        })
    }
}

impl PartialEq for Bits {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

struct Budget {
    nodes: AtomicU64,
    max: u64,
    stop: AtomicBool,
}

impl Budget {
    fn new(max: u64) -> Self {
        Budget {
            nodes: AtomicU64::new(0),
            max,
            stop: AtomicBool::new(false),
        }
    }

    /// Counts one node; false once the budget is spent.
    fn tick(&self) -> bool {
        if self.stop.load(Ordering::Relaxed) {
            return false;
        }
        if self.nodes.fetch_add(1, Ordering::Relaxed) >= self.max {
            self.stop.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }

    fn exhausted(&self) -> bool {
        self.stop.load(Ordering::Relaxed)
    }

    fn used(&self) -> u64 {
        self.nodes.load(Ordering::Relaxed).min(self.max)
    }
}

struct OrbitSearch<'a> {
    cat: &'a StableCategory,
    orbits: Vec<Vec<usize>>,
    compatible: Vec<Vec<bool>>,
    target: usize,
}

impl OrbitSearch<'_> {
    fn dfs(&self, budget: &Budget, start: usize, chosen: &mut Vec<usize>, size: usize, out: &mut Vec<ObjectSet>) {
        if !budget.tick() {
            return;
        }
        if size == self.target {
            out.push(ObjectSet::from_canonical(
                chosen.iter().flat_map(|&o| self.orbits[o].iter().map(|&i| self.cat.objects()[i])),
            ));
            return;
        }
        let remaining = self.target - size;
        for o in start..self.orbits.len() {
            if self.orbits[o].len() > remaining || !chosen.iter().all(|&c| self.compatible[c][o]) {
                continue;
            }
            chosen.push(o);
            self.dfs(budget, o + 1, chosen, size + self.orbits[o].len(), out);
            chosen.pop();
            if budget.exhausted() {
                return;
            }
        }
    }
}

fn orthogonal_indices(cat: &StableCategory, idx: &[usize]) -> bool {
    idx.iter()
        .all(|&i| idx.iter().all(|&j| cat.hom_idx(i, j) == u32::from(i == j)))
}

/// All sms's, as unions of pairwise orthogonal ν-orbits with `n·f` objects in
/// total, sorted.
pub fn enumerate_sms(cat: &StableCategory, cfg: &SearchConfig) -> Result<Enumeration> {
    if cfg.max_nodes == 0 {
        return Err(Error::InvalidParameter("budget must be positive".into()));
    }
    let orbits: Vec<Vec<usize>> = cat
        .nu_orbits()
        .into_iter()
        .filter(|o| orthogonal_indices(cat, o))
        .collect();
    let compatible: Vec<Vec<bool>> = orbits
        .iter()
        .map(|a| {
            orbits
                .iter()
                .map(|b| a.iter().all(|&i| b.iter().all(|&j| cat.hom_idx(i, j) == 0 && cat.hom_idx(j, i) == 0)))
                .collect()
        })
        .collect();
    let search = OrbitSearch {
        cat,
        orbits,
        compatible,
        target: cat.rfs().simple_count() as usize,
    };
    let budget = Budget::new(cfg.max_nodes);
    let mut sets = if cfg.parallel {
        budget.tick();
        let target = search.target;
        let branches: Vec<Vec<ObjectSet>> = (0..search.orbits.len())
            .into_par_iter()
            .filter(|&o| search.orbits[o].len() <= target)
            .map(|o| {
                let mut out = Vec::new();
                let mut chosen = vec![o];
                search.dfs(&budget, o + 1, &mut chosen, search.orbits[o].len(), &mut out);
                out
            })
            .collect();
        branches.into_iter().flatten().collect()
    } else {
        let mut out = Vec::new();
        search.dfs(&budget, 0, &mut Vec::new(), 0, &mut out);
        out
    };
    sets.sort();
    if cfg.verify_each {
        for s in &sets {
            if !cat.is_sms(s)? {
                return Err(Error::InvariantViolated(format!("{s} passes the three conditions but is not an sms")));
            }
        }
    }
    Ok(Enumeration {
        sets,
        exhaustive: !budget.exhausted(),
        nodes: budget.used(),
        budget: cfg.max_nodes,
    })
}

/// Number of distinct ν-orbits of high vertices of ZD_n in `set`.
pub fn high_orbit_count(cat: &StableCategory, set: &ObjectSet) -> Result<usize> {
    let d = cat.rfs().diagram();
    let mut seen = std::collections::BTreeSet::new();
    for &v in set {
        if d.is_high(v.q) {
            let orbit = cat.nu_orbit(v)?;
            seen.insert(orbit.iter().next().copied());
        }
    }
    Ok(seen.len())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Census {
    /// High ν-orbit count of each sms, in list order.
    pub high_orbits: Vec<usize>,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterizationReport {
    /// Orthogonal weakly generating sets, found over arbitrary bricks.
    pub direct: Vec<ObjectSet>,
    /// ν-stable orthogonal sets of cardinality `n·f`.
    pub three_conditions: Vec<ObjectSet>,
    /// Output of [`enumerate_sms`].
    pub orbit_search: Vec<ObjectSet>,
    pub equal: bool,
    /// Present for `(D_{3m}, s/3, 1)`: each sms has exactly one high ν-orbit.
    pub census: Option<Census>,
    pub nodes: u64,
}

/// Checks that sms's, ν-stable orthogonal sets of size `n·f`, and the orbit
/// search all agree, by enumerating every orthogonal set of bricks.
pub fn verify_characterization(cat: &StableCategory, cfg: &SearchConfig) -> Result<CharacterizationReport> {
    let n = cat.len();
    let bricks: Vec<usize> = (0..n).filter(|&i| cat.hom_idx(i, i) == 1).collect();
    let mut adj = vec![Bits::new(bricks.len()); bricks.len()];
    for (a, &i) in bricks.iter().enumerate() {
        for (b, &j) in bricks.iter().enumerate() {
            if a != b && cat.hom_idx(i, j) == 0 && cat.hom_idx(j, i) == 0 {
                adj[a].set(b);
            }
        }
    }
    // gen[b]: objects with a nonzero map to brick b.
    let gen: Vec<Bits> = bricks
        .iter()
        .map(|&j| {
            let mut g = Bits::new(n);
            for x in 0..n {
                if cat.hom_idx(x, j) > 0 {
                    g.set(x);
                }
            }
            g
        })
        .collect();
    let nf = cat.rfs().simple_count() as usize;
    let full = Bits::full(n);
    let budget = Budget::new(cfg.max_nodes);
    let mut direct = Vec::new();
    let mut three = Vec::new();

    struct Frame {
        clique: Vec<usize>,
        cover: Bits,
        candidates: Bits,
    }
    let mut stack = vec![Frame {
        clique: Vec::new(),
        cover: Bits::new(n),
        candidates: Bits::full(bricks.len()),
    }];
    while let Some(frame) = stack.pop() {
        if !budget.tick() {
            break;
        }
        let members = || frame.clique.iter().map(|&b| bricks[b]);
        if !frame.clique.is_empty() {
            let set = ObjectSet::from_canonical(members().map(|i| cat.objects()[i]));
            if frame.cover == full {
                direct.push(set.clone());
            }
            if frame.clique.len() == nf && members().all(|i| frame.clique.iter().any(|&b| bricks[b] == cat.nu_idx(i))) {
                three.push(set);
            }
        }
        let last = frame.clique.last().map_or(0, |&b| b + 1);
        for b in frame.candidates.ones().filter(|&b| b >= last) {
            let mut clique = frame.clique.clone();
            clique.push(b);
            stack.push(Frame {
                clique,
                cover: frame.cover.or(&gen[b]),
                candidates: frame.candidates.and(&adj[b]),
            });
        }
    }
    if budget.exhausted() {
        return Err(Error::BudgetExceeded { budget: cfg.max_nodes });
    }
    direct.sort();
    three.sort();
    let orbit_search = enumerate_sms(cat, cfg)?.into_exhaustive()?;
    let equal = direct == three && three == orbit_search;
    let census = if cat.rfs().type_family() == TypeFamily::DThird {
        let high_orbits = direct
            .iter()
            .map(|s| high_orbit_count(cat, s))
            .collect::<Result<Vec<_>>>()?;
        let holds = high_orbits.iter().all(|&c| c == 1);
        Some(Census { high_orbits, holds })
    } else {
        None
    };
    Ok(CharacterizationReport {
        direct,
        three_conditions: three,
        orbit_search,
        equal,
        census,
        nodes: budget.used(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PickSource {
    Strategy,
    Fallback,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtensionStep {
    pub added: Vec<Vertex>,
    pub perp_before: usize,
    pub perp_after: usize,
    pub source: PickSource,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct ExtensionTrace {
    pub steps: Vec<ExtensionStep>,
    pub terminated: bool,
}

fn resolve(cat: &StableCategory, strategy: Strategy) -> Strategy {
    match strategy {
        Strategy::Auto => match cat.rfs().type_family() {
            TypeFamily::Nakayama => Strategy::Nakayama,
            TypeFamily::DThird => Strategy::D3m,
            _ => Strategy::Generic,
        },
        s => s,
    }
}

struct Extender<'a> {
    cat: &'a StableCategory,
    strategy: Strategy,
    nakayama: Option<(NakayamaAlgebra, crate::nakayama::GcdCover, StableCategory)>,
}

impl<'a> Extender<'a> {
    fn new(cat: &'a StableCategory, strategy: Strategy) -> Result<Self> {
        let strategy = resolve(cat, strategy);
        let nakayama = match strategy {
            Strategy::Nakayama => {
                let alg = NakayamaAlgebra::from_rfs(cat.rfs())?;
                let cover = alg.gcd_cover();
                let down = StableCategory::new(&cover.downstairs.rfs());
                Some((alg, cover, down))
            }
            Strategy::D3m if cat.rfs().type_family() != TypeFamily::DThird => {
                return Err(Error::InvalidParameter(format!("the D_3m strategy does not apply to {}", cat.rfs())));
            }
            _ => None,
        };
        Ok(Extender { cat, strategy, nakayama })
    }

    /// Candidate vertices proposed by the strategy, in order of preference.
    fn propose(&self, set: &ObjectSet, perp: &ObjectSet) -> Result<Vec<Vertex>> {
        let cat = self.cat;
        let first_brick = || -> Result<Vec<Vertex>> {
            for &v in perp {
                if cat.is_stable_brick(v)? {
                    return Ok(vec![v]);
                }
            }
            Ok(Vec::new())
        };
        match self.strategy {
            Strategy::Generic | Strategy::Auto => first_brick(),
            Strategy::Nakayama => {
                let (alg, cover, down) = self.nakayama.as_ref().expect("built for Nakayama");
                let projected = set
                    .iter()
                    .map(|&v| cover.project_vertex(v))
                    .collect::<Result<Vec<_>>>()?;
                let below = down.set(projected)?;
                let down_perp = down.two_sided_perp(&below)?;
                let Some(&x) = down_perp.iter().next() else {
                    return Ok(Vec::new());
                };
                let dalg = cover.downstairs;
                let mut pick = dalg.from_vertex(x)?;
                if !dalg.brick_criterion(pick.length)? {
                    pick = dalg.extension_pick(down, &below, pick)?;
                }
                let lifted = cover.preimage(&down.set([dalg.to_vertex(pick)?])?)?;
                debug_assert_eq!(alg.s() as usize % lifted.len().max(1), 0);
                Ok(lifted.to_vec().into_iter().take(1).collect())
            }
            Strategy::D3m => {
                let d = cat.rfs().diagram();
                let n = d.n();
                let m = n / 3;
                if !set.iter().any(|v| d.is_high(v.q)) {
                    if let Some(x) = perp.iter().find(|v| m <= v.q && v.q < 3 * m - 1) {
                        let rfs = cat.rfs();
                        return Ok(vec![rfs.canonical(Vertex::new(x.p, n)), rfs.canonical(Vertex::new(x.p, n - 1))]);
                    }
                }
                first_brick()
            }
        }
    }
}

/// Extends a ν-stable orthogonal system to an sms by repeatedly adding a
/// ν-orbit from the two-sided perp.
pub fn extend_to_sms(cat: &StableCategory, set: &ObjectSet, cfg: &SearchConfig) -> Result<(ObjectSet, ExtensionTrace)> {
    if let Some(w) = cat.orthogonality_witness(set)? {
        return Err(Error::PreconditionViolated(format!("not an orthogonal system: {w}")));
    }
    if !cat.is_nakayama_stable(set)? {
        return Err(Error::PreconditionViolated(format!("{set} is not Nakayama-stable")));
    }
    let ext = Extender::new(cat, cfg.strategy)?;
    let mut current = set.clone();
    let mut trace = ExtensionTrace::default();
    let mut perp = cat.two_sided_perp(&current)?;
    let max_steps = cat.len();
    while !perp.is_empty() {
        if trace.steps.len() >= max_steps {
            return Err(Error::InvariantViolated(format!("no termination within {max_steps} steps")));
        }
        let keeps_orthogonal = |v: Vertex| -> Result<Option<ObjectSet>> {
            if !perp.contains(&v) {
                return Ok(None);
            }
            let next = current.union(&cat.nu_orbit(v)?);
            Ok(cat.is_orthogonal_system(&next)?.then_some(next))
        };
        let mut chosen = None;
        for v in ext.propose(&current, &perp)? {
            if let Some(next) = keeps_orthogonal(v)? {
                chosen = Some((next, PickSource::Strategy));
                break;
            }
        }
        if chosen.is_none() {
            for &v in &perp {
                if let Some(next) = keeps_orthogonal(v)? {
                    chosen = Some((next, PickSource::Fallback));
                    break;
                }
            }
        }
        let (next, source) = chosen.ok_or(Error::NoValidAddition)?;
        if !cat.is_orthogonal_system(&next)? || !cat.is_nakayama_stable(&next)? {
            return Err(Error::InvariantViolated(format!("{next} is not a ν-stable orthogonal system")));
        }
        let next_perp = cat.two_sided_perp(&next)?;
        if next_perp.len() >= perp.len() {
            return Err(Error::InvariantViolated("two-sided perp did not shrink".into()));
        }
        trace.steps.push(ExtensionStep {
            added: next.iter().filter(|v| !current.contains(v)).copied().collect(),
            perp_before: perp.len(),
            perp_after: next_perp.len(),
            source,
        });
        current = next;
        perp = next_perp;
    }
    trace.terminated = true;
    if !cat.is_sms(&current)? {
        return Err(Error::InvariantViolated(format!("{current} has empty two-sided perp but is not an sms")));
    }
    Ok((current, trace))
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

    /// Brute force over all `nf`-subsets, checking the definition directly.
    fn brute_force_sms(c: &StableCategory) -> Vec<ObjectSet> {
        let objs = c.objects();
        let k = c.rfs().simple_count() as usize;
        let mut out = Vec::new();
        for mask in 0u64..(1 << objs.len()) {
            if mask.count_ones() as usize != k {
                continue;
            }
            let s = c.set((0..objs.len()).filter(|i| mask >> i & 1 == 1).map(|i| objs[i])).unwrap();
            if c.is_sms(&s).unwrap() {
                out.push(s);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn enumerate_a2() {
        let c = cat(Family::A, 2, 2, 2, 1);
        let sets = enumerate_sms(&c, &SearchConfig::default()).unwrap().into_exhaustive().unwrap();
        let expected = vec![c.set([v(0, 1), v(1, 1)]).unwrap(), c.set([v(0, 2), v(1, 2)]).unwrap()];
        assert_eq!(sets, expected);
        assert_eq!(brute_force_sms(&c), expected);
    }

    #[test]
    fn enumerate_matches_brute_force_on_small_types() {
        for c in [
            cat(Family::A, 1, 3, 1, 1),
            cat(Family::A, 3, 4, 3, 1),
            cat(Family::A, 4, 2, 4, 1),
            cat(Family::A, 3, 1, 1, 2),
            cat(Family::D, 4, 1, 1, 1),
        ] {
            let cfg = SearchConfig {
                verify_each: true,
                ..SearchConfig::default()
            };
            let sets = enumerate_sms(&c, &cfg).unwrap().into_exhaustive().unwrap();
            assert_eq!(sets, brute_force_sms(&c), "{}", c.rfs());
        }
    }

    #[test]
    fn parallel_matches_serial() {
        let c = cat(Family::D, 5, 1, 1, 1);
        let serial = enumerate_sms(&c, &SearchConfig::default()).unwrap();
        let parallel = enumerate_sms(
            &c,
            &SearchConfig {
                parallel: true,
                ..SearchConfig::default()
            },
        )
        .unwrap();
        assert_eq!(serial.sets, parallel.sets);
        assert!(parallel.exhaustive);
    }

    #[test]
    fn budget_is_reported() {
        let c = cat(Family::D, 5, 1, 1, 1);
        let e = enumerate_sms(&c, &SearchConfig::with_budget(3).unwrap()).unwrap();
        assert!(!e.exhaustive);
        assert_eq!(e.into_exhaustive(), Err(Error::BudgetExceeded { budget: 3 }));
        assert!(SearchConfig::with_budget(0).is_err());
        assert!(matches!(
            verify_characterization(&c, &SearchConfig::with_budget(3).unwrap()),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn characterization_examples() {
        let c = cat(Family::A, 2, 2, 2, 1);
        let r = verify_characterization(&c, &SearchConfig::default()).unwrap();
        assert!(r.equal);
        assert_eq!(r.direct.len(), 2);
        let d6 = cat(Family::D, 6, 1, 3, 1);
        let r = verify_characterization(&d6, &SearchConfig::default()).unwrap();
        assert!(r.equal);
        let census = r.census.unwrap();
        assert!(census.holds);
        assert_eq!(census.high_orbits.len(), r.direct.len());
    }

    #[test]
    fn extension_examples() {
        for c in [
            cat(Family::A, 3, 4, 3, 1),
            cat(Family::D, 4, 1, 1, 1),
            cat(Family::D, 6, 1, 3, 1),
            cat(Family::A, 5, 1, 1, 2),
        ] {
            let (sms, trace) = extend_to_sms(&c, &ObjectSet::new(), &SearchConfig::default()).unwrap();
            assert!(c.is_sms(&sms).unwrap());
            assert!(trace.terminated && !trace.steps.is_empty());
        }
        let d4 = cat(Family::D, 4, 1, 1, 1);
        let start = d4.nu_orbit(v(0, 1)).unwrap();
        let (sms, _) = extend_to_sms(&d4, &start, &SearchConfig::default()).unwrap();
        assert!(start.is_subset(&sms));
    }

    #[test]
    fn extension_rejects_unstable_input() {
        let c = cat(Family::A, 3, 4, 3, 1);
        let s = c.set([v(0, 1), v(1, 3), v(2, 1), v(3, 3)]).unwrap();
        assert!(c.is_orthogonal_system(&s).unwrap());
        assert!(matches!(
            extend_to_sms(&c, &s, &SearchConfig::default()),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn d3m_strategy_adds_high_vertex_first() {
        let c = cat(Family::D, 6, 1, 3, 1);
        // (0,2) has row m = 2, so it is not a brick and lies in the perp of ∅.
        let (_, trace) = extend_to_sms(&c, &ObjectSet::new(), &SearchConfig::default()).unwrap();
        let first = &trace.steps[0];
        assert_eq!(first.source, PickSource::Strategy);
        assert!(first.added.iter().all(|v| v.q >= 5));
    }
}

//! Recognizers and seeded generators for the constructive families
//! F1, H1 (minimum degree one) and F2¹⁻³, H2¹⁻³ (minimum degree two).
//!
//! Recognizers return a witness naming every role vertex and role set, or
//! `None` once every role assignment has been tried. Each witness type has a
//! `validate_*` function that re-checks the defining conditions edge by edge
//! from the witness alone.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Error;
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct F1Witness {
    pub x: usize,
    pub y: usize,
    pub w: usize,
    pub p: VertexSet,
    pub q: VertexSet,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct H1Witness {
    pub x1: usize,
    pub y1: usize,
    pub w1: usize,
    pub p1: VertexSet,
    pub q1: VertexSet,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct F2Witness {
    pub subfamily: u8,
    pub x: usize,
    pub y: usize,
    pub z: usize,
    pub l1: VertexSet,
    pub r1: VertexSet,
    pub r2: VertexSet,
    pub l2: VertexSet,
    pub w: VertexSet,
}

/// Primed roles of the H2 families (`x` stands for x′ and so on).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct H2Witness {
    pub subfamily: u8,
    pub x: usize,
    pub y: usize,
    pub z: usize,
    pub r1: VertexSet,
    pub l1: VertexSet,
    pub r2: VertexSet,
    pub w: VertexSet,
}

fn adjacent_to_all(g: &Graph, v: usize, s: VertexSet) -> bool {
    s.without(v).is_subset(g.neighbors(v))
}

// ---------------------------------------------------------------- F1 / H1

pub fn recognize_f1(g: &Graph) -> Option<F1Witness> {
    if !g.full_vertices().is_empty() {
        return None;
    }
    let all = g.vertices();
    for x in all.iter().filter(|&x| g.degree(x) == 1) {
        let y = g.neighbors(x).first()?;
        for w in all.iter().filter(|&w| w != x && w != y) {
            let rest = all.without(x).without(y).without(w);
            if rest.is_empty() || g.neighbors(w) != rest {
                continue;
            }
            let p: VertexSet = rest.iter().filter(|&v| adjacent_to_all(g, v, rest)).collect();
            let q = rest.difference(p);
            let cand = F1Witness { x, y, w, p, q };
            if validate_f1(g, &cand) {
                return Some(cand);
            }
        }
    }
    None
}

pub fn validate_f1(g: &Graph, wt: &F1Witness) -> bool {
    let F1Witness { x, y, w, p, q } = *wt;
    let roles = VertexSet::singleton(x).with(y).with(w);
    let pq = p.union(q);
    roles.len() == 3
        && p.is_disjoint(q)
        && roles.is_disjoint(pq)
        && roles.union(pq) == g.vertices()
        && !pq.is_empty()
        && (q.is_empty() || q.len() >= 2)
        && g.neighbors(x) == VertexSet::singleton(y)
        && g.neighbors(w) == pq
        && p.iter().all(|v| adjacent_to_all(g, v, pq))
        && q.is_subset(g.neighbors(y))
        && q.iter().all(|v| !adjacent_to_all(g, v, q))
        && g.full_vertices().is_empty()
}

pub fn recognize_h1(g: &Graph) -> Option<H1Witness> {
    let all = g.vertices();
    for x1 in all {
        for y1 in all.without(x1) {
            if g.has_edge(x1, y1) {
                continue;
            }
            let b1 = all.without(x1).without(y1);
            let nx = g.neighbors(x1);
            let Some(w1) = nx.first() else { continue };
            let cand = H1Witness { x1, y1, w1, p1: nx.without(w1), q1: b1.difference(nx) };
            if validate_h1(g, &cand) {
                return Some(cand);
            }
        }
    }
    None
}

pub fn validate_h1(g: &Graph, wt: &H1Witness) -> bool {
    let H1Witness { x1, y1, w1, p1, q1 } = *wt;
    let a1 = VertexSet::singleton(x1).with(y1);
    let b1 = p1.union(q1).with(w1);
    a1.len() == 2
        && !p1.contains(w1)
        && !q1.contains(w1)
        && p1.is_disjoint(q1)
        && a1.is_disjoint(b1)
        && a1.union(b1) == g.vertices()
        && !p1.union(q1).is_empty()
        && (q1.is_empty() || q1.len() >= 2)
        && !g.has_edge(x1, y1)
        && g.neighbors(y1) == b1
        && g.neighbors(x1) == p1.with(w1)
        && g.is_independent(b1)
}

// ---------------------------------------------------------------- F2

pub fn recognize_f2(g: &Graph) -> Option<F2Witness> {
    (1..=3).find_map(|k| recognize_f2_subfamily(g, k))
}

/// Membership in one subfamily `k ∈ {1, 2, 3}` of F2.
pub fn recognize_f2_subfamily(g: &Graph, k: u8) -> Option<F2Witness> {
    if g.min_degree() != 2 || !g.full_vertices().is_empty() {
        return None;
    }
    for x in g.vertices().iter().filter(|&x| g.degree(x) == 2) {
        let nx: Vec<usize> = g.neighbors(x).iter().collect();
        for (y, z) in [(nx[0], nx[1]), (nx[1], nx[0])] {
            let found = match k {
                1 => f2_first(g, x, y, z),
                2 => f2_second(g, x, y, z),
                3 => f2_third(g, x, y, z),
                _ => None,
            };
            if let Some(wt) = found {
                return Some(wt);
            }
        }
    }
    None
}

fn vx_of(g: &Graph, x: usize, y: usize, z: usize) -> VertexSet {
    g.vertices().without(x).without(y).without(z)
}

fn f2_first(g: &Graph, x: usize, y: usize, z: usize) -> Option<F2Witness> {
    let vx = vx_of(g, x, y, z);
    let e = VertexSet::EMPTY;
    let ok = !g.has_edge(y, z) && !vx.is_empty() && vx.is_subset(g.neighbors(y)) && vx.is_subset(g.neighbors(z));
    ok.then_some(F2Witness { subfamily: 1, x, y, z, l1: e, r1: vx, r2: e, l2: e, w: e })
}

fn f2_second(g: &Graph, x: usize, y: usize, z: usize) -> Option<F2Witness> {
    let vx = vx_of(g, x, y, z);
    let e = VertexSet::EMPTY;
    let l1 = vx.difference(g.neighbors(z));
    let r1 = vx.intersection(g.neighbors(z));
    let ok = !g.has_edge(y, z)
        && vx.is_subset(g.neighbors(y))
        && !l1.is_empty()
        && !r1.is_empty()
        && g.is_clique(l1);
    ok.then_some(F2Witness { subfamily: 2, x, y, z, l1, r1, r2: e, l2: e, w: e })
}

fn f2_third(g: &Graph, x: usize, y: usize, z: usize) -> Option<F2Witness> {
    let vx = vx_of(g, x, y, z);
    let (ny, nz) = (g.neighbors(y), g.neighbors(z));
    let l1 = vx.intersection(ny).difference(nz);
    let r1 = vx.intersection(ny).intersection(nz);
    let r2 = vx.intersection(nz).difference(ny);
    let l2 = vx.difference(ny).difference(nz);
    // the largest admissible W: every vertex adjacent to the rest of Vx
    let w: VertexSet = vx.iter().filter(|&v| adjacent_to_all(g, v, vx)).collect();
    if l1.is_empty() || r2.is_empty() || w.is_empty() || !l2.is_subset(w) {
        return None;
    }
    let joined = |v: usize, s: VertexSet| adjacent_to_all(g, v, s);
    if !r1.iter().all(|r| joined(r, l1) || joined(r, r2)) {
        return None;
    }
    let ok = if g.has_edge(y, z) {
        l1.iter().all(|l| joined(l, l1) || joined(l, r2)) && r2.iter().all(|r| joined(r, r2) || joined(r, l1))
    } else {
        g.is_clique(l1) && g.is_clique(r2)
    };
    ok.then_some(F2Witness { subfamily: 3, x, y, z, l1, r1, r2, l2, w })
}

pub fn validate_f2(g: &Graph, wt: &F2Witness) -> bool {
    let F2Witness { subfamily, x, y, z, l1, r1, r2, l2, w } = *wt;
    let core = VertexSet::singleton(x).with(y).with(z);
    let parts = [l1, r1, r2, l2];
    let vx = l1.union(r1).union(r2).union(l2);
    let pairwise_disjoint = parts.iter().enumerate().all(|(i, a)| parts[i + 1..].iter().all(|b| a.is_disjoint(*b)));
    let joined = |v: usize, s: VertexSet| adjacent_to_all(g, v, s);
    let common = core.len() == 3
        && pairwise_disjoint
        && core.is_disjoint(vx)
        && core.union(vx) == g.vertices()
        && w.is_subset(vx)
        && g.neighbors(x) == VertexSet::singleton(y).with(z)
        && g.min_degree() == 2
        && g.full_vertices().is_empty();
    if !common {
        return false;
    }
    match subfamily {
        1 => {
            l1.is_empty()
                && r2.is_empty()
                && l2.is_empty()
                && w.is_empty()
                && !r1.is_empty()
                && !g.has_edge(y, z)
                && r1.iter().all(|r| g.has_edge(r, y) && g.has_edge(r, z))
        }
        2 => {
            r2.is_empty()
                && l2.is_empty()
                && w.is_empty()
                && !l1.is_empty()
                && !r1.is_empty()
                && !g.has_edge(y, z)
                && l1.union(r1).is_subset(g.neighbors(y))
                && r1.is_subset(g.neighbors(z))
                && g.neighbors(z).is_disjoint(l1)
                && g.is_clique(l1)
        }
        3 => {
            let base = !l1.is_empty()
                && !r2.is_empty()
                && !w.is_empty()
                && l2.is_subset(w)
                && g.is_clique(w)
                && w.iter().all(|v| joined(v, l1.union(r1).union(r2)))
                && l1.union(r1).is_subset(g.neighbors(y))
                && g.neighbors(y).is_disjoint(r2.union(l2))
                && r1.union(r2).is_subset(g.neighbors(z))
                && g.neighbors(z).is_disjoint(l1.union(l2))
                && r1.iter().all(|r| joined(r, l1) || joined(r, r2));
            base && if g.has_edge(y, z) {
                l1.iter().all(|l| joined(l, l1) || joined(l, r2)) && r2.iter().all(|r| joined(r, r2) || joined(r, l1))
            } else {
                g.is_clique(l1) && g.is_clique(r2)
            }
        }
        _ => false,
    }
}

// ---------------------------------------------------------------- H2

pub fn recognize_h2(g: &Graph) -> Option<H2Witness> {
    (1..=3).find_map(|k| recognize_h2_subfamily(g, k))
}

pub fn recognize_h2_subfamily(g: &Graph, k: u8) -> Option<H2Witness> {
    h2_witnesses(g, k).into_iter().next()
}

/// Every role assignment placing `g` in subfamily `k` of H2.
pub fn h2_witnesses(g: &Graph, k: u8) -> Vec<H2Witness> {
    let mut found = Vec::new();
    let all = g.vertices();
    let e = VertexSet::EMPTY;
    for x in all {
        for y in all.without(x) {
            for z in all.without(x).without(y) {
                let rest = all.without(x).without(y).without(z);
                let cand = match k {
                    1 if y < z => H2Witness { subfamily: 1, x, y, z, r1: rest, l1: e, r2: e, w: e },
                    2 => {
                        let r1 = rest.intersection(g.neighbors(y));
                        H2Witness { subfamily: 2, x, y, z, r1, l1: rest.difference(r1), r2: e, w: e }
                    }
                    3 if y < z => {
                        let w = g.neighbors(x);
                        let others = rest.difference(w);
                        let (ny, nz) = (g.neighbors(y), g.neighbors(z));
                        H2Witness {
                            subfamily: 3,
                            x,
                            y,
                            z,
                            l1: others.intersection(ny).difference(nz),
                            r1: others.intersection(ny).intersection(nz),
                            r2: others.intersection(nz).difference(ny),
                            w,
                        }
                    }
                    _ => continue,
                };
                if validate_h2(g, &cand) {
                    found.push(cand);
                }
            }
        }
    }
    found
}

pub fn validate_h2(g: &Graph, wt: &H2Witness) -> bool {
    let H2Witness { subfamily, x, y, z, r1, l1, r2, w } = *wt;
    let core = VertexSet::singleton(x).with(y).with(z);
    let parts = [l1, r1, r2, w];
    let rest = l1.union(r1).union(r2).union(w);
    let pairwise_disjoint = parts.iter().enumerate().all(|(i, a)| parts[i + 1..].iter().all(|b| a.is_disjoint(*b)));
    if core.len() != 3 || !pairwise_disjoint || !core.is_disjoint(rest) || core.union(rest) != g.vertices() {
        return false;
    }
    match subfamily {
        1 => {
            l1.is_empty()
                && r2.is_empty()
                && w.is_empty()
                && !r1.is_empty()
                && g.is_clique(core)
                && g.is_independent(r1)
                && r1.iter().all(|r| g.has_edge(r, y) && g.has_edge(r, z))
        }
        2 => {
            r2.is_empty()
                && w.is_empty()
                && !l1.is_empty()
                && !r1.is_empty()
                && g.has_edge(x, y)
                && g.has_edge(y, z)
                && !g.has_edge(x, z)
                && r1.is_subset(g.neighbors(y))
                && g.neighbors(y).is_disjoint(l1)
                && l1.is_subset(g.neighbors(z))
                && g.is_independent(l1.union(r1))
                && l1.iter().all(|l| g.neighbors(l).is_subset(VertexSet::singleton(x).with(z)))
        }
        3 => {
            let yz = VertexSet::singleton(y).with(z);
            !w.is_empty()
                && g.neighbors(x) == w
                && g.is_independent(rest)
                && l1.union(r1).union(r2).iter().all(|v| !g.neighbors(v).is_disjoint(yz))
        }
        _ => false,
    }
}

// ---------------------------------------------------------------- generators

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FamilyId {
    F1,
    H1,
    F2(u8),
    H2(u8),
}

impl FamilyId {
    pub const ALL: [FamilyId; 8] = [
        FamilyId::F1,
        FamilyId::H1,
        FamilyId::F2(1),
        FamilyId::F2(2),
        FamilyId::F2(3),
        FamilyId::H2(1),
        FamilyId::H2(2),
        FamilyId::H2(3),
    ];

    /// Size parameters the generator reads, in spec-string order.
    pub fn keys(self) -> &'static [&'static str] {
        match self {
            FamilyId::F1 => &["P", "Q"],
            FamilyId::H1 => &["P1", "Q1"],
            FamilyId::F2(1) | FamilyId::H2(1) => &["R1"],
            FamilyId::F2(2) | FamilyId::H2(2) => &["L1", "R1"],
            FamilyId::F2(_) => &["L1", "R1", "R2", "L2", "W"],
            FamilyId::H2(_) => &["L1", "R1", "R2", "W"],
        }
    }

    /// Runs the matching recognizer.
    pub fn recognizes(self, g: &Graph) -> bool {
        match self {
            FamilyId::F1 => recognize_f1(g).is_some(),
            FamilyId::H1 => recognize_h1(g).is_some(),
            FamilyId::F2(k) => recognize_f2_subfamily(g, k).is_some(),
            FamilyId::H2(k) => recognize_h2_subfamily(g, k).is_some(),
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyId::F1 => write!(f, "f1"),
            FamilyId::H1 => write!(f, "h1"),
            FamilyId::F2(k) => write!(f, "f2.{k}"),
            FamilyId::H2(k) => write!(f, "h2.{k}"),
        }
    }
}

impl FromStr for FamilyId {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "f1" => Ok(FamilyId::F1),
            "h1" => Ok(FamilyId::H1),
            "f2.1" => Ok(FamilyId::F2(1)),
            "f2.2" => Ok(FamilyId::F2(2)),
            "f2.3" => Ok(FamilyId::F2(3)),
            "h2.1" => Ok(FamilyId::H2(1)),
            "h2.2" => Ok(FamilyId::H2(2)),
            "h2.3" => Ok(FamilyId::H2(3)),
            _ => Err(format!("unknown family `{s}`")),
        }
    }
}

/// Parsed generator request, e.g. `f2.3:L1=1,R1=0,R2=2,L2=0,W=1,seed=7`.
///
/// For `f2.3`, `W` is the total size of W: all of `L2` plus `W - L2`
/// vertices of `L1 ∪ R1 ∪ R2` picked by the seed. Missing sizes default to 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: FamilyId,
    pub sizes: BTreeMap<String, usize>,
    pub seed: u64,
}

impl FamilySpec {
    pub fn new(family: FamilyId, sizes: &[(&str, usize)], seed: u64) -> Self {
        FamilySpec { family, sizes: sizes.iter().map(|&(k, v)| (k.to_string(), v)).collect(), seed }
    }

    pub fn size(&self, key: &str) -> usize {
        self.sizes.get(key).copied().unwrap_or(0)
    }

    pub fn parse(text: &str) -> Result<Self, Error> {
        let fail = |reason: String| Error::FamilySpec { input: text.to_string(), reason };
        let (fam, params) = text.split_once(':').unwrap_or((text, ""));
        let family: FamilyId = fam.trim().parse().map_err(fail)?;
        let mut sizes = BTreeMap::new();
        let mut seed = 0;
        for item in params.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (k, v) = item.split_once('=').ok_or_else(|| fail(format!("`{item}` is not key=value")))?;
            let (k, v) = (k.trim(), v.trim());
            if k == "seed" {
                seed = v.parse().map_err(|_| fail(format!("bad seed `{v}`")))?;
                continue;
            }
            if !family.keys().contains(&k) {
                return Err(fail(format!("{family} takes {:?}, not `{k}`", family.keys())));
            }
            let n: usize = v.parse().map_err(|_| fail(format!("bad size `{v}` for {k}")))?;
            sizes.insert(k.to_string(), n);
        }
        Ok(FamilySpec { family, sizes, seed })
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.family)?;
        for k in self.family.keys() {
            write!(f, "{k}={},", self.size(k))?;
        }
        write!(f, "seed={}", self.seed)
    }
}

const MAX_RESAMPLES: usize = 64;

/// Consecutive vertex ranges for the role sets.
struct Layout {
    next: usize,
}

impl Layout {
    fn new(first: usize) -> Self {
        Layout { next: first }
    }
    fn take(&mut self, n: usize) -> VertexSet {
        let s = (self.next..self.next + n).collect();
        self.next += n;
        s
    }
}

fn join_all(g: &mut Graph, v: usize, s: VertexSet) {
    for u in s.without(v) {
        g.add_edge(v, u);
    }
}

fn make_clique(g: &mut Graph, s: VertexSet) {
    for v in s {
        join_all(g, v, s);
    }
}

fn random_edges(g: &mut Graph, a: VertexSet, b: VertexSet, p: f64, rng: &mut ChaCha8Rng) {
    for u in a {
        for v in b.iter().filter(|&v| v != u) {
            if (a.contains(v) && v < u) || g.has_edge(u, v) {
                continue;
            }
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
}

/// Builds a member of the requested family. Free choices come from the seed;
/// constraints the choices could break are repaired by resampling.
pub fn generate_family(spec: &FamilySpec) -> Result<Graph, Error> {
    let fail = |reason: String| Error::FamilySpec { input: spec.to_string(), reason };
    let sz = |k: &str| spec.size(k);
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    match spec.family {
        FamilyId::F1 => {
            let (np, nq) = (sz("P"), sz("Q"));
            if np + nq == 0 || nq == 1 {
                return Err(fail("need |P ∪ Q| ≥ 1 and |Q| ≠ 1".into()));
            }
            let mut lay = Layout::new(3);
            let (p, q) = (lay.take(np), lay.take(nq));
            let (x, y, w) = (0, 1, 2);
            for _ in 0..MAX_RESAMPLES {
                let mut g = Graph::empty(lay.next)?;
                g.add_edge(x, y);
                join_all(&mut g, w, p.union(q));
                for v in p {
                    join_all(&mut g, v, p.union(q));
                }
                join_all(&mut g, y, q);
                random_edges(&mut g, q, q, 0.5, &mut rng);
                random_edges(&mut g, VertexSet::singleton(y), p, 0.5, &mut rng);
                if q.iter().all(|v| !adjacent_to_all(&g, v, q)) {
                    return Ok(g);
                }
            }
            Err(Error::GenerationFailed { family: spec.family.to_string(), retries: MAX_RESAMPLES })
        }
        FamilyId::H1 => {
            let (np, nq) = (sz("P1"), sz("Q1"));
            if np + nq == 0 || nq == 1 {
                return Err(fail("need |P1 ∪ Q1| ≥ 1 and |Q1| ≠ 1".into()));
            }
            let mut lay = Layout::new(3);
            let (p, q) = (lay.take(np), lay.take(nq));
            let (x, y, w) = (0, 1, 2);
            let mut g = Graph::empty(lay.next)?;
            join_all(&mut g, y, p.union(q).with(w));
            join_all(&mut g, x, p.with(w));
            Ok(g)
        }
        FamilyId::F2(1) => {
            let nr = sz("R1");
            if nr == 0 {
                return Err(fail("need |R1| ≥ 1".into()));
            }
            let mut lay = Layout::new(3);
            let r1 = lay.take(nr);
            let mut g = Graph::empty(lay.next)?;
            g.add_edge(0, 1);
            g.add_edge(0, 2);
            join_all(&mut g, 1, r1);
            join_all(&mut g, 2, r1);
            random_edges(&mut g, r1, r1, 0.5, &mut rng);
            Ok(g)
        }
        FamilyId::F2(2) => {
            let (nl, nr) = (sz("L1"), sz("R1"));
            if nl == 0 || nr == 0 {
                return Err(fail("need |L1| ≥ 1 and |R1| ≥ 1".into()));
            }
            let mut lay = Layout::new(3);
            let (l1, r1) = (lay.take(nl), lay.take(nr));
            let (x, y, z) = (0, 1, 2);
            for _ in 0..MAX_RESAMPLES {
                let mut g = Graph::empty(lay.next)?;
                g.add_edge(x, y);
                g.add_edge(x, z);
                join_all(&mut g, y, l1.union(r1));
                join_all(&mut g, z, r1);
                make_clique(&mut g, l1);
                random_edges(&mut g, r1, r1, 0.5, &mut rng);
                random_edges(&mut g, l1, r1, 0.5, &mut rng);
                if g.min_degree() == 2 && g.full_vertices().is_empty() {
                    return Ok(g);
                }
            }
            Err(Error::GenerationFailed { family: spec.family.to_string(), retries: MAX_RESAMPLES })
        }
        FamilyId::F2(3) => generate_f2_third(spec, &mut rng),
        FamilyId::H2(1) => {
            let nr = sz("R1");
            if nr == 0 {
                return Err(fail("need |R1'| ≥ 1".into()));
            }
            let mut lay = Layout::new(3);
            let r1 = lay.take(nr);
            let (x, y, z) = (0, 1, 2);
            let mut g = Graph::empty(lay.next)?;
            make_clique(&mut g, [x, y, z].into_iter().collect());
            join_all(&mut g, y, r1);
            join_all(&mut g, z, r1);
            random_edges(&mut g, VertexSet::singleton(x), r1, 0.5, &mut rng);
            Ok(g)
        }
        FamilyId::H2(2) => {
            let (nl, nr) = (sz("L1"), sz("R1"));
            if nl == 0 || nr == 0 {
                return Err(fail("need |L1'| ≥ 1 and |R1'| ≥ 1".into()));
            }
            let mut lay = Layout::new(3);
            let (l1, r1) = (lay.take(nl), lay.take(nr));
            let (x, y, z) = (0, 1, 2);
            let mut g = Graph::empty(lay.next)?;
            g.add_edge(x, y);
            g.add_edge(y, z);
            join_all(&mut g, y, r1);
            join_all(&mut g, z, l1);
            random_edges(&mut g, VertexSet::singleton(x), l1.union(r1), 0.5, &mut rng);
            random_edges(&mut g, VertexSet::singleton(z), r1, 0.5, &mut rng);
            Ok(g)
        }
        FamilyId::H2(3) => {
            let nw = sz("W");
            if nw == 0 {
                return Err(fail("need |W'| ≥ 1".into()));
            }
            let mut lay = Layout::new(3);
            let (l1, r1, r2, w) = (lay.take(sz("L1")), lay.take(sz("R1")), lay.take(sz("R2")), lay.take(nw));
            let (x, y, z) = (0, 1, 2);
            let mut g = Graph::empty(lay.next)?;
            join_all(&mut g, x, w);
            for v in l1.union(r1).union(r2) {
                match rng.gen_range(0..3) {
                    0 => g.add_edge(v, y),
                    1 => g.add_edge(v, z),
                    _ => {
                        g.add_edge(v, y);
                        g.add_edge(v, z);
                    }
                }
            }
            random_edges(&mut g, w, VertexSet::singleton(y).with(z), 0.5, &mut rng);
            if rng.gen_bool(0.5) {
                g.add_edge(y, z);
            }
            Ok(g)
        }
        FamilyId::F2(_) | FamilyId::H2(_) => Err(fail("subfamily must be 1, 2 or 3".into())),
    }
}

fn generate_f2_third(spec: &FamilySpec, rng: &mut ChaCha8Rng) -> Result<Graph, Error> {
    let fail = |reason: String| Error::FamilySpec { input: spec.to_string(), reason };
    let (nl1, nr1, nr2, nl2, nw) = (spec.size("L1"), spec.size("R1"), spec.size("R2"), spec.size("L2"), spec.size("W"));
    if nl1 == 0 || nr2 == 0 {
        return Err(fail("need |L1| ≥ 1 and |R2| ≥ 1".into()));
    }
    if nw == 0 || nw < nl2 || nw - nl2 > nl1 + nr1 + nr2 {
        return Err(fail("need max(1, |L2|) ≤ |W| ≤ |L2| + |L1 ∪ R1 ∪ R2|".into()));
    }
    let mut lay = Layout::new(3);
    let (l1, r1, r2, l2) = (lay.take(nl1), lay.take(nr1), lay.take(nr2), lay.take(nl2));
    let (x, y, z) = (0, 1, 2);
    let mut pool: Vec<usize> = l1.union(r1).union(r2).iter().collect();
    pool.shuffle(rng);
    let w: VertexSet = l2.union(pool[..nw - nl2].iter().copied().collect());

    let mut g = Graph::empty(lay.next)?;
    g.add_edge(x, y);
    g.add_edge(x, z);
    make_clique(&mut g, w);
    let lrr = l1.union(r1).union(r2);
    for v in w {
        join_all(&mut g, v, lrr);
    }
    join_all(&mut g, y, l1.union(r1));
    join_all(&mut g, z, r1.union(r2));
    for r in r1 {
        match rng.gen_range(0..3) {
            0 => join_all(&mut g, r, l1),
            1 => join_all(&mut g, r, r2),
            _ => {
                join_all(&mut g, r, l1);
                join_all(&mut g, r, r2);
            }
        }
    }
    if rng.gen_bool(0.5) {
        g.add_edge(y, z);
        for v in l1.union(r2) {
            let side = if rng.gen_bool(0.5) { l1 } else { r2 };
            join_all(&mut g, v, side);
        }
    } else {
        make_clique(&mut g, l1);
        make_clique(&mut g, r2);
    }
    let vx = lrr.union(l2);
    random_edges(&mut g, vx, vx, 0.25, rng);
    if g.min_degree() != 2 || !g.full_vertices().is_empty() {
        return Err(Error::GenerationFailed { family: spec.family.to_string(), retries: 0 });
    }
    Ok(g)
}

//! Singleton coalition graph chains G₁ → G₂ → … with Gᵢ₊₁ = CG(Gᵢ, Γ₁),
//! their length L_SCC, and classification against the known chain shapes
//! for minimum degree at most two.

use std::fmt;

use serde::Serialize;

use crate::canon::{are_isomorphic, canonical_form, CanonicalCode};
use crate::coalition_graph::singleton_coalition_graph_unchecked;
use crate::domination::{is_sp_graph, sp_check};
use crate::error::Error;
use crate::families::{h2_witnesses, recognize_h1, recognize_h2_subfamily};
use crate::graph::Graph;
use crate::named::{complete, complete_bipartite, corona_k3_k1, cycle, edgeless, join, path, star, union};

pub const DEFAULT_MAX_STEPS: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum ChainOutcome {
    /// `sequence[last_index]` is the first graph that is not SP.
    TerminatedNonSp { last_index: usize },
    /// `codes[entry_index + period] == codes[entry_index]`; the repeated graph is the last entry.
    Cycle { entry_index: usize, period: usize },
    StepCap { cap: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainResult {
    #[serde(serialize_with = "crate::report::serialize_graph6_seq")]
    pub sequence: Vec<Graph>,
    pub codes: Vec<CanonicalCode>,
    pub outcome: ChainOutcome,
}

impl ChainResult {
    pub fn starts_sp(&self) -> bool {
        !matches!(self.outcome, ChainOutcome::TerminatedNonSp { last_index: 0 })
    }

    pub fn lscc(&self) -> LsccValue {
        match self.outcome {
            ChainOutcome::TerminatedNonSp { last_index } => LsccValue::Finite(last_index),
            ChainOutcome::Cycle { entry_index: 0, period: 1 } => LsccValue::Finite(0),
            ChainOutcome::Cycle { .. } => LsccValue::Infinite,
            ChainOutcome::StepCap { cap } => LsccValue::Unknown(cap),
        }
    }

    /// A repeat that does not start at the first graph: infinite, but not all-isomorphic.
    pub fn has_late_cycle(&self) -> bool {
        matches!(self.outcome, ChainOutcome::Cycle { entry_index, .. } if entry_index > 0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value")]
pub enum LsccValue {
    Finite(usize),
    Infinite,
    /// The step cap was reached first.
    Unknown(usize),
}

impl fmt::Display for LsccValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LsccValue::Finite(k) => write!(f, "{k}"),
            LsccValue::Infinite => write!(f, "inf"),
            LsccValue::Unknown(cap) => write!(f, "unknown(>{cap})"),
        }
    }
}

/// Iterates the singleton coalition graph until a non-SP graph, a repeated
/// isomorphism class, or `max_steps` arrows.
pub fn sc_chain(g: &Graph, max_steps: usize) -> Result<ChainResult, Error> {
    let mut sequence = vec![g.clone()];
    let mut codes = vec![canonical_form(g)?];
    let outcome = loop {
        let cur = sequence.last().expect("non-empty");
        if !is_sp_graph(cur) {
            break ChainOutcome::TerminatedNonSp { last_index: sequence.len() - 1 };
        }
        if sequence.len() > max_steps.max(1) {
            break ChainOutcome::StepCap { cap: max_steps.max(1) };
        }
        let next = singleton_coalition_graph_unchecked(cur);
        let code = canonical_form(&next)?;
        let seen = codes.iter().position(|c| *c == code);
        sequence.push(next);
        codes.push(code);
        if let Some(entry_index) = seen {
            break ChainOutcome::Cycle { entry_index, period: codes.len() - 1 - entry_index };
        }
    };
    Ok(ChainResult { sequence, codes, outcome })
}

pub fn l_scc(g: &Graph) -> Result<LsccValue, Error> {
    Ok(sc_chain(g, DEFAULT_MAX_STEPS)?.lscc())
}

/// A matched chain shape.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainTemplate {
    pub label: String,
    pub order: usize,
    /// The shape is not one of the stated cases but follows from the same
    /// argument; `note` says how it differs.
    pub derived: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl fmt::Display for ChainTemplate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (n = {})", self.label, self.order)
    }
}

/// Named graphs appearing in the chain shapes, built for order `n`.
mod shapes {
    use super::*;

    pub fn m1() -> Graph {
        // x'=0, y'=1, z'=2, r1=3, z1=4
        Graph::from_edges(5, &[(0, 1), (1, 2), (1, 3), (2, 4), (0, 4), (3, 0)]).expect("valid")
    }

    pub fn m2() -> Graph {
        let mut g = m1();
        g.add_edge(3, 2);
        g
    }

    pub fn kbar2_join_k1_k2() -> Graph {
        join(&edgeless(2).unwrap(), &union(&complete(1).unwrap(), &complete(2).unwrap()).unwrap()).unwrap()
    }

    pub fn kbar2_join_k3() -> Graph {
        join(&edgeless(2).unwrap(), &complete(3).unwrap()).unwrap()
    }

    pub fn kbar3_k2() -> Graph {
        union(&edgeless(3).unwrap(), &complete(2).unwrap()).unwrap()
    }

    pub fn k2_join_kbar(m: usize) -> Option<Graph> {
        join(&complete(2).ok()?, &edgeless(m).ok()?).ok()
    }

    pub fn k2_join_kbar_plus_e(m: usize) -> Option<Graph> {
        let mut g = k2_join_kbar(m)?;
        if m < 2 {
            return None;
        }
        g.add_edge(2, 3);
        Some(g)
    }
}

struct Ctx<'a> {
    chain: &'a ChainResult,
    n: usize,
}

impl Ctx<'_> {
    fn at(&self, i: usize) -> Option<&Graph> {
        self.chain.sequence.get(i)
    }

    fn iso(&self, i: usize, h: Option<Graph>) -> bool {
        match (self.at(i), h) {
            (Some(g), Some(h)) => are_isomorphic(g, &h).unwrap_or(false),
            _ => false,
        }
    }

    fn ends_at(&self, k: usize) -> bool {
        self.chain.outcome == ChainOutcome::TerminatedNonSp { last_index: k }
    }

    /// Chain stays on `h` from index `i` on.
    fn fixed_from(&self, i: usize, h: Option<Graph>) -> bool {
        matches!(self.chain.outcome, ChainOutcome::Cycle { entry_index, period: 1 } if entry_index <= i)
            && self.iso(i, h)
    }

    fn alternates(&self, a: Option<Graph>, b: Option<Graph>) -> bool {
        self.chain.outcome == (ChainOutcome::Cycle { entry_index: 0, period: 2 }) && self.iso(0, a) && self.iso(1, b)
    }

    fn h1_at(&self, i: usize) -> bool {
        self.at(i).is_some_and(|g| recognize_h1(g).is_some())
    }

    /// Tails of the minimum-degree-one, no-full-vertex chain started at index `s`.
    fn delta1_tail(&self, s: usize) -> Option<&'static str> {
        let n = self.n;
        if self.ends_at(s + 1) && self.h1_at(s + 1) {
            return Some("a");
        }
        if self.ends_at(s + 3) && self.iso(s + 1, cycle(4).ok()) && self.iso(s + 2, complete(4).ok()) && self.iso(s + 3, edgeless(4).ok()) {
            return Some("b");
        }
        let k1_k1m = n.checked_sub(2).and_then(|m| join(&complete(1).ok()?, &star(m).ok()?).ok());
        if self.ends_at(s + 2) && self.iso(s + 1, n.checked_sub(2).and_then(|m| complete_bipartite(2, m).ok())) && self.iso(s + 2, k1_k1m) {
            return Some("c");
        }
        None
    }

    /// Tails following a B ∈ H2¹ at index `s`.
    fn h21_tail(&self, s: usize) -> Option<&'static str> {
        if !self.ends_at(s + 1) {
            return None;
        }
        let k2 = complete(2).ok();
        let cands = [
            ("a", edgeless(4).ok()),
            ("b", Some(shapes::kbar3_k2())),
            ("c", k2.as_ref().and_then(|k2| union(&edgeless(2).ok()?, k2).ok())),
            ("d", union(&edgeless(2).unwrap(), &path(3).unwrap()).ok()),
        ];
        cands.into_iter().find(|(_, h)| self.iso(s + 1, h.clone())).map(|(l, _)| l)
    }

    /// M₃ / M₄ endpoints: the graph before index `e` is in H2² with the
    /// stated side sizes, `e` is the non-SP end, and it has a vertex of degree n − 2.
    fn m3_m4_at(&self, e: usize) -> Option<&'static str> {
        if !self.ends_at(e) || e == 0 {
            return None;
        }
        let end = self.at(e)?;
        if !end.vertices().iter().any(|v| end.degree(v) + 2 == self.n) {
            return None;
        }
        let ws = h2_witnesses(self.at(e - 1)?, 2);
        if ws.iter().any(|w| w.l1.len() >= 2) {
            Some("M3")
        } else if ws.iter().any(|w| w.l1.len() == 1 && w.r1.len() >= 2) {
            Some("M4")
        } else {
            None
        }
    }

    /// Tails following a B ∈ H2² at index `s`, labelled a..j.
    fn h22_tail(&self, s: usize) -> Option<&'static str> {
        let n = self.n;
        if let Some(l) = self.delta1_tail(s) {
            return Some(l);
        }
        if self.ends_at(s + 3)
            && self.iso(s, Some(shapes::m1()))
            && self.iso(s + 1, Some(shapes::kbar2_join_k1_k2()))
            && self.iso(s + 2, Some(shapes::kbar2_join_k3()))
            && self.iso(s + 3, Some(shapes::kbar3_k2()))
        {
            return Some("d");
        }
        if self.ends_at(s + 2)
            && self.iso(s, Some(shapes::m2()))
            && self.iso(s + 1, Some(shapes::kbar2_join_k3()))
            && self.iso(s + 2, Some(shapes::kbar3_k2()))
        {
            return Some("e");
        }
        if self.ends_at(s + 1) {
            if self.iso(s + 1, Some(corona_k3_k1())) {
                return Some("f");
            }
            if self.iso(s + 1, n.checked_sub(2).and_then(shapes::k2_join_kbar)) {
                return Some("i");
            }
            if self.iso(s + 1, n.checked_sub(2).and_then(shapes::k2_join_kbar_plus_e)) {
                return Some("j");
            }
            match self.m3_m4_at(s + 1) {
                Some("M3") => return Some("g"),
                Some("M4") => return Some("h"),
                _ => {}
            }
        }
        None
    }
}

/// Matches the chain of an SP graph with δ ≤ 2 against the known shapes.
/// Every named graph of a shape is checked by isomorphism against the computed chain.
pub fn classify_chain(g: &Graph) -> Result<ChainTemplate, Error> {
    let delta = g.min_degree();
    if delta > 2 {
        return Err(Error::OutOfCharacterizedRange { min_degree: delta });
    }
    if let Some(blocking_vertex) = sp_check(g).blocking_vertex {
        return Err(Error::NotSingletonPartition { blocking_vertex });
    }
    let chain = sc_chain(g, DEFAULT_MAX_STEPS)?;
    let n = g.order();
    let cx = Ctx { chain: &chain, n };
    let has_full = !g.full_vertices().is_empty();
    let stated = |label: &str| Ok(ChainTemplate { label: label.to_string(), order: n, derived: false, note: None });

    match (delta, has_full) {
        (0, _) => {
            if n == 1 && cx.fixed_from(0, complete(1).ok()) {
                return stated("Thm14(a)");
            }
            if cx.alternates(edgeless(2).ok(), complete(2).ok()) {
                return stated("Thm14(b)");
            }
            if n > 3 && cx.ends_at(1) && cx.iso(1, star(n - 1).ok()) {
                return stated("Thm14(c)");
            }
            let k1_k2 = union(&complete(1)?, &complete(2)?).ok();
            if cx.alternates(k1_k2, path(3).ok()) {
                return stated("Thm14(d)");
            }
        }
        (1, true) => {
            if cx.alternates(complete(2).ok(), edgeless(2).ok()) {
                return stated("Thm15(a)");
            }
            let k1_k2 = union(&complete(1)?, &complete(2)?).ok();
            if cx.alternates(path(3).ok(), k1_k2) {
                return stated("Thm15(c)");
            }
            if n > 3 && cx.ends_at(1) && cx.iso(1, union(&complete(1)?, &star(n - 2)?).ok()) {
                return stated("Thm15(b)");
            }
        }
        (1, false) => {
            if let Some(case) = cx.delta1_tail(0) {
                let mut t = ChainTemplate { label: format!("Thm16({case})"), order: n, derived: false, note: None };
                if case == "b" {
                    t.note = Some("second graph has order 4, so it is C4 rather than K_{2,n-2}".into());
                }
                return Ok(t);
            }
        }
        (2, true) => {
            if cx.ends_at(1) {
                return stated("Thm17");
            }
        }
        (2, false) => {
            let b = &chain.sequence[1];
            if cx.ends_at(1) && (1..=3).any(|k| recognize_h2_subfamily(b, k).is_some()) {
                return stated("Thm13(B-non-SP)");
            }
            for k in 1..=3 {
                if recognize_h2_subfamily(b, k).is_none() {
                    continue;
                }
                if let Some(case) = cx.h2_lemma(k) {
                    return Ok(case.into_template(k, n));
                }
            }
        }
        _ => unreachable!("delta checked above"),
    }
    Err(Error::Unclassified(describe(&chain)))
}

/// Case of the H2 chain lemma for subfamily `subfamily` matched by `chain`,
/// whose second graph B is SP. `None` when no case of that lemma fits.
pub fn h2_lemma_case(chain: &ChainResult, subfamily: u8) -> Option<ChainTemplate> {
    let n = chain.sequence[0].order();
    let cx = Ctx { chain, n };
    cx.h2_lemma(subfamily).map(|c| c.into_template(subfamily, n))
}

struct LemmaCase {
    case: String,
    derived: bool,
    note: Option<String>,
}

impl LemmaCase {
    fn stated(case: &str) -> Self {
        LemmaCase { case: case.to_string(), derived: false, note: None }
    }

    fn into_template(self, subfamily: u8, n: usize) -> ChainTemplate {
        let lemma = match subfamily {
            1 => "Lem18",
            2 => "Lem19",
            _ => "Lem-lemcase3",
        };
        ChainTemplate { label: format!("{lemma}({})", self.case), order: n, derived: self.derived, note: self.note }
    }
}

fn shift(case: &str, first: u8) -> String {
    ((first + (case.as_bytes()[0] - b'a')) as char).to_string()
}

impl Ctx<'_> {
    fn h2_lemma(&self, k: u8) -> Option<LemmaCase> {
        match k {
            1 => self.h21_tail(1).map(LemmaCase::stated),
            2 => self.h22_tail(1).map(LemmaCase::stated),
            3 => self.h23_case(),
            _ => None,
        }
    }

    fn h23_case(&self) -> Option<LemmaCase> {
        let n = self.n;
        let stated = |l: &str| Some(LemmaCase::stated(l));
        if let Some(l) = self.delta1_tail(1) {
            return stated(l);
        }
        if self.fixed_from(1, cycle(5).ok()) {
            return stated("d");
        }
        if let Some("d") = self.h22_tail(1) {
            return stated("e");
        }
        let tail = |s: usize| {
            self.ends_at(s + 2) && self.iso(s + 1, Some(shapes::kbar2_join_k3())) && self.iso(s + 2, Some(shapes::kbar3_k2()))
        };
        if self.iso(1, complete_bipartite(3, 2).ok()) && tail(1) {
            return stated("f");
        }
        if self.iso(1, Some(shapes::kbar2_join_k1_k2())) && tail(1) {
            return stated("g");
        }
        if let Some(c) = self.at(2) {
            if recognize_h2_subfamily(c, 1).is_some() {
                if let Some(l) = self.h21_tail(2) {
                    return stated(&shift(l, b'h'));
                }
            }
            if recognize_h2_subfamily(c, 2).is_some() {
                if let Some(l) = self.h22_tail(2) {
                    return stated(&shift(l, b'l'));
                }
            }
        }
        if n >= 4 && self.fixed_from(1, complete_bipartite(3, n - 3).ok()) {
            return stated("v");
        }
        if n >= 4 {
            let k1_k2 = union(&complete(1).ok()?, &complete(2).ok()?).ok()?;
            let second = join(&k1_k2, &edgeless(n - 3).ok()?).ok();
            let third = join(&path(3).ok()?, &edgeless(n - 3).ok()?).ok();
            if self.ends_at(3) && self.iso(1, second) && self.iso(2, third) {
                if self.iso(3, union(&complete(1).ok()?, &complete_bipartite(2, n - 3).ok()?).ok()) {
                    return stated("w");
                }
                // the two degree-(n-2) vertices of P3 + K̄_{n-3} dominate together,
                // so the computed end graph carries that edge
                if self.iso(3, union(&complete(1).ok()?, &shapes::k2_join_kbar(n - 3)?).ok()) {
                    return Some(LemmaCase {
                        case: "w".into(),
                        derived: true,
                        note: Some(format!("end graph is K1 ∪ (K2 + K̄{m}), not K1 ∪ K_{{2,{m}}}", m = n - 3)),
                    });
                }
            }
        }
        // B is itself SP with δ = 2 and no full vertex, and its coalition graph is not SP
        let (b, c) = (self.at(1)?, self.at(2)?);
        let c_in_h2 = (1..=3).any(|k| recognize_h2_subfamily(c, k).is_some());
        if self.ends_at(2) && b.min_degree() == 2 && b.full_vertices().is_empty() && c_in_h2 {
            return Some(LemmaCase {
                case: "CG(B)-non-SP".into(),
                derived: true,
                note: Some("G -> B -> CG(B) with CG(B) in H2 and not SP".into()),
            });
        }
        None
    }
}

fn describe(chain: &ChainResult) -> String {
    let seq: Vec<String> = chain.sequence.iter().map(crate::graph6::emit_graph6).collect();
    format!("chain {} ({:?})", seq.join(" -> "), chain.outcome)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::build_named;

    fn named(s: &str) -> Graph {
        build_named(s).unwrap()
    }

    #[test]
    fn c4_chain() {
        let r = sc_chain(&named("C(4)"), 64).unwrap();
        assert_eq!(r.sequence.len(), 3);
        assert!(are_isomorphic(&r.sequence[1], &named("K(4)")).unwrap());
        assert!(are_isomorphic(&r.sequence[2], &named("Kbar(4)")).unwrap());
        assert_eq!(r.outcome, ChainOutcome::TerminatedNonSp { last_index: 2 });
        assert_eq!(r.lscc(), LsccValue::Finite(2));
    }

    #[test]
    fn c5_fixed_point() {
        let r = sc_chain(&named("C(5)"), 64).unwrap();
        assert_eq!(r.outcome, ChainOutcome::Cycle { entry_index: 0, period: 1 });
        assert_eq!(r.sequence.len(), 2);
        assert_eq!(r.lscc(), LsccValue::Finite(0));
    }

    #[test]
    fn p3_alternates() {
        let r = sc_chain(&named("P(3)"), 64).unwrap();
        assert_eq!(r.outcome, ChainOutcome::Cycle { entry_index: 0, period: 2 });
        assert!(are_isomorphic(&r.sequence[1], &named("union(K(1), K(2))")).unwrap());
        assert_eq!(r.codes[0], r.codes[2]);
        assert_eq!(l_scc(&named("P(3)")).unwrap(), LsccValue::Infinite);
    }

    #[test]
    fn non_sp_start() {
        let r = sc_chain(&named("C(7)"), 64).unwrap();
        assert!(!r.starts_sp());
        assert_eq!(r.lscc(), LsccValue::Finite(0));
    }

    #[test]
    fn step_cap() {
        let r = sc_chain(&named("P(3)"), 1).unwrap();
        assert_eq!(r.outcome, ChainOutcome::StepCap { cap: 1 });
        assert_eq!(r.lscc(), LsccValue::Unknown(1));
        assert_eq!(r.sequence.len(), 2);
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify_chain(&named("union(K(1), K(5))")).unwrap().label, "Thm14(c)");
        assert_eq!(classify_chain(&named("C(4)")).unwrap().label, "Lem18(a)");
        assert_eq!(classify_chain(&named("K(2)")).unwrap().label, "Thm15(a)");
        assert_eq!(classify_chain(&named("K(1)")).unwrap().label, "Thm14(a)");
        assert_eq!(classify_chain(&named("P(3)")).unwrap().label, "Thm15(c)");
        assert_eq!(classify_chain(&named("C(5)")).unwrap().label, "Lem-lemcase3(d)");
    }

    #[test]
    fn classify_errors() {
        assert!(matches!(classify_chain(&named("K(4)")), Err(Error::OutOfCharacterizedRange { min_degree: 3 })));
        assert!(matches!(classify_chain(&named("C(7)")), Err(Error::NotSingletonPartition { .. })));
    }

    #[test]
    fn lscc_serializes_with_kind() {
        let v = serde_json::to_value(LsccValue::Finite(2)).unwrap();
        assert_eq!(v, serde_json::json!({"kind": "Finite", "value": 2}));
        let v = serde_json::to_value(ChainOutcome::Cycle { entry_index: 0, period: 2 }).unwrap();
        assert_eq!(v["period"], 2);
    }
}

//! Exhaustive checks of the characterization results over enumerated graph
//! classes or graph6 inputs, reported as JSON-serializable records.
//!
//! Every check compares two independently computed facts, for example a
//! family recognizer against `sp_check`, or a computed chain against
//! constructively built named graphs. "If and only if" statements are split
//! into one sub-check per direction.

use std::collections::BTreeMap;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::canon::are_isomorphic;
use crate::chains::{classify_chain, h2_lemma_case, sc_chain, ChainOutcome, ChainResult, LsccValue, DEFAULT_MAX_STEPS};
use crate::coalition_graph::sc_graph;
use crate::domination::is_sp_graph;
use crate::enumerate::{enumerate_graphs, GraphFilter, ENUM_MAX_ORDER};
use crate::error::Error;
use crate::families::{generate_family, recognize_f1, recognize_f2, recognize_h1, recognize_h2, recognize_h2_subfamily, FamilyId, FamilySpec};
use crate::graph::Graph;
use crate::graph6::emit_graph6;
use crate::named::{complete, join, union};
use crate::report::SCHEMA_VERSION;

pub const DEFAULT_N_MAX: usize = 6;

/// Registered ids with the smallest order at which their hypothesis class is non-empty.
pub const THEOREMS: [(&str, usize); 16] = [
    ("thm1", 1),
    ("thm2", 3),
    ("thm4", 4),
    ("thm6", 4),
    ("obs7", 4),
    ("thm8", 4),
    ("thm9", 3),
    ("thm13", 4),
    ("thm14", 1),
    ("thm15", 2),
    ("thm16", 4),
    ("thm17", 3),
    ("lem18", 4),
    ("lem19", 5),
    ("lem-h23", 5),
    ("thm20", 4),
];

/// Number of seeded F1 members checked by `thm6` in addition to the enumeration.
pub const THM6_GENERATED: usize = 500;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub graph6: String,
    pub check: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubCheck {
    pub name: String,
    pub graphs_checked: usize,
    pub failures: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub schema_version: u32,
    pub theorem_id: String,
    pub order_range: [usize; 2],
    pub graphs_checked: usize,
    pub passed: bool,
    pub counterexamples: Vec<Counterexample>,
    /// Wall-clock seconds.
    pub elapsed: f64,
    pub subchecks: Vec<SubCheck>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub histogram: BTreeMap<String, usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl TheoremReport {
    /// The report with `elapsed` zeroed, for byte-level comparisons.
    pub fn without_timing(&self) -> Self {
        TheoremReport { elapsed: 0.0, ..self.clone() }
    }
}

/// Result of one graph against one theorem: the sub-checks whose
/// antecedent held, each with a failure detail, plus a histogram bucket.
#[derive(Default)]
struct Outcome {
    checks: Vec<(&'static str, Option<String>)>,
    bucket: Option<String>,
}

impl Outcome {
    fn check(&mut self, name: &'static str, ok: bool, detail: impl FnOnce() -> String) {
        self.checks.push((name, (!ok).then(detail)));
    }
}

fn min_order(id: &str) -> Result<usize, Error> {
    THEOREMS
        .iter()
        .find(|(t, _)| *t == id)
        .map(|&(_, m)| m)
        .ok_or_else(|| Error::UnknownTheorem(id.to_string()))
}

/// Runs `theorem_id` over every enumerated graph of order `min..=n_max`.
pub fn verify_theorem(theorem_id: &str, n_max: usize) -> Result<TheoremReport, Error> {
    let min = min_order(theorem_id)?;
    if n_max < min {
        return Err(Error::OrderTooSmall { theorem: theorem_id.to_string(), n_max, min });
    }
    if n_max > ENUM_MAX_ORDER {
        return Err(Error::OrderAboveCap { operation: "verify_theorem", order: n_max, cap: ENUM_MAX_ORDER });
    }
    let start = Instant::now();
    let mut graphs = Vec::new();
    for n in min..=n_max {
        graphs.extend(enumerate_graphs(n, &GraphFilter::all())?);
    }
    let mut report = run(theorem_id, &graphs, [min, n_max])?;
    if theorem_id == "thm6" {
        extend_with_generated_f1(&mut report)?;
    }
    report.elapsed = start.elapsed().as_secs_f64();
    Ok(report)
}

/// Runs `theorem_id` over caller-supplied graphs, e.g. read from a graph6 file.
pub fn verify_theorem_on(theorem_id: &str, graphs: &[Graph]) -> Result<TheoremReport, Error> {
    min_order(theorem_id)?;
    let start = Instant::now();
    let lo = graphs.iter().map(Graph::order).min().unwrap_or(0);
    let hi = graphs.iter().map(Graph::order).max().unwrap_or(0);
    let mut report = run(theorem_id, graphs, [lo, hi])?;
    report.elapsed = start.elapsed().as_secs_f64();
    Ok(report)
}

fn run(id: &str, graphs: &[Graph], order_range: [usize; 2]) -> Result<TheoremReport, Error> {
    let outcomes: Vec<Option<Outcome>> = graphs.par_iter().map(|g| check_graph(id, g)).collect::<Result<_, _>>()?;
    let mut report = TheoremReport {
        schema_version: SCHEMA_VERSION,
        theorem_id: id.to_string(),
        order_range,
        graphs_checked: 0,
        passed: true,
        counterexamples: Vec::new(),
        elapsed: 0.0,
        subchecks: Vec::new(),
        histogram: BTreeMap::new(),
        notes: notes_for(id),
    };
    for (g, out) in graphs.iter().zip(outcomes) {
        let Some(out) = out else { continue };
        report.graphs_checked += 1;
        record(&mut report, g, out);
    }
    report.passed = report.counterexamples.is_empty();
    Ok(report)
}

fn record(report: &mut TheoremReport, g: &Graph, out: Outcome) {
    if let Some(b) = out.bucket {
        *report.histogram.entry(b).or_default() += 1;
    }
    for (name, failure) in out.checks {
        let idx = match report.subchecks.iter().position(|s| s.name == name) {
            Some(i) => i,
            None => {
                report.subchecks.push(SubCheck { name: name.to_string(), graphs_checked: 0, failures: 0 });
                report.subchecks.len() - 1
            }
        };
        let sub = &mut report.subchecks[idx];
        sub.graphs_checked += 1;
        if let Some(detail) = failure {
            sub.failures += 1;
            report.counterexamples.push(Counterexample { graph6: emit_graph6(g), check: name.to_string(), detail });
        }
    }
}

fn notes_for(id: &str) -> Vec<String> {
    let s = |t: &str| vec![t.to_string()];
    match id {
        "obs7" => s("C3 = K3 is SP but every vertex is full; the check covers cycles without full vertices (n >= 4)"),
        "thm15" => s("case (b) is checked without assuming L_SCC = 1: for n > 3 the chain must be G -> K1 ∪ K_{1,n-2}, which gives length 1"),
        "thm16" => s("case (b) applies at order 4 only, where K_{2,n-2} = C4; the two cases are told apart by isomorphism"),
        "lem18" | "lem19" | "lem-h23" => s("only chains whose second graph B is SP are in scope; B not SP gives G -> B"),
        "thm8" => s("SP graphs where L1 or R2 is empty for every choice of x (for example K3 ∪ K3) are not in F2"),
        "thm20" => s("histogram keys are L_SCC values"),
        _ => Vec::new(),
    }
}

/// Seeded F1 members of orders 4..=9, each checked for CG(G, Γ₁) ∈ H1.
pub fn generated_f1_members(count: usize, seed: u64) -> Result<Vec<Graph>, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let total = rng.gen_range(1..=6);
        let mut q = rng.gen_range(0..=total);
        if q == 1 {
            q = 0;
        }
        let spec = FamilySpec::new(FamilyId::F1, &[("P", total - q), ("Q", q)], rng.gen());
        out.push(generate_family(&spec)?);
    }
    Ok(out)
}

fn extend_with_generated_f1(report: &mut TheoremReport) -> Result<(), Error> {
    let graphs = generated_f1_members(THM6_GENERATED, 6)?;
    for g in &graphs {
        let mut out = Outcome::default();
        out.check("generated F1 => CG in H1", cg_in_h1(g), || "CG(G, Γ1) not recognized as H1".into());
        report.graphs_checked += 1;
        record(report, g, out);
    }
    let hi = graphs.iter().map(Graph::order).max().unwrap_or(0);
    report.order_range[1] = report.order_range[1].max(hi);
    report.notes.push(format!("includes {THM6_GENERATED} seeded F1 members of orders 4..=9"));
    report.passed = report.counterexamples.is_empty();
    Ok(())
}

fn cg_in_h1(g: &Graph) -> bool {
    sc_graph(g).is_ok_and(|h| recognize_h1(&h).is_some())
}

fn full_count(g: &Graph) -> usize {
    g.full_vertices().len()
}

fn iso(g: &Graph, h: Option<Graph>) -> bool {
    h.is_some_and(|h| are_isomorphic(g, &h).unwrap_or(false))
}

fn chain_of(g: &Graph) -> Result<ChainResult, Error> {
    sc_chain(g, DEFAULT_MAX_STEPS)
}

fn chain_text(c: &ChainResult) -> String {
    let seq: Vec<String> = c.sequence.iter().map(emit_graph6).collect();
    format!("{} ({:?})", seq.join(" -> "), c.outcome)
}

fn label_of(g: &Graph) -> String {
    match classify_chain(g) {
        Ok(t) => t.label,
        Err(_) => "unclassified".into(),
    }
}

/// `None` when `g` is outside the theorem's hypothesis class.
fn check_graph(id: &str, g: &Graph) -> Result<Option<Outcome>, Error> {
    let n = g.order();
    let delta = g.min_degree();
    let full = full_count(g);
    let mut out = Outcome::default();
    match id {
        "thm1" => {
            if delta != 0 {
                return Ok(None);
            }
            let sp = is_sp_graph(g);
            let target = if n == 1 { complete(1).ok() } else { union(&complete(1)?, &complete(n - 1)?).ok() };
            let shape = iso(g, target);
            if sp {
                out.check("SP => K1 ∪ K_{n-1}", shape, || "SP but not K1 ∪ K_{n-1}".into());
            }
            if shape {
                out.check("K1 ∪ K_{n-1} => SP", sp, || "K1 ∪ K_{n-1} but not SP".into());
            }
        }
        "thm2" => {
            if delta != 1 || full != 1 || n < 3 {
                return Ok(None);
            }
            let sp = is_sp_graph(g);
            let mut target = union(&complete(1)?, &complete(n - 1)?)?;
            target.add_edge(0, 1);
            let shape = iso(g, Some(target));
            if sp {
                out.check("SP => pendant K_{n-1}", shape, || "SP but not K1 ∪ K_{n-1} plus a pendant edge".into());
            }
            if shape {
                out.check("pendant K_{n-1} => SP", sp, || "K1 ∪ K_{n-1} plus a pendant edge but not SP".into());
            }
        }
        "thm4" => {
            if delta != 1 || full != 0 {
                return Ok(None);
            }
            let sp = is_sp_graph(g);
            let f1 = recognize_f1(g).is_some();
            if sp {
                out.check("SP => F1", f1, || "SP but not in F1".into());
            }
            if f1 {
                out.check("F1 => SP", sp, || "in F1 but not SP".into());
            }
        }
        "thm6" => {
            if delta != 1 || full != 0 || recognize_f1(g).is_none() {
                return Ok(None);
            }
            out.check("F1 => CG in H1", cg_in_h1(g), || "CG(G, Γ1) not recognized as H1".into());
        }
        "obs7" => {
            let is_cycle = n >= 4 && g.is_connected() && g.vertices().iter().all(|v| g.degree(v) == 2);
            if !is_cycle || !is_sp_graph(g) {
                return Ok(None);
            }
            out.check("SP cycle => 4 <= n <= 6", (4..=6).contains(&n), || format!("C{n} is SP"));
            out.check("SP cycle => F2", recognize_f2(g).is_some(), || "SP cycle not in F2".into());
        }
        "thm8" => {
            if delta != 2 || full != 0 {
                return Ok(None);
            }
            let sp = is_sp_graph(g);
            let f2 = recognize_f2(g).is_some();
            if sp {
                out.check("SP => F2", f2, || "SP but not in F2".into());
            }
            if f2 {
                out.check("F2 => SP", sp, || "in F2 but not SP".into());
            }
        }
        "thm9" => {
            if delta != 2 {
                return Ok(None);
            }
            let sp = is_sp_graph(g);
            match full {
                0 => return Ok(None),
                1 => {
                    let f = g.full_vertices().first().expect("one full vertex");
                    let rest = g.induced(g.vertices().without(f))?;
                    let f1 = recognize_f1(&rest).is_some();
                    if sp {
                        out.check("(a) SP => G - f in F1", f1, || "SP but G - f not in F1".into());
                    }
                    if f1 {
                        out.check("(a) G - f in F1 => SP", sp, || "G - f in F1 but G not SP".into());
                    }
                    out.bucket = Some("one full vertex".into());
                }
                2 => {
                    let target = n.checked_sub(3).filter(|&m| m >= 1).and_then(|m| {
                        join(&union(&complete(1).ok()?, &complete(m).ok()?).ok()?, &complete(2).ok()?).ok()
                    });
                    let shape = iso(g, target);
                    if sp {
                        out.check("(b) SP => (K1 ∪ K_{n-3}) + K2", shape, || "SP but not (K1 ∪ K_{n-3}) + K2".into());
                    }
                    if shape {
                        out.check("(b) (K1 ∪ K_{n-3}) + K2 => SP", sp, || "(K1 ∪ K_{n-3}) + K2 but not SP".into());
                    }
                    out.bucket = Some("two full vertices".into());
                }
                _ => {
                    out.check("(c) three full vertices => C3", iso(g, complete(3).ok()), || format!("{full} full vertices"));
                    out.bucket = Some("three or more full vertices".into());
                }
            }
        }
        "thm13" => {
            if delta != 2 || full != 0 || recognize_f2(g).is_none() {
                return Ok(None);
            }
            let sp = is_sp_graph(g);
            out.check("F2 => SP", sp, || "in F2 but not SP".into());
            if sp {
                let h2 = sc_graph(g).is_ok_and(|b| recognize_h2(&b).is_some());
                out.check("F2 => CG in H2", h2, || "CG(G, Γ1) not recognized as H2".into());
            }
        }
        "thm14" | "thm15" => {
            let in_class = if id == "thm14" { delta == 0 } else { delta == 1 && full >= 1 };
            if !in_class || !is_sp_graph(g) {
                return Ok(None);
            }
            let (case, lscc) = match (id, n) {
                ("thm14", 1) => ("a", LsccValue::Finite(0)),
                ("thm14", 2) => ("b", LsccValue::Infinite),
                ("thm14", 3) => ("d", LsccValue::Infinite),
                ("thm14", _) => ("c", LsccValue::Finite(1)),
                (_, 2) => ("a", LsccValue::Infinite),
                (_, 3) => ("c", LsccValue::Infinite),
                _ => ("b", LsccValue::Finite(1)),
            };
            let want = format!("{}({case})", if id == "thm14" { "Thm14" } else { "Thm15" });
            let chain = chain_of(g)?;
            let got = label_of(g);
            out.check("chain shape", got == want, || format!("expected {want}, got {got}: {}", chain_text(&chain)));
            out.check("L_SCC", chain.lscc() == lscc, || format!("expected L_SCC {lscc}, got {}", chain.lscc()));
            out.bucket = Some(got);
        }
        "thm16" => {
            if delta != 1 || full != 0 || !is_sp_graph(g) {
                return Ok(None);
            }
            let chain = chain_of(g)?;
            let got = label_of(g);
            let want_len = match got.as_str() {
                "Thm16(a)" => Some(1),
                "Thm16(b)" => Some(3),
                "Thm16(c)" => Some(2),
                _ => None,
            };
            out.check("chain shape", want_len.is_some(), || format!("no case of (a)-(c) matches: {}", chain_text(&chain)));
            if let Some(k) = want_len {
                out.check("L_SCC", chain.lscc() == LsccValue::Finite(k), || format!("L_SCC {} for {got}", chain.lscc()));
            }
            out.bucket = Some(got);
        }
        "thm17" => {
            if delta != 2 || full == 0 || !is_sp_graph(g) {
                return Ok(None);
            }
            let chain = chain_of(g)?;
            out.check("L_SCC = 1", chain.lscc() == LsccValue::Finite(1), || format!("L_SCC {}: {}", chain.lscc(), chain_text(&chain)));
            out.bucket = Some(chain.lscc().to_string());
        }
        "lem18" | "lem19" | "lem-h23" => {
            let k = match id {
                "lem18" => 1,
                "lem19" => 2,
                _ => 3,
            };
            if delta != 2 || full != 0 || !is_sp_graph(g) {
                return Ok(None);
            }
            let chain = chain_of(g)?;
            let b = &chain.sequence[1];
            if !is_sp_graph(b) || recognize_h2_subfamily(b, k).is_none() {
                return Ok(None);
            }
            let case = h2_lemma_case(&chain, k);
            let stated = case.as_ref().is_some_and(|c| !c.derived);
            out.check("chain is a stated case", stated, || match &case {
                Some(c) => format!(
                    "only the derived shape {} matches ({}): {}",
                    c.label,
                    c.note.clone().unwrap_or_default(),
                    chain_text(&chain)
                ),
                None => format!("no case matches: {}", chain_text(&chain)),
            });
            out.bucket = Some(case.map_or_else(|| "none".into(), |c| c.label));
        }
        "thm20" => {
            if delta != 2 || full != 0 || !is_sp_graph(g) {
                return Ok(None);
            }
            let chain = chain_of(g)?;
            let v = chain.lscc();
            let ok = matches!(v, LsccValue::Infinite) || matches!(v, LsccValue::Finite(k) if k <= 5);
            out.check("L_SCC infinite or <= 5", ok, || format!("L_SCC {v}: {}", chain_text(&chain)));
            out.bucket = Some(v.to_string());
        }
        other => return Err(Error::UnknownTheorem(other.to_string())),
    }
    Ok(Some(out))
}

/// One swept graph.
#[derive(Clone, Debug, Serialize)]
pub struct SweepRecord {
    pub schema_version: u32,
    pub graph6: String,
    pub order: usize,
    pub min_degree: usize,
    pub sp: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lscc: Option<LsccValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub outcome: Option<ChainOutcome>,
    /// Chain shape label, or "not SP", "out of characterized range",
    /// "unclassified", "error".
    pub label: String,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub derived: bool,
    /// A repeat entered after the first graph: infinite but not all-isomorphic.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub late_cycle: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

pub fn sweep_graph(g: &Graph) -> SweepRecord {
    let mut rec = SweepRecord {
        schema_version: SCHEMA_VERSION,
        graph6: emit_graph6(g),
        order: g.order(),
        min_degree: g.min_degree(),
        sp: is_sp_graph(g),
        lscc: None,
        outcome: None,
        label: String::new(),
        derived: false,
        late_cycle: false,
        detail: None,
    };
    let chain = match sc_chain(g, DEFAULT_MAX_STEPS) {
        Ok(c) => c,
        Err(e) => {
            rec.label = "error".into();
            rec.detail = Some(e.to_string());
            return rec;
        }
    };
    rec.lscc = Some(chain.lscc());
    rec.outcome = Some(chain.outcome);
    rec.late_cycle = chain.has_late_cycle();
    rec.label = if !rec.sp {
        "not SP".into()
    } else {
        match classify_chain(g) {
            Ok(t) => {
                rec.derived = t.derived;
                rec.detail = t.note;
                t.label
            }
            Err(Error::OutOfCharacterizedRange { .. }) => "out of characterized range".into(),
            Err(e) => {
                rec.detail = Some(e.to_string());
                "unclassified".into()
            }
        }
    };
    rec
}

/// One record per input graph, in input order.
pub fn sweep_chains(graphs: &[Graph]) -> Vec<SweepRecord> {
    graphs.par_iter().map(sweep_graph).collect()
}

/// Sweeps every enumerated graph of order `n_min..=n_max` matching `filter`.
pub fn sweep_enumerated(n_min: usize, n_max: usize, filter: &GraphFilter) -> Result<Vec<SweepRecord>, Error> {
    let mut graphs = Vec::new();
    for n in n_min..=n_max {
        graphs.extend(enumerate_graphs(n, filter)?);
    }
    Ok(sweep_chains(&graphs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph6::parse_graph6;
    use crate::named::{build_named, edgeless};

    #[test]
    fn unknown_and_small() {
        assert!(matches!(verify_theorem("thm99", 6), Err(Error::UnknownTheorem(_))));
        assert!(matches!(verify_theorem("thm8", 3), Err(Error::OrderTooSmall { min: 4, .. })));
        assert!(matches!(verify_theorem("thm8", 8), Err(Error::OrderAboveCap { .. })));
    }

    #[test]
    fn thm1_counts_delta0_classes() {
        let r = verify_theorem("thm1", 6).unwrap();
        // graphs with an isolated vertex: one per class of order n - 1
        assert_eq!(r.graphs_checked, 1 + 1 + 2 + 4 + 11 + 34);
        assert!(r.passed, "{:?}", r.counterexamples);
        assert!(r.subchecks.iter().all(|s| s.failures == 0));
    }

    #[test]
    fn thm8_fails_only_on_sp_graphs_missing_l1_or_r2() {
        let r = verify_theorem("thm8", 6).unwrap();
        assert!(!r.passed);
        let cex: Vec<&str> = r.counterexamples.iter().map(|c| c.graph6.as_str()).collect();
        assert_eq!(cex, ["EImo", "EImw", "EJaG", "EJmw", "EKNG", "EKYW", "EK]w", "EKdw"]);
        assert!(r.counterexamples.iter().all(|c| c.check == "SP => F2"));
        // K3 ∪ K3: no vertex outside N[x] sees y, so no F2 subfamily can fit
        let k3k3 = build_named("union(K(3), K(3))").unwrap();
        assert!(is_sp_graph(&k3k3));
        assert!(recognize_f2(&k3k3).is_none());
    }

    #[test]
    fn thm13_and_thm20_pass_at_six() {
        assert!(verify_theorem("thm13", 6).unwrap().passed);
        let r = verify_theorem("thm20", 6).unwrap();
        assert!(r.passed);
        assert!(!r.histogram.is_empty());
        assert!(r.histogram.keys().all(|k| k == "inf" || k.parse::<usize>().is_ok_and(|v| v <= 5)));
    }

    #[test]
    fn report_is_deterministic() {
        let a = serde_json::to_string(&verify_theorem("thm9", 5).unwrap().without_timing()).unwrap();
        let b = serde_json::to_string(&verify_theorem("thm9", 5).unwrap().without_timing()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn sweep_examples() {
        let recs = sweep_enumerated(5, 5, &GraphFilter::all()).unwrap();
        assert_eq!(recs.len(), 34);
        let c5 = recs.iter().find(|r| r.label == "Lem-lemcase3(d)").unwrap();
        assert!(are_isomorphic(&parse_graph6(&c5.graph6).unwrap(), &crate::named::cycle(5).unwrap()).unwrap());
        assert_eq!(c5.lscc, Some(LsccValue::Finite(0)));

        let k4 = sweep_graph(&parse_graph6("C~").unwrap());
        assert_eq!(k4.lscc, Some(LsccValue::Finite(1)));
        assert_eq!(k4.label, "out of characterized range");
        assert_eq!(sweep_graph(&edgeless(3).unwrap()).label, "not SP");
    }

    #[test]
    fn generated_f1_members_are_in_f1() {
        for g in generated_f1_members(50, 1).unwrap() {
            assert!(recognize_f1(&g).is_some());
            assert!((4..=9).contains(&g.order()));
        }
    }
}

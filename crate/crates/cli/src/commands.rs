use std::io::Write;

use serde::Serialize;
use serde_json::{json, Map, Value};

use coalition_core::chains::{classify_chain, sc_chain, ChainOutcome, ChainResult};
use coalition_core::domination::coalition_number_exhaustive;
use coalition_core::enumerate::enumerate_graphs;
use coalition_core::families::{
    generate_family, recognize_f1, recognize_f2, recognize_h1, recognize_h2, recognize_f2_subfamily,
    recognize_h2_subfamily, FamilyId, FamilySpec,
};
use coalition_core::report::SCHEMA_VERSION;
use coalition_core::verify::{sweep_chains, verify_theorem, TheoremReport, THEOREMS};
use coalition_core::{
    canonical_form, coalition_graph, coalition_number_exact, emit_graph6, is_coalition_partition,
    singleton_partition, sp_check, Graph, GraphFilter, Partition,
};

use crate::args::{Command, FamilyCommand, InputArgs};
use crate::input::{load, load_file, parse_g6};
use crate::CliError;

/// Verdict-carrying result of a subcommand: `true` maps to exit 0, `false` to exit 1.
pub type Verdict = bool;

pub struct Ctx<'a, W: Write> {
    pub json: bool,
    pub out: &'a mut W,
}

impl<W: Write> Ctx<'_, W> {
    fn line(&mut self, text: impl AsRef<str>) -> Result<(), CliError> {
        writeln!(self.out, "{}", text.as_ref())?;
        Ok(())
    }

    fn record(&mut self, value: &Value) -> Result<(), CliError> {
        self.line(serde_json::to_string(value).expect("JSON values serialize"))
    }

    /// Text line for one graph; prefixed by its graph6 when several graphs were read.
    fn text(&mut self, multi: bool, g: &Graph, body: impl AsRef<str>) -> Result<(), CliError> {
        if multi {
            self.line(format!("{}\t{}", emit_graph6(g), body.as_ref()))
        } else {
            self.line(body)
        }
    }
}

/// `{"schema_version": 1, "graph6": ..., <fields of body>}`.
fn graph_record(g: &Graph, body: impl Serialize) -> Value {
    let mut map = Map::new();
    map.insert("schema_version".into(), json!(SCHEMA_VERSION));
    map.insert("graph6".into(), json!(emit_graph6(g)));
    match serde_json::to_value(body).expect("report types serialize") {
        Value::Object(fields) => map.extend(fields),
        other => {
            map.insert("value".into(), other);
        }
    }
    Value::Object(map)
}

pub fn dispatch<W: Write>(command: Command, cx: &mut Ctx<'_, W>) -> Result<Verdict, CliError> {
    match command {
        Command::Sp(input) => sp(&input, cx),
        Command::Cnum { input, exhaustive } => cnum(&input, exhaustive, cx),
        Command::Cg { input, partition } => cg(&input, partition.as_deref(), cx),
        Command::Chain { input, max_steps, classify } => chain(&input, max_steps, classify, cx),
        Command::Family(FamilyCommand::Recognize { input, family }) => recognize(&input, family.as_deref(), cx),
        Command::Family(FamilyCommand::Generate { spec }) => generate(&spec, cx),
        Command::Verify { theorem, n_max } => verify(&theorem, n_max, cx),
        Command::Sweep { input, n_min, n_max, delta, sp_only } => {
            let graphs = match input.into_input() {
                Some(input) => load(&input)?.graphs,
                None => {
                    let filter = delta.map_or_else(GraphFilter::all, GraphFilter::delta);
                    let mut graphs = Vec::new();
                    for n in n_min..=n_max {
                        graphs.extend(enumerate_graphs(n, &filter)?);
                    }
                    graphs
                }
            };
            sweep(graphs, delta, sp_only, cx)
        }
        Command::Iso { g6, named, file } => iso(&g6, &named, file.as_deref(), cx),
    }
}

fn sp<W: Write>(input: &InputArgs, cx: &mut Ctx<'_, W>) -> Result<Verdict, CliError> {
    let loaded = load(input)?;
    let mut all = true;
    for g in &loaded.graphs {
        let verdict = sp_check(g);
        all &= verdict.is_sp;
        if cx.json {
            cx.record(&graph_record(g, &verdict))?;
        } else if let Some(v) = verdict.blocking_vertex {
            cx.text(loaded.multi, g, format!("not SP: vertex {v} has no coalition partner"))?;
        } else {
            cx.text(loaded.multi, g, "SP")?;
        }
    }
    Ok(all)
}

fn cnum<W: Write>(input: &InputArgs, exhaustive: bool, cx: &mut Ctx<'_, W>) -> Result<Verdict, CliError> {
    let loaded = load(input)?;
    for g in &loaded.graphs {
        let result = if exhaustive { coalition_number_exhaustive(g)? } else { coalition_number_exact(g)? };
        if cx.json {
            cx.record(&graph_record(g, &result))?;
        } else {
            cx.text(loaded.multi, g, result.value.to_string())?;
        }
    }
    Ok(true)
}

fn edge_list(g: &Graph) -> String {
    g.edges().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(" ")
}

fn cg<W: Write>(input: &InputArgs, partition: Option<&str>, cx: &mut Ctx<'_, W>) -> Result<Verdict, CliError> {
    let loaded = load(input)?;
    for g in &loaded.graphs {
        let p = match partition {
            Some(text) => Partition::parse(g.order(), text)?,
            None => singleton_partition(g),
        };
        let result = coalition_graph(g, &p)?;
        let valid = is_coalition_partition(g, &p)?.valid;
        if cx.json {
            cx.record(&graph_record(
                g,
                json!({
                    "partition": p,
                    "coalition_partition": valid,
                    "coalition_graph": emit_graph6(&result.graph),
                    "edges": result.graph.edges().collect::<Vec<_>>(),
                    "part_of_vertex": result.part_of_vertex,
                }),
            ))?;
        } else {
            let edges = edge_list(&result.graph);
            let note = if valid { "" } else { "  (not a coalition partition)" };
            cx.text(loaded.multi, g, format!("{}  edges: {}{note}", emit_graph6(&result.graph), if edges.is_empty() { "none" } else { &edges }))?;
        }
    }
    Ok(true)
}

fn describe_outcome(chain: &ChainResult) -> String {
    match chain.outcome {
        ChainOutcome::TerminatedNonSp { last_index: 0 } => "the first graph is not SP".into(),
        ChainOutcome::TerminatedNonSp { last_index } => format!("graph {last_index} is not SP"),
        ChainOutcome::Cycle { entry_index, period } => format!("repeats from graph {entry_index} with period {period}"),
        ChainOutcome::StepCap { cap } => format!("stopped after {cap} steps"),
    }
}

fn chain<W: Write>(input: &InputArgs, max_steps: usize, classify: bool, cx: &mut Ctx<'_, W>) -> Result<Verdict, CliError> {
    let loaded = load(input)?;
    for g in &loaded.graphs {
        let chain = sc_chain(g, max_steps)?;
        let lscc = chain.lscc();
        let shape = classify.then(|| classify_chain(g).map_err(|e| e.to_string()));
        if cx.json {
            let mut rec = graph_record(g, &chain);
            let map = rec.as_object_mut().expect("object");
            map.insert("lscc".into(), serde_json::to_value(lscc).expect("serializes"));
            match shape {
                Some(Ok(t)) => {
                    map.insert("template".into(), serde_json::to_value(t).expect("serializes"));
                }
                Some(Err(e)) => {
                    map.insert("template".into(), Value::Null);
                    map.insert("classify_error".into(), json!(e));
                }
                None => {}
            }
            cx.record(&rec)?;
        } else {
            let seq: Vec<String> = chain.sequence.iter().map(emit_graph6).collect();
            let mut body = format!("{}\n  {}\n  L_SCC = {lscc}", seq.join(" -> "), describe_outcome(&chain));
            match shape {
                Some(Ok(t)) => body += &format!("\n  shape: {}{}", t.label, if t.derived { " (derived)" } else { "" }),
                Some(Err(e)) => body += &format!("\n  shape: none ({e})"),
                None => {}
            }
            cx.text(loaded.multi, g, body)?;
        }
    }
    Ok(true)
}

fn parse_family_filter(family: Option<&str>) -> Result<Vec<&'static str>, CliError> {
    const ALL: [&str; 10] = ["f1", "h1", "f2", "h2", "f2.1", "f2.2", "f2.3", "h2.1", "h2.2", "h2.3"];
    match family {
        None => Ok(vec!["f1", "h1", "f2", "h2"]),
        Some(f) => ALL
            .iter()
            .find(|&&k| k == f)
            .map(|&k| vec![k])
            .ok_or_else(|| CliError::Usage(format!("unknown family `{f}`; expected one of {}", ALL.join(", ")))),
    }
}

fn to_json(w: impl Serialize) -> Value {
    serde_json::to_value(w).expect("witness types serialize")
}

/// (family label, witness JSON) for the first witness of `family`, if any.
fn witness_for(g: &Graph, family: &str) -> Option<(String, Value)> {
    match family {
        "f1" => recognize_f1(g).map(|w| ("f1".into(), to_json(w))),
        "h1" => recognize_h1(g).map(|w| ("h1".into(), to_json(w))),
        "f2" => recognize_f2(g).map(|w| (format!("f2.{}", w.subfamily), to_json(w))),
        "h2" => recognize_h2(g).map(|w| (format!("h2.{}", w.subfamily), to_json(w))),
        other => match other.parse::<FamilyId>().ok()? {
            FamilyId::F2(k) => recognize_f2_subfamily(g, k).map(|w| (other.to_string(), to_json(w))),
            FamilyId::H2(k) => recognize_h2_subfamily(g, k).map(|w| (other.to_string(), to_json(w))),
            _ => None,
        },
    }
}

fn recognize<W: Write>(input: &InputArgs, family: Option<&str>, cx: &mut Ctx<'_, W>) -> Result<Verdict, CliError> {
    let families = parse_family_filter(family)?;
    let loaded = load(input)?;
    let mut all = true;
    for g in &loaded.graphs {
        let found: Vec<(String, Value)> = families.iter().filter_map(|f| witness_for(g, f)).collect();
        all &= !found.is_empty();
        if cx.json {
            let witnesses: Map<String, Value> = found.into_iter().collect();
            cx.record(&graph_record(g, json!({ "families": families, "witnesses": witnesses })))?;
        } else if found.is_empty() {
            cx.text(loaded.multi, g, format!("in none of: {}", families.join(", ")))?;
        } else {
            let lines: Vec<String> = found.iter().map(|(k, w)| format!("{k} {w}")).collect();
            cx.text(loaded.multi, g, lines.join("\n"))?;
        }
    }
    Ok(all)
}

fn generate<W: Write>(spec: &str, cx: &mut Ctx<'_, W>) -> Result<Verdict, CliError> {
    let spec = FamilySpec::parse(spec)?;
    let g = generate_family(&spec)?;
    let recognized = spec.family.recognizes(&g);
    if cx.json {
        cx.record(&graph_record(&g, json!({ "spec": spec.to_string(), "order": g.order(), "recognized": recognized })))?;
    } else {
        cx.line(emit_graph6(&g))?;
    }
    Ok(recognized)
}

fn print_report<W: Write>(r: &TheoremReport, cx: &mut Ctx<'_, W>) -> Result<(), CliError> {
    if cx.json {
        return cx.record(&serde_json::to_value(r).expect("reports serialize"));
    }
    let [lo, hi] = r.order_range;
    cx.line(format!(
        "{:<8} {}  {} graphs, orders {lo}..{hi}, {:.2}s",
        r.theorem_id,
        if r.passed { "PASS" } else { "FAIL" },
        r.graphs_checked,
        r.elapsed
    ))?;
    for s in &r.subchecks {
        cx.line(format!("    {}: {} checked, {} failed", s.name, s.graphs_checked, s.failures))?;
    }
    if !r.histogram.is_empty() {
        let hist: Vec<String> = r.histogram.iter().map(|(k, v)| format!("{k}: {v}")).collect();
        cx.line(format!("    histogram: {}", hist.join(", ")))?;
    }
    for c in r.counterexamples.iter().take(10) {
        cx.line(format!("    counterexample {} [{}] {}", c.graph6, c.check, c.detail))?;
    }
    if r.counterexamples.len() > 10 {
        cx.line(format!("    ... {} more (use --json for all)", r.counterexamples.len() - 10))?;
    }
    for n in &r.notes {
        cx.line(format!("    note: {n}"))?;
    }
    Ok(())
}

fn verify<W: Write>(theorem: &str, n_max: usize, cx: &mut Ctx<'_, W>) -> Result<Verdict, CliError> {
    let ids: Vec<&str> = if theorem == "all" {
        THEOREMS.iter().filter(|&&(_, min)| min <= n_max).map(|&(id, _)| id).collect()
    } else {
        vec![theorem]
    };
    let mut all = true;
    for id in ids {
        let report = verify_theorem(id, n_max)?;
        all &= report.passed;
        print_report(&report, cx)?;
    }
    Ok(all)
}

fn sweep<W: Write>(graphs: Vec<Graph>, delta: Option<usize>, sp_only: bool, cx: &mut Ctx<'_, W>) -> Result<Verdict, CliError> {
    let graphs: Vec<Graph> = graphs
        .into_iter()
        .filter(|g| delta.is_none_or(|d| g.min_degree() == d))
        .filter(|g| !sp_only || sp_check(g).is_sp)
        .collect();
    let records = sweep_chains(&graphs);
    if !cx.json {
        cx.line(format!("{:<12} {:>2} {:>2} {:<3} {:<14} shape", "graph6", "n", "δ", "SP", "L_SCC"))?;
    }
    for rec in &records {
        if cx.json {
            cx.record(&serde_json::to_value(rec).expect("records serialize"))?;
        } else {
            let lscc = rec.lscc.map_or_else(|| "-".to_string(), |l| l.to_string());
            cx.line(format!(
                "{:<12} {:>2} {:>2} {:<3} {:<14} {}{}",
                rec.graph6,
                rec.order,
                rec.min_degree,
                if rec.sp { "yes" } else { "no" },
                lscc,
                rec.label,
                if rec.derived { " (derived)" } else { "" }
            ))?;
        }
    }
    Ok(true)
}

fn iso<W: Write>(
    g6: &[String],
    named: &[String],
    file: Option<&std::path::Path>,
    cx: &mut Ctx<'_, W>,
) -> Result<Verdict, CliError> {
    let mut graphs = Vec::new();
    for t in g6 {
        graphs.push(parse_g6(t)?);
    }
    for n in named {
        graphs.push(coalition_core::build_named(n)?);
    }
    if let Some(path) = file {
        graphs.extend(load_file(path)?);
    }
    let [a, b] = <[Graph; 2]>::try_from(graphs)
        .map_err(|v| CliError::Usage(format!("iso needs exactly two graphs, got {}", v.len())))?;
    let (ca, cb) = (canonical_form(&a)?, canonical_form(&b)?);
    let same = ca == cb;
    if cx.json {
        cx.record(&json!({
            "schema_version": SCHEMA_VERSION,
            "graphs": [emit_graph6(&a), emit_graph6(&b)],
            "canonical_forms": [ca, cb],
            "isomorphic": same,
        }))?;
    } else {
        cx.line(if same { "isomorphic" } else { "not isomorphic" })?;
    }
    Ok(same)
}

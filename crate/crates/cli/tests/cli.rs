use std::path::PathBuf;
use std::process::{Command, Output};

use coalition_core::{canonical_form, parse_graph6, sc_graph, sp_check};
use serde_json::Value;

fn kit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coalition-kit")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn worked_chains_match_golden_files() {
    for (expr, stem) in [("C(4)", "c4"), ("C(5)", "c5"), ("P(3)", "p3")] {
        let json = kit(&["chain", "--named", expr, "--json"]);
        assert_eq!(json.status.code(), Some(0));
        assert_eq!(stdout(&json), golden(&format!("chain_{stem}.json")), "{expr} JSON");
        let text = kit(&["chain", "--named", expr, "--classify"]);
        assert_eq!(stdout(&text), golden(&format!("chain_{stem}.txt")), "{expr} text");
    }
}

#[test]
fn p3_chain_is_infinite_with_period_two() {
    let o = kit(&["chain", "--named", "P(3)", "--json"]);
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["lscc"]["kind"], "Infinite");
    assert_eq!(v["outcome"]["period"], 2);
}

#[test]
fn cnum_of_c5_is_five() {
    let o = kit(&["cnum", "--named", "C(5)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "5\n");
}

#[test]
fn c7_is_not_sp() {
    let o = kit(&["sp", "--named", "C(7)"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("vertex 0"));
    let o = kit(&["sp", "--named", "C(7)", "--json"]);
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["is_sp"], false);
    assert_eq!(v["blocking_vertex"], 0);
}

#[test]
fn usage_and_input_errors_exit_two() {
    assert_eq!(kit(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(kit(&["sp"]).status.code(), Some(2));
    assert_eq!(kit(&["sp", "--named", "C(4)", "--g6", "Cl"]).status.code(), Some(2));
    assert_eq!(kit(&["sp", "--g6", "C"]).status.code(), Some(2));
    assert_eq!(kit(&["cnum", "--named", "K(10)"]).status.code(), Some(2));
    assert_eq!(kit(&["verify", "--theorem", "thm99"]).status.code(), Some(2));
    assert_eq!(kit(&["family", "generate", "f2.3:L1=0,R2=1,W=1"]).status.code(), Some(2));
    assert_eq!(kit(&["--help"]).status.code(), Some(0));
}

#[test]
fn verify_exit_code_follows_the_verdict() {
    assert_eq!(kit(&["verify", "--theorem", "thm1", "--n-max", "5"]).status.code(), Some(0));
    let o = kit(&["verify", "--theorem", "thm8", "--n-max", "6", "--json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["passed"], false);
}

#[test]
fn jobs_flag_and_env_are_accepted() {
    let o = kit(&["sweep", "--n-max", "4", "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let o = Command::new(env!("CARGO_BIN_EXE_coalition-kit"))
        .args(["sweep", "--n-max", "4"])
        .env("COALITION_KIT_JOBS", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 1 + 1 + 2 + 4 + 11);
}

#[test]
fn sweep_json_round_trips_through_graph6() {
    let o = kit(&["sweep", "--n-max", "5", "--delta", "2", "--json"]);
    for line in stdout(&o).lines() {
        let v: Value = serde_json::from_str(line).unwrap();
        let g = parse_graph6(v["graph6"].as_str().unwrap()).unwrap();
        assert_eq!(v["sp"], sp_check(&g).is_sp);
        assert_eq!(v["order"], g.order());
    }
}

#[test]
fn cg_json_round_trips() {
    let o = kit(&["cg", "--named", "P(4)", "--json"]);
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    let g = parse_graph6(v["graph6"].as_str().unwrap()).unwrap();
    let cg = parse_graph6(v["coalition_graph"].as_str().unwrap()).unwrap();
    assert_eq!(cg, sc_graph(&g).unwrap());
    assert_eq!(v["coalition_partition"], true);
}

#[test]
fn generated_members_are_recognized() {
    let o = kit(&["family", "generate", "f1:P=1,Q=0,seed=3", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["recognized"], true);
    let g6 = v["graph6"].as_str().unwrap().to_string();
    let o = kit(&["family", "recognize", "--g6", &g6, "--family", "f1", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let r: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert!(r["witnesses"]["f1"].is_object());
}

#[test]
fn iso_compares_canonical_forms() {
    let o = kit(&["iso", "--named", "C(5)", "--g6", "DUW", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    let c5 = parse_graph6("DUW").unwrap();
    assert_eq!(v["canonical_forms"][1], serde_json::to_value(canonical_form(&c5).unwrap()).unwrap());
    assert_eq!(kit(&["iso", "--named", "C(4)", "--named", "P(4)"]).status.code(), Some(1));
    assert_eq!(kit(&["iso", "--named", "C(4)"]).status.code(), Some(2));
}

#[test]
fn file_input_prefixes_each_line() {
    let dir = std::env::temp_dir().join(format!("coalition-kit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cycles.g6");
    std::fs::write(&path, "Cl\nDUW\n").unwrap();
    let o = kit(&["cnum", "--file", path.to_str().unwrap()]);
    assert_eq!(stdout(&o), "Cl\t4\nDUW\t5\n");
    std::fs::remove_dir_all(&dir).unwrap();
}

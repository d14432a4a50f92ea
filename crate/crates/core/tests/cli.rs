use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn hibi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hibi")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn path(name: &str) -> String {
    data(name).to_string_lossy().into_owned()
}

#[test]
fn analyze_butterfly() {
    let out = hibi(&["analyze", &path("butterfly.json")]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["predicates"]["level"], true);
    assert_eq!(v["predicates"]["pseudo_gorenstein"], false);
    assert_eq!(v["predicates"]["miyazaki"]["upper"], false);
    assert_eq!(v["predicates"]["miyazaki"]["lower"], false);
}

#[test]
fn analyze_chain() {
    let out = hibi(&["analyze", &path("chain3.json")]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["ideal"]["generators"], 0);
    assert_eq!(v["invariants"]["reg"], 0);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));
}

#[test]
fn analyze_nonpure_with_betti() {
    let out = hibi(&["analyze", &path("nonpure8.json"), "--betti", "4,6"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let entries: Vec<(u64, u64, u64)> = v["betti"]["ideal"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| (e["i"].as_u64().unwrap(), e["j"].as_u64().unwrap(), e["value"].as_u64().unwrap()))
        .collect();
    assert_eq!(entries, vec![(0, 2, 5), (1, 3, 5), (2, 5, 1)]);
}

#[test]
fn analyze_is_deterministic_and_writes_files() {
    let a = hibi(&["analyze", &path("two_chains.json"), "--r", "2"]);
    let b = hibi(&["analyze", &path("two_chains.json"), "--r", "2"]);
    assert_eq!(a.stdout, b.stdout);
    let file = std::env::temp_dir().join(format!("hibi-report-{}.json", std::process::id()));
    let c = hibi(&["analyze", &path("two_chains.json"), "--r", "2", "--json", file.to_str().unwrap()]);
    assert_eq!(c.status.code(), Some(0));
    assert_eq!(std::fs::read(&file).unwrap(), a.stdout);
    std::fs::remove_file(file).unwrap();
    let v = json(&a);
    assert_eq!(v["canonical"]["type"], 2);
    // the echoed input parses back to the same poset
    let echoed = serde_json::to_string(&v["input"]).unwrap();
    let again = hibi::io::parse_input(&echoed).unwrap();
    assert!(matches!(again, hibi::io::Input::Poset(p) if p.len() == 6));
}

#[test]
fn sweep_counts_and_order() {
    let out = hibi(&["sweep", "--max-elements", "4", "--checks", "regularity,gorenstein"]);
    assert_eq!(out.status.code(), Some(0));
    let lines: Vec<Value> = String::from_utf8(out.stdout.clone())
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 1 + 2 + 5 + 16);
    assert!(lines.iter().enumerate().all(|(i, l)| l["index"] == i as u64));
    let summary: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(summary["violations"].as_array().unwrap().len(), 0);
    let parallel = hibi(&["sweep", "--max-elements", "4", "--checks", "regularity,gorenstein", "--jobs", "4"]);
    assert_eq!(parallel.stdout, out.stdout);
}

#[test]
fn sweep_single_element() {
    let out = hibi(&["sweep", "--max-elements", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 1);
    let line: Value = serde_json::from_str(text.trim()).unwrap();
    assert!(line["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));
}

#[test]
fn groebner_diamond_all_orders() {
    let out = hibi(&["groebner", &path("diamond.json"), "--sample-orders", "all"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["sampled"]["message"], "no squarefree initial ideal found (240 orders)");
}

#[test]
fn groebner_boolean_and_pentagon() {
    let v = json(&hibi(&["groebner", &path("b3.json")]));
    assert_eq!(v["checks"][0]["name"], "hibi_groebner_basis");
    assert_eq!(v["checks"][0]["pass"], true);
    let out = hibi(&["groebner", &path("pentagon.json")]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!(v["checks"].as_array().unwrap().is_empty());
    assert!(!v["basis"].as_array().unwrap().is_empty());
}

#[test]
fn betti_and_planar_verbs() {
    let v = json(&hibi(&["betti", &path("b3.json"), "--max-i", "4", "--max-j", "6", "--multigraded"]));
    assert_eq!(v["complete"], true);
    assert!(!v["multigraded"].as_array().unwrap().is_empty());
    let out = hibi(&["planar-classify", &path("grid32.json"), "--observe", "5,8"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["linrel_predicted"], true);
    assert_eq!(v["pureres_predicted"], "none");
    assert_eq!(v["observed"]["pure_resolution"]["holds"], false);
}

#[test]
fn exit_codes() {
    let bad = std::env::temp_dir().join(format!("hibi-bad-{}.json", std::process::id()));
    std::fs::write(&bad, "{\"type\": \"poset\", \"elements\": [").unwrap();
    assert_eq!(hibi(&["analyze", bad.to_str().unwrap()]).status.code(), Some(2));
    std::fs::remove_file(bad).unwrap();
    assert_eq!(hibi(&["sweep", "--max-elements", "7"]).status.code(), Some(3));
    assert_eq!(hibi(&["sweep", "--planar-frame", "5,1"]).status.code(), Some(3));
    assert_eq!(hibi(&["planar-classify", &path("b3.json")]).status.code(), Some(2));
}

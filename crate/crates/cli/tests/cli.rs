use std::path::Path;
use std::process::{Command, Output};

use hypercert::Hypergraph;
use hypercert_cli::format::{parse_hypergraph, write_hypergraph};
use proptest::prelude::*;
use serde_json::Value;

fn hc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hypercert")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

fn gen(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name).to_string_lossy().into_owned();
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["-o", &path]);
    let out = hc(&full);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    path
}

#[test]
fn gen_complete_file_parses_back() {
    let dir = tempfile::tempdir().unwrap();
    let p = gen(dir.path(), "k63.txt", &["complete", "6", "3"]);
    let h = parse_hypergraph(&std::fs::read_to_string(p).unwrap()).unwrap();
    assert_eq!(h.vertex_count(), 6);
    assert_eq!(h.edge_count(), 20);
    assert_eq!(h.uniformity(), Some(3));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let k43 = gen(dir.path(), "k43.txt", &["complete", "4", "3"]);
    let k53 = gen(dir.path(), "k53.txt", &["complete", "5", "3"]);
    assert_eq!(hc(&["certify", &k43]).status.code(), Some(0));
    assert_eq!(hc(&["certify", &k53]).status.code(), Some(10));
    assert_eq!(hc(&["certify", "--theorem", "4u", &k53]).status.code(), Some(2));
    assert_eq!(hc(&["certify", "/nonexistent/file"]).status.code(), Some(2));
    assert_eq!(hc(&["gen", "complete", "3", "4"]).status.code(), Some(2));

    let mixed = dir.path().join("mixed.txt");
    std::fs::write(&mixed, "5 2 0\n0 1 2\n1 2 3 4\n").unwrap();
    let out = hc(&["certify", "--theorem", "3u", mixed.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn reports_are_deterministic_apart_from_timing() {
    let dir = tempfile::tempdir().unwrap();
    let h = gen(dir.path(), "mod.txt", &["modular", "12", "4", "3", "0"]);
    let strip = |o: &Output| {
        let mut v = json(o);
        v.as_object_mut().unwrap().remove("timingMs");
        v
    };
    let a = hc(&["certify", "--oracle", &h]);
    let b = hc(&["certify", "--oracle", &h]);
    assert_eq!(strip(&a), strip(&b));
    let v = json(&a);
    assert_eq!(v["specVersion"], 1);
    assert!(v["inputHash"].as_str().unwrap().starts_with("sha256:"));
    assert_eq!(v["results"][1]["consistent"], true);
}

#[test]
fn json_out_file_matches_plain_report() {
    let dir = tempfile::tempdir().unwrap();
    let h = gen(dir.path(), "k53.txt", &["complete", "5", "3"]);
    let report = dir.path().join("r.json");
    let out = hc(&["certify", "--json-out", report.to_str().unwrap(), &h]);
    assert_eq!(out.status.code(), Some(10));
    let saved: Value = serde_json::from_str(&std::fs::read_to_string(report).unwrap()).unwrap();
    assert_eq!(saved["results"], json(&hc(&["certify", &h]))["results"]);
}

#[test]
fn spectrum_of_edgeless_hypergraph_is_zero() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("empty.txt");
    std::fs::write(&p, "4 0 3\n").unwrap();
    let out = hc(&["spectrum", p.to_str().unwrap()]);
    assert!(out.status.success());
    let s = &json(&out)["results"][0];
    assert_eq!(s["lambdaMin"], 0.0);
    assert_eq!(s["lambdaMax"], 0.0);
}

#[test]
fn pair_spectrum_of_k64() {
    let dir = tempfile::tempdir().unwrap();
    let h = gen(dir.path(), "k64.txt", &["complete", "6", "4"]);
    let out = hc(&["spectrum", "--target", "sset2", &h]);
    let s = &json(&out)["results"][0];
    assert_eq!(s["n"], 15);
    assert!((s["lambdaMin"].as_f64().unwrap() + 3.0).abs() < 1e-9);
}

#[test]
fn oracle_queries() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = dir.path().join("c5.txt");
    std::fs::write(&c5, "5 5 2\n0 1\n1 2\n2 3\n3 4\n0 4\n").unwrap();
    let c5 = c5.to_str().unwrap();
    let mono = json(&hc(&["oracle", "--query", "minmono", "-k", "2", c5]));
    assert_eq!(mono["results"][0]["answer"], 1);
    let chi = json(&hc(&["oracle", "--query", "chromatic", c5]));
    assert_eq!(chi["results"][0]["answer"], 3);

    let big = gen(dir.path(), "k30.txt", &["complete", "30", "3"]);
    assert_eq!(hc(&["oracle", "--query", "2color", &big]).status.code(), Some(2));
}

#[test]
fn project_exports_edges() {
    let dir = tempfile::tempdir().unwrap();
    let h = gen(dir.path(), "k43.txt", &["complete", "4", "3"]);
    let out = dir.path().join("g.txt");
    let st = hc(&["project", &h, "-o", out.to_str().unwrap()]);
    assert!(st.status.success(), "{}", String::from_utf8_lossy(&st.stderr));
    let text = std::fs::read_to_string(out).unwrap();
    assert!(text.lines().count() >= 6, "{text}");
}

#[test]
fn verify_suites_pass() {
    for args in [
        &["verify", "--suite", "expectation", "--seed", "7"][..],
        &["verify", "--suite", "lemma", "--seed", "1"],
        &["verify", "--suite", "soundness", "--sizes", "8..12", "--count", "40"],
    ] {
        let out = hc(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        assert!(String::from_utf8_lossy(&out.stderr).contains("PASS"));
    }
}

fn arb_hypergraph() -> impl Strategy<Value = Hypergraph> {
    (2usize..9).prop_flat_map(|n| {
        let edge = proptest::collection::btree_set(0..n as u32, 2..=n.min(5)).prop_map(|s| s.into_iter().collect::<Vec<_>>());
        proptest::collection::vec(edge, 0..12).prop_map(move |edges| Hypergraph::new(n, edges).unwrap())
    })
}

proptest! {
    #[test]
    fn write_then_parse_round_trips(h in arb_hypergraph()) {
        let back = parse_hypergraph(&write_hypergraph(&h)).unwrap();
        prop_assert_eq!(back.vertex_count(), h.vertex_count());
        prop_assert_eq!(back.edges(), h.edges());
        prop_assert_eq!(back.uniformity(), h.uniformity());
    }
}

use std::path::PathBuf;
use std::process::{Command, Output};

fn bpoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bpoly")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn fixture(name: &str, body: &str) -> String {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, body).unwrap();
    path.to_string_lossy().into_owned()
}

const K4: &str = r#"{"n":4,"edges":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]}"#;
const K4_MINUS_EDGE: &str = r#"{"n":4,"edges":[[0,1],[0,2],[0,3],[1,2],[1,3]]}"#;

#[test]
fn compute_k4_plain() {
    let k4 = fixture("k4.json", K4);
    let out = bpoly(&["compute", "--input", &k4]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1 + 4*x^3*y + 6*x^2*y^2 + 4*x*y^3 + y^4\n");
}

#[test]
fn single_vertex() {
    let e1 = fixture("e1.json", r#"{"n":1,"edges":[]}"#);
    let out = bpoly(&["compute", "--input", &e1]);
    assert_eq!(stdout(&out), "1 + y\n");
}

#[test]
fn family_methods_agree() {
    let mut seen = Vec::new();
    for method in ["auto", "enumerate", "formula"] {
        let out = bpoly(&["compute", "--family", "path", "--n", "4", "--method", method]);
        assert_eq!(out.status.code(), Some(0));
        seen.push(stdout(&out));
    }
    assert!(seen.windows(2).all(|w| w[0] == w[1]));
    assert!(seen[0].starts_with("1 + "));
}

#[test]
fn json_format_round_trips() {
    let out = bpoly(&["compute", "--family", "complete", "--n", "4", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["n"], 4);
    assert_eq!(doc["coefficients"].as_array().unwrap().len(), 5);
}

#[test]
fn invariants_of_k4() {
    let k4 = fixture("k4-inv.json", K4);
    let out = bpoly(&["invariants", "--input", &k4]);
    assert_eq!(out.status.code(), Some(0));
    let r: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r["n"], 4);
    assert_eq!(r["m"], 6);
    assert_eq!(r["gamma"], 1);
    assert_eq!(r["gamma_r"], 2);
    assert_eq!(r["differential"], 2);
    assert_eq!(r["kv"], 3);
    assert_eq!(r["connected"], true);
    assert_eq!(r["degree_sequence"], serde_json::json!([3, 3, 3, 3]));
}

#[test]
fn invariants_of_disconnected_graphs() {
    let out = bpoly(&["invariants", "--family", "empty", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let r: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r["isolated"], 3);
    assert!(r["kv"].is_null());

    let two_paths = fixture("p2p3.json", r#"{"n":5,"edges":[[0,1],[2,3],[3,4]]}"#);
    let out = bpoly(&["invariants", "--input", &two_paths]);
    let r: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r["connected"], false);
    assert_eq!(r["components"], 2);
    assert_eq!(r["component_orders"], serde_json::json!([2, 3]));
    assert_eq!(r["gamma"], 2);
}

#[test]
fn verify_cycle_family() {
    let out = bpoly(&["verify", "--family", "cycle", "--n", "6"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.lines().all(|l| !l.starts_with("FAIL")));
    assert!(text.trim_end().ends_with("checks passed"));
}

#[test]
fn verify_catalog() {
    let out = bpoly(&["verify", "--catalog", "n<=4", "--check", "edge-delete,factors"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("PASS edge-delete"));
}

#[test]
fn compare_equal_polynomial_pair() {
    let out = bpoly(&["compare", "--family", "complete_bipartite", "--n", "3", "--m", "3", "--input",
        &fixture("prism.g6", "Es\\o\n")]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).starts_with("EQUAL\n"));
}

#[test]
fn compare_k4_with_wheel() {
    let k4 = fixture("k4-cmp.json", K4);
    let out = bpoly(&["compare", "--family", "wheel", "--n", "4", "--input", &k4]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn compare_reports_first_difference() {
    let a = fixture("k4-a.json", K4);
    let b = fixture("k4e.json", K4_MINUS_EDGE);
    let out = bpoly(&["compare", "--input", &a, "--input", &b]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).starts_with("DIFFERENT at coefficient (2,1): 0 vs 2"));
}

#[test]
fn malformed_input_exits_2() {
    let bad = fixture("bad.json", r#"{"n":2,"edges":[[0,5]]}"#);
    assert_eq!(bpoly(&["compute", "--input", &bad]).status.code(), Some(2));
    let junk = fixture("junk.json", "not json");
    assert_eq!(bpoly(&["compute", "--input", &junk]).status.code(), Some(2));
    assert_eq!(bpoly(&["compute", "--family", "nope", "--n", "3"]).status.code(), Some(2));
}

#[test]
fn cap_exceeded_exits_3() {
    let out = bpoly(&["compute", "--family", "path", "--n", "25", "--method", "enumerate"]);
    assert_eq!(out.status.code(), Some(3));
    let out = bpoly(&["compute", "--family", "cycle", "--n", "8", "--method", "enumerate", "--max-n", "6"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn large_path_by_formula() {
    let out = bpoly(&["compute", "--family", "path", "--n", "64"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).ends_with("y^64\n"));
}

#[test]
fn output_is_deterministic() {
    let args = ["compute", "--family", "wheel", "--n", "17", "--method", "enumerate"];
    let first = stdout(&bpoly(&args));
    let threaded = stdout(&bpoly(&[&args[..], &["--threads", "3"]].concat()));
    assert_eq!(first, threaded);
    assert_eq!(first, stdout(&bpoly(&args)));
}

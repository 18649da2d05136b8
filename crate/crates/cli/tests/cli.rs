use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn charlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_charlab")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = charlab(&all);
    let v = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stderr)));
    (v, out.status.code().unwrap())
}

fn degrees(v: &Value) -> Vec<u64> {
    v["table"]["degrees"].as_array().unwrap().iter().map(|d| d.as_u64().unwrap()).collect()
}

#[test]
fn table_summaries() {
    let (v, code) = json(&["table", "A(5)"]);
    assert_eq!(code, 0);
    assert_eq!(degrees(&v), [1, 3, 3, 4, 5]);
    assert!(v["verification"]["failure"].is_null());

    let (v, _) = json(&["table", "C(1)"]);
    assert_eq!(degrees(&v), [1]);

    let (v, _) = json(&["table", "S(7)"]);
    assert_eq!(v["table"]["classes"], 15);
    assert_eq!(degrees(&v).iter().map(|d| d * d).sum::<u64>(), 5040);
}

#[test]
fn text_output_lists_degrees() {
    let out = charlab(&["table", "A(5)", "--p", "5"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("degrees: 1,3,3,4,5"));
    assert!(text.contains("5-blocks: 2"));
}

#[test]
fn single_checks() {
    let (v, code) = json(&["check", "A", "A(5)", "--p", "5"]);
    assert_eq!((v["verdict"].as_str(), code), (Some("pass"), 0));
    assert_eq!(v["reports"][0]["comparisons"][0]["lhs"], 2);

    let (v, code) = json(&["check", "exponent", "C(4)", "--p", "2"]);
    assert_eq!(code, 0);
    let c = &v["reports"][0]["comparisons"];
    assert_eq!((c[0]["lhs"].as_u64(), c[0]["rhs"].as_u64()), (Some(4), Some(4)));

    let (v, code) = json(&["check", "symdiv", "--p", "5", "--nmax", "7"]);
    assert_eq!((v["verdict"].as_str(), code), (Some("pass"), 0));

    let (v, code) = json(&["check", "all", "SL(2,3)", "--p", "2"]);
    assert_eq!((v["verdict"].as_str(), code), (Some("pass"), 0));
    assert_eq!(v["reports"].as_array().unwrap().len(), 8);
}

#[test]
fn residue_filter_keeps_one_k() {
    let (v, _) = json(&["check", "a", "A(7)", "--p", "7", "--k", "-2"]);
    let labels: Vec<&str> =
        v["reports"][0]["comparisons"].as_array().unwrap().iter().map(|c| c["label"].as_str().unwrap()).collect();
    assert_eq!(labels, ["k=2", "|Irr_p'|"]);
}

#[test]
fn inapplicable_is_exit_zero() {
    let (v, code) = json(&["check", "b", "A(5)", "--p", "7"]);
    assert_eq!((v["verdict"].as_str(), code), (Some("inapplicable"), 0));
}

#[test]
fn exit_codes_for_errors() {
    assert_eq!(charlab(&["table", "S("]).status.code(), Some(2));
    assert_eq!(charlab(&["check", "a", "A(5)", "--p", "4"]).status.code(), Some(2));
    assert_eq!(charlab(&["check", "a", "A(5)", "--p", "5", "--k", "10"]).status.code(), Some(2));
    assert_eq!(charlab(&["check", "a", "--p", "5"]).status.code(), Some(2));
    assert_eq!(charlab(&["table", "S(12)"]).status.code(), Some(3));
    assert_eq!(charlab(&["table", "S(6)", "--budget-order", "100"]).status.code(), Some(3));
    assert_eq!(charlab(&["ingest", "/nonexistent/file"]).status.code(), Some(2));
}

#[test]
fn corpus_filters() {
    let (v, code) = json(&["corpus", "--filter", "A(5)", "--p", "5"]);
    assert_eq!(code, 0);
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 1);
    assert_eq!(entries[0]["primes"].as_array().unwrap().len(), 1);
    assert_eq!(entries[0]["primes"][0]["verdict"], "pass");

    let (v, code) = json(&["corpus", "--filter", "C(1000)"]);
    assert_eq!(code, 0);
    assert!(v["entries"].as_array().unwrap().is_empty());
}

#[test]
fn cached_and_cold_reports_are_identical() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let args = ["check", "all", "GL(2,3)", "--p", "2", "--json"];
    let cold = charlab(&args).stdout;
    let first = charlab(&[&args[..], &["--cache-dir", cache]].concat()).stdout;
    assert!(dir.path().join("GL(2,3)-48.ct.json").exists());
    let warm = charlab(&[&args[..], &["--cache-dir", cache]].concat()).stdout;
    assert_eq!(cold, first);
    assert_eq!(cold, warm);
}

#[test]
fn seed_changes_only_the_config_hash() {
    let (a, _) = json(&["check", "all", "S(5)", "--p", "3", "--seed", "1"]);
    let (b, _) = json(&["check", "all", "S(5)", "--p", "3", "--seed", "99"]);
    assert_eq!(a["reports"], b["reports"]);
    assert_ne!(a["config_hash"], b["config_hash"]);
    assert_eq!(a["version"], env!("CARGO_PKG_VERSION"));
}

#[test]
fn ingest_degree_list_and_table_file() {
    let fixture = Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/tests/data/HS.degrees");
    let (v, code) = json(&["ingest", fixture.to_str().unwrap(), "--p", "5"]);
    assert_eq!(code, 0);
    assert_eq!(v["Mk"]["1"], 9);
    assert_eq!(v["Mk"]["2"], 4);

    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("a5.json");
    assert!(charlab(&["table", "A(5)", "--out", file.to_str().unwrap()]).status.success());
    let cache = dir.path().join("cache");
    let (v, code) = json(&["ingest", file.to_str().unwrap(), "--p", "5", "--cache-dir", cache.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["blocks"]["blocks"].as_array().unwrap().len(), 2);
    assert!(cache.join("A5-60.ct.json").exists());

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, std::fs::read_to_string(&file).unwrap().replace("\"60\"", "\"61\"")).unwrap();
    assert_eq!(charlab(&["ingest", bad.to_str().unwrap()]).status.code(), Some(2));
}

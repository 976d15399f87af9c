use std::io::Write;
use std::process::{Command, Output};

use canonlab::input::load_poset;
use canonlab_core::poset::PosetFile;
use canonlab_core::{Labeling, Poset};
use tempfile::NamedTempFile;

fn canonlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_canonlab"))
        .args(args)
        .env_remove("CANONLAB_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn poset_file(json: &str) -> NamedTempFile {
    let mut f = tempfile::Builder::new().suffix(".json").tempfile().unwrap();
    f.write_all(json.as_bytes()).unwrap();
    f
}

#[test]
fn canon_polynomial_of_three_row_chain() {
    let o = canonlab(&["poly", "canon", "--m", "3", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("coeffs: [1,4,4,1]"), "{}", stdout(&o));

    let o = canonlab(&["poly", "canon", "--m", "3", "--n", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["coeffs"], serde_json::json!(["1", "4", "4", "1"]));
}

#[test]
fn named_polynomials_as_csv() {
    let o = canonlab(&["poly", "eulerian", "--n", "4", "--format", "csv"]);
    assert_eq!(stdout(&o), "exponent,coefficient\n0,1\n1,11\n2,11\n3,1\n");
    let o = canonlab(&["poly", "narayana", "--n", "3"]);
    assert!(stdout(&o).contains("coeffs: [1,3,1]"));
    let o = canonlab(&["poly", "weak", "--m", "2", "--n", "2"]);
    assert!(stdout(&o).contains("coeffs: [0,1,2,1]"));
    let o = canonlab(&["poly", "dissonant", "--m", "2", "--n", "2", "--remove", "2:1"]);
    assert!(stdout(&o).contains("coeffs: [1,4,1]"));
    assert!(stdout(&o).contains("mode=row-fixed:1"));
    let o = canonlab(&["poly", "order", "--m", "2", "--max-j", "3"]);
    assert!(stdout(&o).contains("[1,3,6,10]"));
}

#[test]
fn main_identity_holds() {
    let o = canonlab(&["verify", "thm-main", "--m", "2", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = canonlab(&["verify", "canon-narayana", "--n", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["failing"], 0);
    assert_eq!(v["outcomes"][0]["report"]["identity"]["lhs"]["coeffs"], serde_json::json!(["1", "7", "14", "7", "1"]));
}

#[test]
fn gamma_sweep_two_by_three() {
    let o = canonlab(&["sweep", "gamma", "--m", "2", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().filter(|l| l.starts_with("mask=")).collect();
    assert_eq!(rows.len(), 16);
    assert!(rows.iter().all(|r| r.contains("gamma-positive: true")));

    let o = canonlab(&["sweep", "gamma", "--m", "2", "--n", "3", "--format", "csv"]);
    let mut reader = csv::Reader::from_reader(o.stdout.as_slice());
    let header: Vec<String> = reader.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(
        header,
        ["removed_edge_mask", "degree", "palindromic", "gamma", "gamma_positive", "unimodal", "mode"]
    );
    let records: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(records.len(), 16);
    assert_eq!(&records[0][3], "1;3;2");
    assert!(records.iter().enumerate().all(|(i, r)| r[0] == i.to_string() && &r[4] == "true"));
}

#[test]
fn output_does_not_depend_on_thread_count() {
    for args in [
        vec!["sweep", "gamma", "--m", "3", "--n", "2", "--format", "json"],
        vec!["poly", "canon", "--m", "3", "--n", "3"],
        vec!["extensions", "--m", "2", "--n", "4", "--count"],
        vec!["verify", "dissonant-palindromy", "--m", "2", "--n", "3", "--format", "csv"],
    ] {
        let one = canonlab(&[args.as_slice(), &["--jobs", "1"]].concat());
        let four = canonlab(&[args.as_slice(), &["--jobs", "4"]].concat());
        assert_eq!(one.status.code(), Some(0));
        assert_eq!(one.stdout, four.stdout, "{args:?}");
    }
}

#[test]
fn cycles_exit_two_with_witness() {
    let f = poset_file(r#"{"elements": 3, "covers": [[0, 1], [1, 2], [2, 0]]}"#);
    let o = canonlab(&["poly", "hstar", "--poset", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("0 -> 1 -> 2 -> 0"), "{}", stderr(&o));
}

#[test]
fn redundant_covers_need_repair() {
    let f = poset_file(r#"{"elements": 3, "covers": [[0, 1], [1, 2], [0, 2]]}"#);
    let path = f.path().to_str().unwrap();
    let o = canonlab(&["poly", "hstar", "--poset", path]);
    assert_eq!(o.status.code(), Some(2));
    let o = canonlab(&["poly", "hstar", "--poset", path, "--repair"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("coeffs: [1]"));
}

#[test]
fn malformed_files_and_arguments_exit_two() {
    let f = poset_file(r#"{"elements": 2, "edges": []}"#);
    assert_eq!(canonlab(&["poly", "hstar", "--poset", f.path().to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(canonlab(&["poly", "hstar", "--poset", "/nonexistent/p.json"]).status.code(), Some(2));
    assert_eq!(canonlab(&["poly", "canon", "--n", "2"]).status.code(), Some(2));
    assert_eq!(canonlab(&["poly", "dissonant", "--m", "2", "--n", "2", "--remove", "1-1"]).status.code(), Some(2));
    assert_eq!(canonlab(&["verify", "no-such-claim"]).status.code(), Some(2));
    assert_eq!(canonlab(&["bogus"]).status.code(), Some(2));
    assert_eq!(canonlab(&["--help"]).status.code(), Some(0));
}

#[test]
fn caps_and_overrides() {
    let o = canonlab(&["poly", "canon", "--m", "3", "--n", "5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--force-cap"));
    let o = canonlab(&["poly", "canon", "--m", "2", "--n", "7", "--force-cap", "14"]);
    assert_eq!(o.status.code(), Some(0));

    let o = Command::new(env!("CARGO_BIN_EXE_canonlab"))
        .args(["extensions", "--m", "2", "--n", "2"])
        .env("CANONLAB_CAP", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("CANONLAB_CAP"));
}

#[test]
fn failing_identity_exits_one_with_certificate() {
    // on this labeling of the Λ poset one maximal chain has a descent, the other not
    let f = poset_file(r#"{"elements": 3, "covers": [[0, 2], [1, 2]], "labels": [3, 1, 2]}"#);
    let o = canonlab(&["verify", "labeled-product", "--poset", f.path().to_str().unwrap(), "--n", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("certificate for labeled-product"));

    let o = canonlab(&["gamma", "--m", "3", "--n", "3", "--rule", "label-or-parity"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("histogram by rho-descents"));
}

#[test]
fn gamma_interpretation_report() {
    let o = canonlab(&["gamma", "--m", "3", "--n", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["counts"], serde_json::json!([1, 1]));
    assert_eq!(v["matches_stated"], true);
}

#[test]
fn extension_listing() {
    let o = canonlab(&["extensions", "--m", "2", "--n", "2", "--format", "csv"]);
    assert_eq!(stdout(&o), "order,word,descents\n0 1 2 3,1234,0\n0 2 1 3,1324,1\n");
    let o = canonlab(&["extensions", "--m", "1", "--n", "1", "--checked"]);
    assert!(stdout(&o).starts_with("12  des=0\n"));
    let o = canonlab(&["extensions", "--m", "2", "--n", "4", "--count"]);
    assert!(stdout(&o).contains("14 extensions"));
}

#[test]
fn poset_files_round_trip_byte_for_byte() {
    let text = PosetFile::from_poset(&Poset::chain(3), None).to_json();
    let f = poset_file(&text);
    let (poset, labels) = load_poset(f.path(), false).unwrap();
    assert_eq!(poset, Poset::chain(3));
    assert_eq!(PosetFile::from_poset(&poset, labels.as_ref()).to_json(), text);
}

#[test]
fn subposet_with_one_missing_cover() {
    // [2] x [4] without (2,3) < (2,4)
    let json = r#"{"elements": 8, "covers": [[0,1],[0,2],[1,3],[2,3],[2,4],[3,5],[4,5],[4,6],[6,7]], "labels": [1,2,5,6,7,8,3,4]}"#;
    let f = poset_file(json);
    let (poset, labels) = load_poset(f.path(), false).unwrap();
    assert_eq!(poset.covers().len(), 9);
    assert_eq!(labels, Some(Labeling::new(vec![1, 2, 5, 6, 7, 8, 3, 4]).unwrap()));
    let o = canonlab(&["extensions", "--poset", f.path().to_str().unwrap()]);
    assert!(stdout(&o).lines().any(|l| l == "12576348  des=2"), "{}", stdout(&o));
}

use std::collections::BTreeMap;
use std::process::{Command, Output};

use serde_json::Value;

fn pants(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pants"))
        .args(args)
        .env_remove("PANTS_SI_CAP")
        .env_remove("PANTS_MAX_RADIUS")
        .env_remove("PANTS_CLASS_LIMIT")
        .output()
        .unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = pants(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn schema() -> jsonschema::JSONSchema {
    let text = include_str!("../../../schema/output.schema.json");
    let schema: Value = serde_json::from_str(text).unwrap();
    jsonschema::JSONSchema::compile(&schema).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = pants(&full);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let schema = schema();
    if let Err(errors) = schema.validate(&v) {
        let msgs: Vec<String> = errors.map(|e| format!("{} at {}", e, e.instance_path)).collect();
        panic!("{args:?} violates the schema: {msgs:?}");
    }
    v
}

#[test]
fn si_and_int_examples() {
    assert_eq!(stdout(&["si", "aB"]), "1\n");
    assert_eq!(stdout(&["int", "a", "aB"]), "0\n");
    assert_eq!(stdout(&["si", "aCC"]), "2\n");
    assert_eq!(stdout(&["int", "aB", "abb"]), "2\n");
}

#[test]
fn oracle_flag_agrees() {
    assert_eq!(stdout(&["si", "aaB", "--oracle"]), "2\noracle: 2\n");
    assert_eq!(stdout(&["int", "aB", "Cb", "--oracle"]), "2\noracle: 2\n");
    let v = json(&["si", "aab", "--oracle"]);
    assert_eq!(v["payload"]["oracle"]["agrees"], true);
}

#[test]
fn canon_reports_root_and_exponent() {
    let text = stdout(&["canon", "CC"]);
    assert!(text.contains("canonical: abab\n"), "{text}");
    assert!(text.contains("root: ab\n"));
    assert!(text.contains("exponent: 2\n"));
    assert!(text.contains("boundary_parallel: true\n"));
    let v = json(&["canon", "Ba", "--oriented"]);
    assert_eq!(v["payload"]["canonical"], "aB");
    assert_eq!(v["settings"]["orientation"], "oriented");
}

#[test]
fn si_classes_json_payload() {
    let v = json(&["si-classes", "2"]);
    assert_eq!(v["schema_version"], "1.0.0");
    assert_eq!(v["command"], "si-classes");
    assert_eq!(v["settings"]["cap"], 6);
    let words: Vec<&str> = v["payload"].as_array().unwrap().iter().map(|w| w.as_str().unwrap()).collect();
    assert_eq!(words.len(), 9);
    assert!(words.contains(&"aabab"));
}

#[test]
fn pretty_column() {
    assert_eq!(stdout(&["si-classes", "1", "--pretty"]), "aB  aB\naab  aC\nabb  Cb\n");
    let csv = stdout(&["si-classes", "1", "--pretty", "--format", "csv"]);
    assert_eq!(csv, "class,pretty,length\naB,aB,2\naab,aC,3\nabb,Cb,3\n");
}

#[test]
fn csv_has_header_and_lf() {
    let csv = stdout(&["enum", "--max-len", "3", "--format", "csv"]);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("class,length,exponent,boundary_parallel"));
    assert!(!csv.contains('\r'));
    assert_eq!(lines.count(), 5);
}

#[test]
fn every_command_matches_the_schema() {
    json(&["canon", "aCb"]);
    json(&["si", "aB"]);
    json(&["int", "aB", "aab", "--oracle"]);
    json(&["triple", "aBB"]);
    json(&["enum", "--max-len", "4", "--powers", "--include-boundary"]);
    json(&["si-classes", "1"]);
    json(&["kequiv", "aB", "aBB", "--k", "1"]);
    json(&["scan-triples", "--max-len", "5"]);
    json(&["classify-two", "--max-len", "5"]);
    json(&["class-222", "--max-len", "5"]);
    json(&["verify-paper", "--max-len", "4", "--max-exp", "2"]);
}

#[test]
fn kequiv_answers() {
    assert_eq!(stdout(&["kequiv", "aB", "aBB", "--k", "1"]), "true\n");
    assert_eq!(stdout(&["kequiv", "a", "aB", "--k", "1"]), "false\n");
    let v = json(&["kequiv", "aB", "aaB", "--k", "1", "--powers"]);
    assert_eq!(v["payload"]["probes"].as_array().unwrap().len(), 6);
}

#[test]
fn triple_text() {
    assert_eq!(stdout(&["triple", "aB"]), "(2, 2, 2)\n");
}

#[test]
fn scan_json_round_trips_to_the_text_summary() {
    let v = json(&["scan-triples", "--max-len", "6"]);
    let payload = &v["payload"];
    let mut recount: BTreeMap<Vec<u64>, u64> = BTreeMap::new();
    for row in payload["rows"].as_array().unwrap() {
        let mut t: Vec<u64> = row["triple"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect();
        t.sort();
        *recount.entry(t).or_default() += 1;
    }
    let observed: BTreeMap<Vec<u64>, u64> = payload["observed"]
        .as_array()
        .unwrap()
        .iter()
        .map(|o| {
            let t = o["triple"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect();
            (t, o["count"].as_u64().unwrap())
        })
        .collect();
    assert_eq!(recount, observed);

    let text = stdout(&["scan-triples", "--max-len", "6"]);
    let rows = payload["rows"].as_array().unwrap().len();
    assert!(text.starts_with(&format!("{rows} classes up to length 6\n")), "{text}");
    for (t, n) in &observed {
        let line = format!("({}, {}, {})", t[0], t[1], t[2]);
        assert!(text.lines().any(|l| l.starts_with(&line) && l.ends_with(&format!(" {n}"))), "{line}");
    }
    let csv = stdout(&["scan-triples", "--max-len", "6", "--format", "csv"]);
    assert_eq!(csv.lines().count(), rows + 1);
}

#[test]
fn classify_two_finds_no_outsiders() {
    let v = json(&["classify-two", "--max-len", "6"]);
    assert!(v["payload"]["non_members"].as_array().unwrap().is_empty());
    let text = stdout(&["classify-two", "--max-len", "6"]);
    let ab = text.lines().find(|l| l.starts_with("aB ")).unwrap();
    assert!(ab.contains("C^m a B^n (m=0, n=1)"), "{ab}");
}

#[test]
fn output_is_deterministic() {
    let a = pants(&["scan-triples", "--max-len", "6", "--format", "json"]);
    let b = pants(&["scan-triples", "--max-len", "6", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["bogus"][..],
        &["si"],
        &["si", "aXb"],
        &["si", "aA"],
        &["int", "a(b"],
        &["si", "a^"],
        &["enum"],
    ] {
        let out = pants(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn help_exits_0() {
    assert_eq!(pants(&["--help"]).status.code(), Some(0));
}

#[test]
fn resource_errors_exit_3() {
    let out = pants(&["enum", "--max-len", "12", "--limit", "10"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error: enum:"));

    let out = pants(&["si-classes", "2", "--cap", "3"]);
    assert_eq!(out.status.code(), Some(3));

    let out = pants(&["si", "aabAb", "--oracle", "--max-radius", "2"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error: si --oracle:"));
}

#[test]
fn environment_overrides() {
    let out = Command::new(env!("CARGO_BIN_EXE_pants"))
        .args(["si-classes", "2"])
        .env("PANTS_SI_CAP", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));

    let out = Command::new(env!("CARGO_BIN_EXE_pants"))
        .args(["enum", "--max-len", "12"])
        .env("PANTS_CLASS_LIMIT", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

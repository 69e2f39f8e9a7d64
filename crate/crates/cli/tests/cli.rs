use std::collections::BTreeMap;
use std::process::{Command, Output};

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// The record schema as a consumer would declare it.
#[derive(Serialize, Deserialize)]
struct Record {
    command: String,
    inputs: BTreeMap<String, String>,
    result: String,
    provenance: String,
    elapsed_ms: u64,
}

fn curvecount(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_curvecount"))
        .args(args)
        .env_remove("CURVECOUNT_CACHE")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Parses JSON-lines output into (inputs, result, provenance) triples.
fn json_records(args: &[&str]) -> Vec<(BTreeMap<String, String>, String, String)> {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let o = curvecount(&full);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
        .lines()
        .map(|line| {
            let v: Value = serde_json::from_str(line).unwrap();
            let inputs = v["inputs"]
                .as_object()
                .unwrap()
                .iter()
                .map(|(k, v)| (k.clone(), v.as_str().unwrap().to_string()))
                .collect();
            (
                inputs,
                v["result"].as_str().unwrap().to_string(),
                v["provenance"].as_str().unwrap().to_string(),
            )
        })
        .collect()
}

fn results(args: &[&str]) -> Vec<String> {
    json_records(args).into_iter().map(|r| r.1).collect()
}

#[test]
fn nd_all_methods_agree_on_quartics() {
    let recs = json_records(&["nd", "--degree", "4", "--method", "all"]);
    let prov: Vec<_> = recs.iter().map(|r| r.2.as_str()).collect();
    assert_eq!(prov, ["recursion", "unsym", "classical"]);
    assert!(recs.iter().all(|r| r.1 == "620"));
}

#[test]
fn nd_defaults_and_big_values() {
    assert_eq!(results(&["nd", "--degree", "1"]), ["1"]);
    let rec = results(&["nd", "--degree", "10", "--method", "recursion"]);
    let unsym = results(&["nd", "--degree", "10", "--method", "unsym"]);
    assert_eq!(rec, ["40739017561997799680"]);
    assert_eq!(rec, unsym);
}

#[test]
fn nd_invalid_inputs() {
    assert_eq!(curvecount(&["nd", "--degree", "0"]).status.code(), Some(2));
    assert_eq!(
        curvecount(&["nd", "--degree", "5", "--method", "classical"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(curvecount(&["nd"]).status.code(), Some(2));
}

#[test]
fn charnum_values() {
    assert_eq!(results(&["charnum", "K2", "--degree", "4"]), ["840"]);
    assert_eq!(
        results(&["charnum", "N21", "--symbolic"]),
        ["9*d^3 - 27*d^2 - d + 30"]
    );
    let o = curvecount(&["charnum", "K11", "--degree", "2"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("d >= 3"), "{err}");
    assert_eq!(
        curvecount(&["charnum", "Q7", "--degree", "4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        curvecount(&["charnum", "N1", "--degree", "4", "--symbolic"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn quartic_table_and_audit() {
    let recs = json_records(&["table", "quartics"]);
    let rows: Vec<_> = recs
        .iter()
        .filter(|r| r.0.contains_key("name"))
        .map(|r| r.1.as_str())
        .collect();
    assert_eq!(
        rows,
        ["27", "9", "72", "20", "200", "225", "170", "840", "675"]
    );
    let audit: BTreeMap<_, _> = recs
        .iter()
        .filter_map(|r| r.0.get("quantity").map(|q| (q.as_str(), r.1.as_str())))
        .collect();
    for (q, v) in [
        ("N(node2)", "63"),
        ("N(node2_line)", "13"),
        ("N(cusp2)", "152"),
        ("N(node3)", "1130"),
        ("boundary(N2)", "279"),
        ("boundary(N21)", "73"),
        ("boundary(K2)", "1104"),
        ("boundary(N3)", "8100"),
    ] {
        assert_eq!(audit[q], v, "{q}");
    }
}

#[test]
fn general_table() {
    let quartic: Vec<String> = json_records(&["table", "quartics"])
        .into_iter()
        .filter(|r| r.0.contains_key("name"))
        .map(|r| r.1)
        .collect();
    assert_eq!(
        results(&["table", "general", "--degree-range", "4..4"]),
        quartic
    );

    let cubic: BTreeMap<String, String> =
        json_records(&["table", "general", "--degree-range", "3..3"])
            .into_iter()
            .map(|r| (r.0["name"].clone(), r.1))
            .collect();
    assert_eq!(cubic["N3"], "15");
    assert_eq!(cubic["K2"], "0");
    assert_eq!(cubic["N21"], "27");

    // Rows whose threshold exceeds the degree are left out.
    let low = json_records(&["table", "general", "--degree-range", "1..2"]);
    assert!(low.iter().all(|r| r.0["min_degree"] == "1"));
    assert_eq!(low.len(), 8);

    let symbolic = json_records(&["table", "general"]);
    assert_eq!(symbolic.len(), 9);
    assert_eq!(symbolic[0].1, "3*d^2 - 6*d + 3");

    assert_eq!(
        curvecount(&["table", "general", "--degree-range", "4..2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        curvecount(&["table", "general", "--degree-range", "x"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn genus_command() {
    assert_eq!(results(&["genus", "--degree", "4"]), ["3"]);
    assert_eq!(
        curvecount(&["genus", "--degree", "0"]).status.code(),
        Some(2)
    );
}

#[test]
fn json_round_trip_is_byte_identical() {
    for args in [
        &["table", "quartics", "--format", "json"][..],
        &["nd", "--degree", "9", "--method", "all", "--format", "json"][..],
        &["charnum", "N3", "--symbolic", "--format", "json"][..],
    ] {
        let out = stdout(&curvecount(args));
        for line in out.lines() {
            let r: Record = serde_json::from_str(line).unwrap();
            assert_eq!(serde_json::to_string(&r).unwrap(), line);
            let v: Value = serde_json::from_str(line).unwrap();
            assert_eq!(v.as_object().unwrap().len(), 5);
        }
    }
}

#[test]
fn formats_carry_the_same_values() {
    let json = results(&["table", "quartics"]);
    let csv_out = stdout(&curvecount(&["table", "quartics", "--format", "csv"]));
    let mut reader = csv::Reader::from_reader(csv_out.as_bytes());
    let csv_vals: Vec<String> = reader
        .records()
        .map(|r| r.unwrap()[2].to_string())
        .collect();
    assert_eq!(csv_vals, json);
    let plain = stdout(&curvecount(&["table", "quartics"]));
    let plain_vals: Vec<String> = plain
        .lines()
        .map(|l| {
            l.rsplit_once(": ")
                .unwrap()
                .1
                .split(" [")
                .next()
                .unwrap()
                .to_string()
        })
        .collect();
    assert_eq!(plain_vals, json);
}

#[test]
fn cache_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("memo.json");
    let p = path.to_str().unwrap();
    let first = json_records(&["nd", "--degree", "7", "--cache", p]);
    assert_eq!(first[0].2, "recursion");
    let saved: BTreeMap<String, String> =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(saved["7"], "14616808192");
    assert_eq!(saved.len(), 7);

    let second = json_records(&["nd", "--degree", "7", "--cache", p]);
    assert_eq!(second[0].1, "14616808192");
    assert_eq!(second[0].2, "cache");

    // The environment variable points at the same file.
    let o = Command::new(env!("CARGO_BIN_EXE_curvecount"))
        .args(["nd", "--degree", "7", "--format", "json"])
        .env("CURVECOUNT_CACHE", p)
        .output()
        .unwrap();
    assert!(stdout(&o).contains("\"provenance\":\"cache\""));
}

#[test]
fn corrupted_cache_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("memo.json");
    std::fs::write(&path, "{\"3\": twelve}").unwrap();
    let o = curvecount(&["nd", "--degree", "3", "--cache", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cache file"));
    // Left untouched.
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "{\"3\": twelve}");
}

#[test]
fn poisoned_cache_is_caught_by_the_other_formula() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("memo.json");
    std::fs::write(&path, r#"{"5": "87305"}"#).unwrap();
    let o = curvecount(&[
        "nd",
        "--degree",
        "5",
        "--method",
        "all",
        "--cache",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("87304"));
}

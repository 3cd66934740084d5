use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_goldentiles"))
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

fn dehn_json(file: &str) -> Value {
    let path = fixture(file);
    let out = run(&["--format", "json", "dehn", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    json_of(&out)
}

#[test]
fn cube_has_zero_dehn_invariant() {
    let v = dehn_json("cube.json");
    assert_eq!(v["dehn"]["beta"]["exact"], "0");
    assert_eq!(v["dehn"]["delta"]["exact"], "0");
    assert_eq!(v["volume"]["exact"], "1");
}

#[test]
fn a_star_dehn_invariant() {
    let v = dehn_json("a_star.json");
    assert_eq!(v["dehn"]["beta"]["exact"], "-1-τ");
    assert_eq!(v["dehn"]["delta"]["exact"], "-1+5τ");
    assert_eq!(v["dehn"]["beta"]["decimal"], "-2.618033988749895");
}

#[test]
fn h_tile_dehn_invariant_is_minus_ten_alpha() {
    let v = dehn_json("h_tile.json");
    // −10⊗ᾱ with ᾱ ≡ −β − δ.
    assert_eq!(v["dehn"]["beta"]["exact"], "10");
    assert_eq!(v["dehn"]["delta"]["exact"], "10");
    // 12·vol(h) = 6τ + 4.
    assert_eq!(v["volume"]["exact"], "1/3+1/2τ");
}

#[test]
fn malformed_polyhedron_exits_two_with_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, "{\n  \"edges\": [ { \"length\": 3 } ]\n}\n").unwrap();
    let out = run(&["dehn", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("bad.json:2:"), "{err}");
}

#[test]
fn missing_file_exits_two() {
    let out = run(&["dehn", "/nonexistent/poly.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_all_passes() {
    let out = run(&["--format", "json", "verify-all"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let v = json_of(&out);
    assert_eq!(v["summary"]["fail"], 0);
    assert_eq!(v["summary"]["error"], 0);
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(v["summary"]["pass"].as_u64().unwrap() as usize, checks.len());
    let ids: Vec<&str> = checks.iter().map(|c| c["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(ids, sorted);
}

#[test]
fn corrupted_m2f_fails_spot_entry() {
    let out = run(&["--format", "json", "verify-all", "--corrupt-m2f"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json_of(&out);
    let failed: Vec<&Value> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] == "fail")
        .collect();
    assert_eq!(failed.len(), 1);
    assert_eq!(failed[0]["id"], "15.ms.t2f");
    let msg = failed[0]["details"]["mismatch"].as_str().unwrap();
    assert!(msg.contains("(1, 1)"), "{msg}");
}

#[test]
fn report_round_trips() {
    let out = run(&["--format", "json", "verify-all"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    let again = serde_json::to_string_pretty(&v).unwrap();
    assert_eq!(serde_json::from_str::<Value>(&again).unwrap(), v);
    for key in ["version", "timestamp", "checks", "summary"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    for c in v["checks"].as_array().unwrap() {
        for key in ["id", "description", "status", "reference", "details"] {
            assert!(c.get(key).is_some(), "{key}");
        }
    }
}

#[test]
fn reconstruct_gt_with_half_entries() {
    let out = run(&["--format", "json", "reconstruct", "--set", "gt", "--check-eigen"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["eigen_relations"]["verified"], true);
    let row_c: Vec<&str> = v["matrix"][2].as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect();
    assert_eq!(row_c, ["1/2", "1/2", "1", "1", "1", "1"]);
}

#[test]
fn reconstruct_ms() {
    let out = run(&["--format", "json", "reconstruct", "--set", "ms", "--check-eigen"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    let expected = [["1", "1", "1", "1"], ["2", "1", "2", "2"], ["1", "1", "1", "2"], ["0", "0", "1", "2"]];
    for (r, row) in expected.iter().enumerate() {
        for (c, x) in row.iter().enumerate() {
            assert_eq!(v["matrix"][r][c], *x);
        }
    }
}

#[test]
fn equivalent_c_and_f() {
    let out = run(&["--format", "json", "equivalent", "C*", "F*"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["equivalent"], false);
    assert_eq!(v["first"]["volume"], v["second"]["volume"]);
}

#[test]
fn equivalent_requires_volume() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("novol.json");
    std::fs::write(&path, r#"{"edges": []}"#).unwrap();
    let out = run(&["equivalent", "A*", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn crs_pairs() {
    let v = json_of(&run(&["--format", "json", "crs", "--p", "3", "--d", "5"]));
    assert_eq!((v["s"].as_u64(), v["a"].as_u64(), v["b"].as_u64()), (Some(2), Some(4), Some(2)));
    assert!(v["value_decimal_string"].is_string());
    let out = run(&["crs", "--p", "2", "--d", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["--format", "json", "crs"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn integrality_and_power() {
    let v = json_of(&run(&["--format", "json", "integrality", "--kmax", "12"]));
    assert_eq!(v["integral_powers"], serde_json::json!([3, 6, 9, 12]));
    let v = json_of(&run(&["--format", "json", "power", "--k", "3"]));
    assert_eq!(v["integral"], true);
    assert_eq!(v["matrix"][0][0], "26");
}

#[test]
fn covering_and_fields() {
    let out = run(&["--format", "json", "covering", "--k", "20", "--kmax", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["certificate_valid"], true);
    assert_eq!(v["certificate"]["psi"][3], "21");
    let out = run(&["--format", "json", "covering", "--kmax", "9"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["fields"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn catalog_and_volumes_markdown() {
    let out = run(&["catalog"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("| A* | 011111 |"), "{text}");
    assert!(text.contains("flat class: 001101"), "{text}");
    let out = run(&["volumes"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("| h | 1/3+1/2τ ≈ 1.142350327708281 |"), "{text}");
}

#[test]
fn bad_usage_exits_two() {
    assert_eq!(run(&["reconstruct", "--set", "xx"]).status.code(), Some(2));
    assert_eq!(run(&["power", "--k", "0"]).status.code(), Some(2));
}

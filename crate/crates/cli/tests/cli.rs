use std::process::{Command, Output};

use serde_json::Value;

fn nilcoh(args: &[&str]) -> (Output, tempfile::TempDir) {
    let cache = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_nilcoh"))
        .args(args)
        .env("NILCOH_CACHE", cache.path())
        .output()
        .expect("binary runs");
    (out, cache)
}

fn json_of(args: &[&str]) -> Value {
    let (out, _cache) = nilcoh(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

#[test]
fn kostant_a2_dims() {
    let v = json_of(&["kostant", "--type", "A2", "--p", "5", "--J", "", "--lambda", "0,0"]);
    assert_eq!(v["result"]["dims"], serde_json::json!([1, 2, 2, 1]));
    assert_eq!(v["config"]["cartan_type"], "A2");
    assert_eq!(v["config"]["lambda"], "0,0");
    assert_eq!(v["result"]["degrees"].as_array().unwrap().len(), 4);
}

#[test]
fn sum_dot_b2_witness() {
    let v = json_of(&["verify", "sum-dot", "--type", "B2", "--p", "5"]);
    let r = &v["result"];
    assert_eq!(r["exhaustive"], true);
    let viol = r["violations"].as_array().unwrap();
    assert!(!viol.is_empty());
    let found = viol.iter().any(|x| {
        let ws: Vec<&str> = x["witnesses"].as_array().unwrap().iter().map(|w| w["w"].as_str().unwrap()).collect();
        ws == ["s2s1", "s2s1", "s1s2"] && x["sigma_root"] == serde_json::json!([0, -1])
    });
    assert!(found, "{viol:?}");
}

#[test]
fn ext_b2_square() {
    let v = json_of(&["ext", "--type", "B2", "--p", "5", "--max-degree", "4", "--check-square"]);
    assert_eq!(v["result"]["dims"], serde_json::json!([1, 2, 6, 10, 19]));
    assert_eq!(v["result"]["example_product"]["nonzero"], true);
}

#[test]
fn gate_failure_exits_2() {
    let (out, _c) = nilcoh(&["verify", "collisions", "--type", "A2", "--l", "9", "--lambda", "0,0", "--domain", "X"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("coprime_type"));
}

#[test]
fn bad_input_exits_2() {
    let (out, _c) = nilcoh(&["kostant", "--type", "A2", "--J", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let (out, _c) = nilcoh(&["rootsys", "--type", "Q7"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn below_bound_ring_needs_flag() {
    let (out, _c) = nilcoh(&["quantum", "--type", "B2", "--l", "5", "--format", "json"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["result"].get("ring_table").is_none());
    let v = json_of(&["quantum", "--type", "B2", "--l", "5", "--unsafe-below-bound"]);
    assert!(v["result"]["ring_table"]["rows"].as_array().unwrap().len() == 64);
}

#[test]
fn formats_echo_config() {
    for fmt in ["csv", "text"] {
        let (out, _c) = nilcoh(&["ring-table", "--type", "A2", "--format", fmt]);
        let s = String::from_utf8(out.stdout).unwrap();
        assert!(s.starts_with("# config: {"), "{s}");
    }
    let (out, _c) = nilcoh(&["weyl", "--type", "A2", "--J", "1", "--format", "tex"]);
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.starts_with("% config: {"));
    assert_eq!(s.lines().filter(|l| l.ends_with("\\\\")).count(), 4);
}

#[test]
fn json_is_deterministic_across_threads() {
    let strip = |mut v: Value| {
        v["config"]["threads"] = Value::Null;
        v["result"]["elapsed_ms"] = Value::Null;
        v
    };
    let a = strip(json_of(&["verify", "sum-dot", "--type", "A3", "--p", "3", "--threads", "1"]));
    let b = strip(json_of(&["verify", "sum-dot", "--type", "A3", "--p", "3", "--threads", "4"]));
    assert_eq!(a, b);
}

#[test]
fn oracle_over_rationals_and_fp() {
    let q = json_of(&["oracle-koszul", "--type", "B2"]);
    let f = json_of(&["oracle-koszul", "--type", "B2", "--p", "2"]);
    assert_eq!(q["result"]["dims"], serde_json::json!([1, 2, 2, 2, 1]));
    assert_ne!(q["result"]["dims"], f["result"]["dims"]);
}

#[test]
fn weyl_cache_is_reused() {
    let cache = tempfile::tempdir().unwrap();
    for _ in 0..2 {
        let out = Command::new(env!("CARGO_BIN_EXE_nilcoh"))
            .args(["weyl", "--type", "B3", "--cache-dir"])
            .arg(cache.path())
            .output()
            .unwrap();
        assert!(out.status.success());
        let v: Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(v["result"]["order"], 48);
    }
    assert!(cache.path().join("weyl-B3.json").exists());
}

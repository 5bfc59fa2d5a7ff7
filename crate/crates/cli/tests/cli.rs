use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn eqdim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eqdim")).args(args).output().unwrap()
}

fn eqdim_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_eqdim"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn compute_path8() {
    let out = eqdim(&["compute", "--family", "path:8"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["eqdim"], 5);
    assert_eq!(v["witness_1based"].as_array().unwrap().len(), 5);
    assert_eq!(v["witness"][0], 0);
    assert_eq!(v["witness_1based"][0], 1);
}

#[test]
fn verify_complement_of_3ap_free_set_on_graph6_stdin() {
    // P_8 in graph6
    let ok = eqdim_stdin(&["verify", "--graph6", "-", "--set", "1,3,7", "--complement"], "GhCGGC\n");
    assert_eq!(ok.status.code(), Some(0), "{}", String::from_utf8_lossy(&ok.stderr));
    let v = json(&ok);
    assert_eq!(v["valid"], true);
    assert_eq!(v["witness_1based"], serde_json::json!([2, 4, 5, 6, 8]));

    let bad = eqdim(&["verify", "--family", "path:8", "--set", "1,3,7"]);
    assert_eq!(bad.status.code(), Some(1));
    assert_eq!(json(&bad)["valid"], false);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(eqdim(&["compute"]).status.code(), Some(2));
    assert_eq!(eqdim(&["compute", "--family", "path:3", "--edges", "x"]).status.code(), Some(2));
    assert_eq!(eqdim(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(eqdim(&["verify", "--family", "path:4", "--set", "9"]).status.code(), Some(2));
    assert_eq!(eqdim(&["compute", "--family", "path:4", "--budget", "0"]).status.code(), Some(2));
    assert_eq!(eqdim(&["family", "--family", "johnson:8,2"]).status.code(), Some(2));
    let disconnected = eqdim_stdin(&["compute", "--graph6", "-"], "C?\n");
    assert_eq!(disconnected.status.code(), Some(2));
    assert!(!disconnected.stderr.is_empty());
}

#[test]
fn edge_list_input() {
    let dir = std::env::temp_dir().join(format!("eqdim-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c6.txt");
    std::fs::write(&path, "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n").unwrap();
    let out = eqdim(&["compute", "--edges", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["eqdim"], 3);
}

#[test]
fn table_reproduces_rows() {
    let out = eqdim(&["table", "--n-max", "20", "--extra", "50"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<Vec<&str>> = text.lines().skip(1).map(|l| l.split('\t').collect()).collect();
    let path: Vec<&str> = rows.iter().map(|r| r[2]).collect();
    assert_eq!(path.join(","), "1,2,3,4,4,5,5,6,7,8,9,10,11,12,12,13,14,15,40");
    let r: Vec<&str> = rows.iter().map(|r| r[1]).collect();
    assert_eq!(r.join(","), "2,2,2,2,3,3,4,4,4,4,4,4,4,4,5,5,5,5,10");
    assert_eq!(rows.last().unwrap()[3], "25");
}

#[test]
fn table_search_matches_cycles() {
    let out = eqdim(&["table", "--n-max", "19", "--search", "--format", "json"]);
    assert!(out.status.success());
    let v = json(&out);
    let cycles: Vec<u64> = v.as_array().unwrap().iter().map(|r| r["cycle_search"].as_u64().unwrap()).collect();
    assert_eq!(cycles, vec![1, 2, 3, 3, 4, 5, 5, 5, 7, 8, 9, 7, 11, 11, 12, 9, 13]);
}

#[test]
fn family_and_doubly() {
    let out = eqdim(&["family", "--family", "bistar:3,5"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!((v["kind"].as_str(), v["value"].as_u64()), (Some("exact"), Some(3)));

    let out = eqdim(&["doubly", "--family", "cycle:4"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!((v["dim"].as_u64(), v["eqdim"].as_u64(), v["psi"].as_u64()), (Some(2), Some(2), Some(3)));
    assert_eq!(v["construction_valid"], true);

    let out = eqdim(&["doubly", "--family", "path:5", "--set", "1,2"]);
    assert_eq!(out.status.code(), Some(1));
    let out = eqdim(&["doubly", "--family", "path:5", "--set", "1,5"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn r_table_and_queens() {
    let out = eqdim(&["r-table", "--n-max", "25"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let r: Vec<&str> = text.lines().skip(1).map(|l| l.split('\t').nth(1).unwrap()).collect();
    assert_eq!(r.join(","), "1,2,2,3,4,4,4,4,5,5,6,6,7,8,8,8,8,8,8,9,9,9,9,10,10");
    let out = eqdim(&["queens", "--n-max", "14", "--format", "json"]);
    assert!(out.status.success());
    let v = json(&out);
    assert!(v.as_array().unwrap().iter().all(|r| r["dominating"] == true));
}

#[test]
fn conjecture_statuses() {
    let out = eqdim(&["conjecture", "psi", "--n-max", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["status"], "open");

    let out = eqdim(&["conjecture", "nordhaus-gaddum", "--n-max", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["status"], "holds");
    assert!(v["tightness"].as_array().unwrap().iter().all(|t| t["ok"] == true));

    // the spider with legs 4, 3, 1 beats the path of the same order
    let out = eqdim(&["conjecture", "trees", "--n-max", "9"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["status"], "counterexample");
    assert_eq!(v["counterexamples"][0]["graph6"], "HhE?GE?");

    let out = eqdim_stdin(&["conjecture", "trees", "--graph6", "-"], "HhE?GE?\nGhCGGC\n");
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["checked"], 2);
}

#[test]
fn output_is_deterministic_across_workers() {
    let a = eqdim(&["conjecture", "psi", "--n-max", "5", "--workers", "1"]);
    let b = eqdim(&["conjecture", "psi", "--n-max", "5", "--workers", "4"]);
    assert_eq!(a.stdout, b.stdout);
    let a = eqdim(&["compute", "--family", "johnson:5,2"]);
    let b = eqdim(&["compute", "--family", "johnson:5,2"]);
    assert_eq!(a.stdout, b.stdout);
}

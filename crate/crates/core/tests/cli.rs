use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_chromaspec"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

const PETERSEN_COL: &str = "c Petersen graph\r\np edge 10 15\r\n\
e 1 2\r\ne 2 3\r\ne 3 4\r\ne 4 5\r\ne 5 1\r\n\
e 6 8\r\ne 8 10\r\ne 10 7\r\ne 7 9\r\ne 9 6\r\n\
e 1 6\r\ne 2 7\r\ne 3 8\r\ne 4 9\r\ne 5 10\r\n";

#[test]
fn bounds_k4_inline() {
    let out = run(&["bounds", "--graph6", "C~"], "");
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["command"], "bounds");
    assert_eq!(v["results"]["nikiforov"], 4.0);
    assert_eq!(v["results"]["nikiforov_ceil"], 4);
    assert_eq!(v["results"]["chi"]["status"], "exact");
    assert_eq!(v["results"]["chi"]["chi"], 4);
}

#[test]
fn bounds_petersen_file_with_extras() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("petersen.col");
    std::fs::write(&path, PETERSEN_COL).unwrap();
    let out = run(
        &["bounds", path.to_str().unwrap(), "--chi", "--alpha", "--equality"],
        "",
    );
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let r = &json(&out)["results"];
    assert_eq!(r["hoffman"], 2.5);
    assert_eq!(r["nikiforov"], 2.5);
    assert_eq!(r["chi"]["chi"], 3);
    assert_eq!(r["alpha"]["alpha"], 4);
    assert_eq!(r["ratio_bound"], 4.0);
    assert_eq!(r["equality"]["characterization_holds"], false);
}

#[test]
fn bounds_edgeless_exits_3_but_reports_chi() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty5.g6");
    std::fs::write(&path, "D??\n").unwrap();
    let out = run(&["bounds", path.to_str().unwrap()], "");
    assert_eq!(out.status.code(), Some(3));
    let r = &json(&out)["results"];
    assert_eq!(r["hoffman"], Value::Null);
    assert_eq!(r["nikiforov"], Value::Null);
    assert_eq!(r["chi"]["chi"], 1);
}

#[test]
fn parse_errors_name_the_location() {
    let out = run(&["bounds", "-"], "p edge 3 1\ne 1 4\n");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    let out = run(&["bounds", "--graph6", "C ~"], "");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("byte 1"));
    let out = run(&["bounds", "/nonexistent/graph.g6"], "");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn format_override() {
    // "3" alone would be detected as an edge list; force graph6 instead
    let out = run(&["bounds", "-", "--format-in", "graph6"], "B?\n");
    assert_eq!(out.status.code(), Some(3));
    let out = run(&["bounds", "-", "--format-in", "dimacs"], "3\n0 1\n");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn table_complete_minus_edge() {
    let out = run(&["table", "complete-minus-edge", "4..12"], "");
    assert_eq!(out.status.code(), Some(0));
    let rows = json(&out)["results"]["rows"].as_array().unwrap().clone();
    assert_eq!(rows.len(), 9);
    let row = rows.iter().find(|r| r["n"] == 10).unwrap();
    assert_eq!(row["nikiforov_ceil"], 9);
    assert_eq!(row["chi"], 9);
    assert_eq!(row["hoffman_ceil"], 6);
}

#[test]
fn table_wheel_and_complete() {
    let out = run(&["--format", "csv", "table", "wheel", "100"], "");
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let row: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(row[0], "100");
    assert_eq!(row[3], "3");
    assert_eq!(row[5], "2");

    let out = run(&["table", "complete", "2..8"], "");
    for row in json(&out)["results"]["rows"].as_array().unwrap() {
        assert_eq!(row["nikiforov"], row["n"].as_f64().unwrap());
    }
}

#[test]
fn table_usage_errors() {
    assert_eq!(run(&["table", "hypercube", "1..3"], "").status.code(), Some(2));
    assert_eq!(run(&["table", "cycle"], "").status.code(), Some(2));
    assert_eq!(run(&["table", "cycle", "2..5"], "").status.code(), Some(2));
    assert_eq!(run(&["table", "petersen"], "").status.code(), Some(0));
}

#[test]
fn fuzz_exit_codes_and_empty_summary() {
    let out = run(&["fuzz", "theorem1", "--trials", "0"], "");
    assert_eq!(out.status.code(), Some(0));
    let r = &json(&out)["results"];
    assert_eq!(r["trials_run"], 0);
    assert_eq!(r["violation_count"], 0);
    assert_eq!(r["min_gap"], Value::Null);

    assert_eq!(run(&["fuzz", "theorem1", "--r", "1..3"], "").status.code(), Some(2));
    assert_eq!(run(&["fuzz", "theorem1", "--tol", "-1"], "").status.code(), Some(2));
    assert_eq!(run(&["fuzz", "lemma1", "--scale", "0"], "").status.code(), Some(2));
    assert_eq!(run(&["fuzz", "bogus"], "").status.code(), Some(2));
}

#[test]
fn fuzz_signless_fixed_n() {
    let out = run(&["fuzz", "signless", "--n", "8", "--trials", "500"], "");
    assert_eq!(out.status.code(), Some(0));
    let r = &json(&out)["results"];
    assert_eq!(r["violation_count"], 0);
    assert_eq!(r["config"]["n_range"], serde_json::json!([8, 8]));
}

#[test]
fn fuzz_records_rematerialize() {
    let out = run(&["fuzz", "theorem1", "--trials", "300", "--scale", "0"], "");
    let r = &json(&out)["results"];
    assert_eq!(r["near_equality_count"], 300);
    let cfg = chromaspec::harness::FuzzConfig {
        trials: 300,
        entry_scale: 0.0,
        ..chromaspec::harness::FuzzConfig::theorem1()
    };
    for rec in r["near_equality"].as_array().unwrap().iter().take(20) {
        let trial = rec["trial"].as_u64().unwrap();
        let inst = chromaspec::harness::theorem1_instance(&cfg, trial);
        assert_eq!(rec["digest"].as_str().unwrap(), inst.digest());
        assert_eq!(inst.gap(), 0.0);
    }
}

#[test]
fn explore_defaults_and_top() {
    let out = run(&["explore"], "");
    assert_eq!(out.status.code(), Some(0));
    let records = json(&out)["results"]["records"].as_array().unwrap().clone();
    assert!(records
        .iter()
        .any(|r| r["label"] == "bipartite, r=2, B=D" && r["gap"].as_f64().unwrap().abs() <= 1e-12));
    let top = run(&["explore", "--top", "1"], "");
    let top = json(&top)["results"]["records"].as_array().unwrap().clone();
    assert_eq!(top.len(), 1);
    assert_eq!(top[0], records[0]);
}

#[test]
fn chi_alpha_encode() {
    let out = run(&["chi", "--graph6", "IheA@GUAo"], "");
    assert_eq!(json(&out)["results"]["outcome"]["chi"], 3);
    let out = run(&["alpha", "--graph6", "IheA@GUAo"], "");
    assert_eq!(json(&out)["results"]["outcome"]["alpha"], 4);
    let out = run(&["encode", "-"], "5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    assert_eq!(json(&out)["results"]["graph6"], "Dhc");
    let out = run(&["--budget", "0", "chi", "--graph6", "IheA@GUAo"], "");
    assert_eq!(json(&out)["results"]["outcome"]["status"], "unknown");
}

#[test]
fn markdown_and_csv_project_the_same_rows() {
    let json_out = run(&["table", "cycle", "3..6"], "");
    let csv_out = run(&["--format", "csv", "table", "cycle", "3..6"], "");
    let md_out = run(&["--format", "md", "table", "cycle", "3..6"], "");
    let rows = json(&json_out)["results"]["rows"].as_array().unwrap().len();
    assert_eq!(String::from_utf8(csv_out.stdout).unwrap().lines().count(), rows + 1);
    let md = String::from_utf8(md_out.stdout).unwrap();
    assert_eq!(md.lines().filter(|l| l.starts_with("| ")).count(), rows + 1);
    assert!(md.contains("| 5 | 5 | 2.236 | 3 | 2.236 | 3 | 3 |"), "{md}");
}

#[test]
fn timing_is_opt_in() {
    let plain = run(&["table", "petersen"], "");
    assert_eq!(json(&plain)["timing"], Value::Null);
    let timed = run(&["--timing", "table", "petersen"], "");
    assert!(json(&timed)["timing"].as_f64().unwrap() >= 0.0);
}

#[test]
fn help_and_version_exit_0() {
    let out = run(&["--help"], "");
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("bounds"));
    assert_eq!(run(&["--version"], "").status.code(), Some(0));
}

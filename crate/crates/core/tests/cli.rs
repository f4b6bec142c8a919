//! The `majicolor` binary end to end: exit statuses, JSON documents, piping
//! `color` into `verify`, DOT output and the budget variable.

use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

const PETERSEN: &str = "IheA@GUAo";

fn majicolor(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_majicolor"))
        .args(args)
        .env_remove(majicolor::cli::BUDGET_ENV)
        .envs(env.iter().copied())
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn majicolor");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn docs(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| serde_json::from_str(l).expect("JSON line"))
        .collect()
}

#[test]
fn color_then_verify() {
    let out = majicolor(&["color", "--format", "graph6"], PETERSEN, &[]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let doc = &docs(&out)[0];
    assert_eq!(doc["schema"], majicolor::cli::SCHEMA);
    assert_eq!(doc["verification_report"]["verdict"], "pass");
    assert_eq!(doc["coloring"].as_array().unwrap().len(), 15);

    let text = String::from_utf8(out.stdout).unwrap();
    let back = majicolor(&["verify", "--mode", "md"], &text, &[]);
    assert_eq!(back.status.code(), Some(0));
    assert_eq!(docs(&back)[0]["verification_report"]["verdict"], "pass");
}

#[test]
fn failed_verification_exits_one() {
    // Alternating C_4 (edge ids 01, 03, 12, 23) is majority but not distinguishing.
    let args = ["verify", "--family", "cycle", "--n", "4", "--colors", "0,1,1,0"];
    let out = majicolor(&args, "", &[]);
    assert_eq!(out.status.code(), Some(1));
    let report = &docs(&out)[0]["verification_report"];
    assert_eq!(report["verdict"], "fail");
    assert!(report["witness_automorphism"].is_array());
    let args = ["verify", "--family", "cycle", "--n", "4", "--colors", "0,1,1,0", "--mode", "strict"];
    assert_eq!(majicolor(&args, "", &[]).status.code(), Some(0));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(majicolor(&["frobnicate"], "", &[]).status.code(), Some(2));
    assert_eq!(majicolor(&["color", "--format", "graph6"], "not a graph", &[]).status.code(), Some(2));
    let env = [(majicolor::cli::BUDGET_ENV, "lots")];
    assert_eq!(majicolor(&["exact", "--family", "complete", "--n", "4"], "", &env).status.code(), Some(2));
}

#[test]
fn budget_variable_exits_three() {
    let args = ["exact", "--family", "petersen", "--kind", "md"];
    let out = majicolor(&args, "", &[(majicolor::cli::BUDGET_ENV, "10")]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(docs(&out)[0]["status"], "budget_exhausted");
    // An explicit flag beats the variable.
    let args = ["exact", "--family", "complete", "--n", "4", "--kind", "md", "--budget", "100000000"];
    let out = majicolor(&args, "", &[(majicolor::cli::BUDGET_ENV, "10")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(docs(&out)[0]["k"], 5);
}

#[test]
fn exact_infeasible_is_reported() {
    let args = ["exact", "--family", "cycle", "--n", "4", "--kind", "md", "--kmax", "2"];
    let out = majicolor(&args, "", &[]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(docs(&out)[0]["status"], "infeasible");
}

#[test]
fn dot_file_is_written() {
    let dir = std::env::temp_dir().join(format!("majicolor-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("k5.dot");
    let p = path.to_str().unwrap();
    let out = majicolor(&["color", "--family", "complete", "--n", "5", "--dot", p], "", &[]);
    assert_eq!(out.status.code(), Some(0));
    let dot = std::fs::read_to_string(&path).unwrap();
    assert!(dot.starts_with("graph"));
    assert_eq!(dot.matches(" -- ").count(), 10);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn batch_and_jobs_agree() {
    let input = "D~{\nE~~w\nIheA@GUAo\nEhEG\n";
    let one = majicolor(&["color", "--format", "graph6", "--jobs", "1"], input, &[]);
    let three = majicolor(&["color", "--format", "graph6", "--jobs", "3"], input, &[]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, three.stdout);
    assert_eq!(docs(&one).len(), 4);
}

#[test]
fn gen_and_convert() {
    let out = majicolor(&["gen", "--family", "petersen"], "", &[]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), PETERSEN);
    let out = majicolor(&["convert", "--format", "graph6", "--to", "dimacs"], PETERSEN, &[]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("p edge 10 15"));
}

#[test]
fn probe_reports_group() {
    let out = majicolor(&["probe", "--format", "graph6"], PETERSEN, &[]);
    assert_eq!(out.status.code(), Some(0));
    let doc = &docs(&out)[0];
    assert_eq!(doc["group"]["order"], "120");
}

#[test]
fn digraph_coloring() {
    let out = majicolor(&["color", "--algo", "digraph", "--family", "complete", "--n", "5"], "", &[]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let doc = &docs(&out)[0];
    assert_eq!(doc["kind"], "arc");
    assert_eq!(doc["coloring"].as_array().unwrap().len(), 20);
}

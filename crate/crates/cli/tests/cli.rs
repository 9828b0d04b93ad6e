//! Drives the `ofrac` binary: exit codes, report determinism, artifact
//! round trips.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ofrac"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 report")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 diagnostics")
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
        .display()
        .to_string()
}

/// A per-test scratch directory; tests use distinct names so they can
/// run in parallel.
fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("ofrac-cli-{}-{name}", std::process::id()));
    fs::create_dir_all(&dir).expect("scratch dir");
    dir
}

#[test]
fn verify_accepts_the_shipped_pair() {
    let out = run(&[
        "verify",
        "--graph",
        &data("c7.dg"),
        "--coloring",
        &data("fig1.col"),
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("verdict: valid"), "{text}");
    assert!(text.contains("ratio: 7/2"), "{text}");
}

#[test]
fn refuted_search_exits_one() {
    let out = run(&[
        "solve",
        "bfold",
        "--graph",
        &data("c7.dg"),
        "--b",
        "2",
        "--k",
        "6",
    ]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("outcome: not-exists"), "{text}");
    assert!(text.contains("search: exhaustive"), "{text}");
}

#[test]
fn spent_budget_exits_two() {
    let out = run(&[
        "solve",
        "bfold",
        "--graph",
        &data("c7.dg"),
        "--b",
        "2",
        "--k",
        "7",
        "--budget-nodes",
        "1",
    ]);
    assert_eq!(code(&out), 2);
    assert!(stdout(&out).contains("outcome: inconclusive"));
}

#[test]
fn malformed_file_reports_path_and_line() {
    let dir = scratch("malformed");
    let path = dir.join("bad.dg");
    fs::write(&path, "n 3\n0 1\n1 9\n").unwrap();
    let out = run(&[
        "verify",
        "--graph",
        path.to_str().unwrap(),
        "--coloring",
        &data("fig1.col"),
    ]);
    assert_eq!(code(&out), 64);
    let text = stderr(&out);
    assert!(text.contains("bad.dg:3:"), "{text}");
}

#[test]
fn invalid_parameters_exit_sixty_four() {
    let out = run(&[
        "solve",
        "bfold",
        "--graph",
        &data("c7.dg"),
        "--b",
        "3",
        "--k",
        "2",
    ]);
    assert_eq!(code(&out), 64, "fold above palette is a usage error");
    let out = run(&["cycle", "value", "--r", "2"]);
    assert_eq!(code(&out), 64, "cycles start at length 3");
    let out = run(&["--no-such-flag"]);
    assert_eq!(code(&out), 64, "unknown flags are usage errors");
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let args = ["solve", "sweep", "--graph", &data("c7.dg"), "--bmax", "2"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(code(&first), 0);
    assert_eq!(first.stdout, second.stdout);

    let json_args = [
        "--json",
        "solve",
        "sweep",
        "--graph",
        &data("c7.dg"),
        "--bmax",
        "2",
    ];
    let first = run(&json_args);
    let second = run(&json_args);
    assert_eq!(code(&first), 0);
    assert_eq!(first.stdout, second.stdout);

    let manifest: serde_json::Value = serde_json::from_slice(&first.stdout).expect("valid JSON");
    assert_eq!(manifest["status"], 0);
    let inputs = manifest["inputs"].as_object().expect("inputs map");
    assert_eq!(inputs.len(), 1);
    for digest in inputs.values() {
        assert_eq!(digest.as_str().unwrap().len(), 64, "sha-256 hex digest");
    }
}

#[test]
fn constructed_artifacts_round_trip_through_verify() {
    let dir = scratch("construct");
    let coloring = dir.join("c11.col");
    let out = run(&[
        "cycle",
        "construct",
        "--r",
        "11",
        "--out",
        coloring.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));

    let graph = dir.join("c11.dg");
    let g = ofrac_core::OrientedGraph::directed_cycle(11).unwrap();
    fs::write(&graph, ofrac_cli::formats::write_graph(&g)).unwrap();
    let out = run(&[
        "verify",
        "--graph",
        graph.to_str().unwrap(),
        "--coloring",
        coloring.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("verdict: valid"));

    let out = run(&["cycle", "construct", "--r", "11"]);
    assert_eq!(code(&out), 64, "generator commands require --out");
}

#[test]
fn built_target_is_nice_and_its_coloring_verifies() {
    let dir = scratch("target");
    let graph = dir.join("t1.dg");
    let out = run(&[
        "target",
        "build",
        "--l",
        "1",
        "--out",
        graph.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("girth: 3"));

    let out = run(&[
        "target",
        "nice",
        "--graph",
        graph.to_str().unwrap(),
        "--k",
        "9",
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("verdict: nice"));

    let coloring = dir.join("t1.col");
    let out = run(&[
        "target",
        "coloring",
        "--l",
        "1",
        "--out",
        coloring.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let out = run(&[
        "verify",
        "--graph",
        graph.to_str().unwrap(),
        "--coloring",
        coloring.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("ratio: 9/2"));
}

#[test]
fn extraction_chain_round_trips() {
    let dir = scratch("extract");
    let sub = dir.join("sub.dg");
    let out = run(&[
        "kneser",
        "extract",
        "--graph",
        &data("c7.dg"),
        "--coloring",
        &data("fig1.col"),
        "--out",
        sub.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("consistency: valid"));

    let out = run(&["kneser", "check", "--graph", sub.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("verdict: consistent"));

    let blown = dir.join("sub2.dg");
    let out = run(&[
        "kneser",
        "blowup",
        "--graph",
        sub.to_str().unwrap(),
        "--c",
        "2",
        "--out",
        blown.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let out = run(&["kneser", "check", "--graph", blown.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("verdict: consistent"));
}

#[test]
fn reproduce_cycles_matches_the_frozen_table() {
    let out = run(&["reproduce", "cycles"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("failures: 0"), "{text}");
    assert!(!text.contains("FAIL"), "{text}");
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(code(&run(&["--help"])), 0);
    assert_eq!(code(&run(&["--version"])), 0);
    assert_eq!(code(&run(&["solve", "--help"])), 0);
}

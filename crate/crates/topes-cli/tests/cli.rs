//! Exit codes and output shapes of the command-line interface.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_topes"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn validate_passes_the_golden_fixture() {
    let out = run(&["validate", fixture("golden28.topes").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "ok\n");
}

#[test]
fn validate_rejects_a_broken_file_with_exit_one() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    // The golden fixture minus its first line: one unmatched opposite.
    let text = std::fs::read_to_string(fixture("golden28.topes")).unwrap();
    let broken: Vec<&str> = text
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .skip(1)
        .collect();
    writeln!(file, "{}", broken.join("\n")).unwrap();
    let out = run(&["validate", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("symmetry"));
}

#[test]
fn parse_errors_exit_two() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "+0-").unwrap();
    let out = run(&["validate", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let missing = run(&["validate", "/nonexistent/input.topes"]);
    assert_eq!(missing.status.code(), Some(2));

    let usage = run(&["validate", "--no-such-flag", "x"]);
    assert_eq!(usage.status.code(), Some(2));
}

#[test]
fn strict_mode_rejects_acyclic_input() {
    let path = fixture("hex0.topes");
    let plain = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(plain.status.code(), Some(0));
    let strict = run(&["--strict", "validate", path.to_str().unwrap()]);
    assert_eq!(strict.status.code(), Some(1));
}

#[test]
fn committees_lists_the_hex_committee() {
    let out = run(&[
        "committees",
        "--max-positive",
        fixture("hex.topes").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("committees     1"));
    assert!(text.contains("++- +-+ -++"));

    let json = run(&[
        "committees",
        "--json",
        fixture("hex.topes").to_str().unwrap(),
    ]);
    let parsed: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(parsed["count"], 1);
    assert_eq!(parsed["committees"][0]["max_positive"], true);
}

#[test]
fn graph_exports_dot_and_json() {
    let path = fixture("hex.topes");
    let dot = run(&["graph", "--kind", "gamma", path.to_str().unwrap()]);
    assert_eq!(dot.status.code(), Some(0));
    assert!(stdout(&dot).starts_with("// kind: gamma\ngraph topes {"));

    let json = run(&[
        "graph",
        "--kind",
        "gamma-max",
        "--format",
        "json",
        path.to_str().unwrap(),
    ]);
    let parsed: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(parsed["kind"], "gamma-max");
    assert_eq!(parsed["vertex_count"], 3);
    assert_eq!(parsed["edge_count"], 3);
}

#[test]
fn kneser_kinds_mirror_g_and_gamma() {
    let path = fixture("hex.topes");
    let edges = |kind: &str| -> serde_json::Value {
        let out = run(&[
            "graph",
            "--kind",
            kind,
            "--format",
            "json",
            path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
        serde_json::from_slice::<serde_json::Value>(&out.stdout).unwrap()["edges"].clone()
    };
    assert_eq!(edges("kneser-pos"), edges("g"));
    assert_eq!(edges("kneser-neg"), edges("gamma"));
}

#[test]
fn ingest_reproduces_the_hex_fixture() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("out.topes");
    let out = run(&[
        "ingest",
        "--arrangement",
        fixture("hex.arr").to_str().unwrap(),
        "--reorient",
        "2",
        "-o",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let written = std::fs::read_to_string(&out_path).unwrap();
    let expected = std::fs::read_to_string(fixture("hex.topes")).unwrap();
    let canonical: Vec<&str> = expected
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .collect();
    assert_eq!(written.lines().collect::<Vec<_>>(), canonical);
}

#[test]
fn ingest_warns_on_acyclic_output() {
    let out = run(&[
        "ingest",
        "--arrangement",
        fixture("octants.arr").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("acyclic"));
    assert_eq!(stdout(&out).lines().count(), 8);
}

#[test]
fn ingest_rejects_parallel_vectors() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "1 0\n2 0").unwrap();
    let out = run(&["ingest", "--arrangement", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("parallel"));
}

#[test]
fn counts_without_cross_check_skips_brute_fields() {
    let out = run(&[
        "counts",
        "--json",
        fixture("hex.topes").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(parsed["no_opposite_triples_brute"], serde_json::Value::Null);
    assert_eq!(parsed["all_consistent"], serde_json::Value::Bool(true));
}

#[test]
fn cross_check_flags_acyclic_input_as_inconsistent() {
    // The identities assume non-acyclic input; they still evaluate on an
    // acyclic set but the routes disagree and --cross-check reports it.
    let out = run(&[
        "counts",
        "--cross-check",
        "--json",
        fixture("hex0.topes").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(parsed["all_consistent"], serde_json::Value::Bool(false));
}

#[test]
fn lattice_json_lists_members_and_mobius() {
    let out = run(&[
        "lattice",
        "--json",
        fixture("hex.topes").to_str().unwrap(),
    ]);
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(parsed["n"], 3);
    assert_eq!(parsed["member_count"], 8);
    assert_eq!(parsed["members"][0], serde_json::json!([]));
    assert_eq!(parsed["coatoms"].as_array().unwrap().len(), 3);
    assert_eq!(parsed["mobius"][0]["value"], 1);
}

//! Acceptance: byte-identical output across repeated runs.

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

#[test]
fn cross_check_output_is_deterministic() {
    let path = fixture("golden28.topes");
    let args = ["counts", "--cross-check", "--json", path.to_str().unwrap()];
    let first = run(&args);
    let second = run(&args);
    assert!(first.status.success(), "stderr: {}", String::from_utf8_lossy(&first.stderr));
    assert_eq!(first.stdout, second.stdout);
    assert!(!first.stdout.is_empty());

    let parsed: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(parsed["all_consistent"], serde_json::Value::Bool(true));
    assert_eq!(parsed["max_positive_committees_formula"], 3);

    // The plain table is deterministic too.
    let table_args = ["counts", "--cross-check", path.to_str().unwrap()];
    assert_eq!(run(&table_args).stdout, run(&table_args).stdout);
    println!("ACCEPTANCE cli-determinism: PASS");
}

use std::process::{Command, Output};

use wbasis::cli::GeneratorCacheFile;
use wbasis::exactcore::q;

fn wbasis(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wbasis")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn lusztig_table_rows() {
    let out = wbasis(&["lusztig", "--rank", "1", "--nmax", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().filter(|l| l.starts_with("lusztig")).collect();
    assert_eq!(rows.len(), 4);
    assert!(rows[3].contains("t^2 + t^4 + t^6"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(wbasis(&["lusztig", "--rank", "0"]).status.code(), Some(2));
    assert_eq!(wbasis(&["lusztig"]).status.code(), Some(2));
    assert_eq!(wbasis(&["verify-main", "--rank", "1", "--jobs", "0"]).status.code(), Some(2));
    assert_eq!(wbasis(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn verify_identity_structured() {
    let out = wbasis(&["verify-identity", "--rank", "2", "--nmax", "3", "--format", "structured"]);
    assert_eq!(out.status.code(), Some(0));
    let lines: Vec<serde_json::Value> = stdout(&out).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines[0]["kind"], "provenance");
    assert_eq!(lines[0]["provenance"]["config"]["rank"], 2);
    let at_one: Vec<_> = lines.iter().filter(|v| v["kind"] == "at_t_1").collect();
    assert_eq!(at_one.len(), 4);
    assert_eq!(at_one[3]["actual"], "10");
    assert!(lines[1..].iter().all(|v| v["verdict"] == "pass"));
}

#[test]
fn verify_main_single_cell() {
    let out = wbasis(&["verify-main", "--rank", "1", "--nmax", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.starts_with("graded")).count(), 1);
    assert!(text.lines().any(|l| l.starts_with("# generators ")));
}

#[test]
fn warm_cache_and_tampering() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("gens.txt");
    let p = path.to_str().unwrap();
    let args = ["wgen", "--rank", "1", "--check-degree", "3", "--cache", p];
    let cold = wbasis(&args);
    assert_eq!(cold.status.code(), Some(0));
    let bytes = std::fs::read(&path).unwrap();
    let warm = wbasis(&args);
    assert_eq!(warm.status.code(), Some(0));
    assert_eq!(std::fs::read(&path).unwrap(), bytes);
    assert_eq!(stdout(&cold), stdout(&warm));

    // a corrupted checksum is a library error
    std::fs::write(&path, String::from_utf8(bytes.clone()).unwrap().replace("checksum ", "checksum 0")).unwrap();
    assert_eq!(wbasis(&args).status.code(), Some(1));

    // a consistent file holding a wrong generator fails verification
    let mut file = GeneratorCacheFile::parse(std::str::from_utf8(&bytes).unwrap()).unwrap();
    file.generators[0].1 = vec![(vec![(0, 2)], q(1, 1))];
    file.write(&path).unwrap();
    let out = wbasis(&args);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).lines().any(|l| l.starts_with("generator") && l.ends_with("FAIL")));
}

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn stripcomb(args: &[&str], cache: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_stripcomb"));
    cmd.args(args).env_remove("STRIPCOMB_CACHE");
    if let Some(c) = cache {
        cmd.env("STRIPCOMB_CACHE", c);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = stripcomb(args, None);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

#[test]
fn counts_and_polynomials() {
    assert_eq!(ok(&["count", "--n", "7", "--k", "4"]).trim(), "27");
    assert_eq!(ok(&["count", "--n", "6", "--k", "3", "--t", "2"]).trim(), "43");
    assert_eq!(ok(&["poly", "--n", "6", "--k", "3"]).trim(), "1 + 5*t + 6*t^2 + t^3");
    let v: Value = serde_json::from_str(&ok(&["--format", "json", "count", "--n", "7", "--k", "4"])).unwrap();
    assert_eq!(v["value"], 27);
    assert_eq!(ok(&["--format", "csv", "count", "--n", "7", "--k", "4"]), "n,k,value\n7,4,27\n");
}

#[test]
fn large_values_are_json_strings() {
    let v: Value = serde_json::from_str(&ok(&["--format", "json", "count", "--n", "120", "--k", "3"])).unwrap();
    assert_eq!(v["value"], "8670007398507948658051921");
}

#[test]
fn table_csv_header() {
    let out = ok(&["--format", "csv", "table", "--n", "4"]);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("n,j,value"));
    assert_eq!(lines.next(), Some("0,0,1"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["count", "--n", "x", "--k", "3"][..],
        &["count", "--n", "3", "--k", "3", "--z", "2"],
        &["verify", "--suite", "nonsense"],
        &["oeis", "A999999"],
        &["--format", "xml", "count", "--n", "1", "--k", "1"],
    ] {
        assert_eq!(stripcomb(args, None).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn verify_json_shape() {
    let o = stripcomb(&["--format", "json", "verify", "--suite", "q"], None);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let reports = v.as_array().unwrap();
    assert!(reports.len() > 10);
    for r in reports {
        for key in ["id", "grid", "status", "checked_upto", "wall_ms"] {
            assert!(r.get(key).is_some(), "{key} missing in {r}");
        }
        assert!(["VERIFIED_UP_TO", "SKIPPED"].contains(&r["status"].as_str().unwrap()), "{r}");
    }
}

#[test]
fn jobs_do_not_change_output() {
    let serial = ok(&["verify", "--suite", "identities", "--jobs", "1"]);
    let parallel = ok(&["verify", "--suite", "identities", "--jobs", "4"]);
    assert_eq!(serial, parallel);
    assert!(serial.ends_with("0 counterexamples\n"));
}

#[test]
fn report_file_is_written() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    ok(&["verify", "--suite", "oracles", "--report", path.to_str().unwrap()]);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(v.as_array().unwrap().iter().any(|r| r["id"] == "oracle:counts"));
}

#[test]
fn bundled_fixture_matches() {
    let dir = tempfile::tempdir().unwrap();
    let o = stripcomb(&["oeis", "A000045"], Some(dir.path()));
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("bundled): match"));
}

#[test]
fn cached_bfile_takes_precedence() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("b016116.txt"), "# cached\n0 1\n1 1\n2 2\n3 2\n4 5\n").unwrap();
    let o = stripcomb(&["oeis", "A016116", "--terms", "5"], Some(dir.path()));
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("mismatch at index 4"), "{}", stdout(&o));

    let flag = tempfile::tempdir().unwrap();
    let o =
        stripcomb(&["oeis", "A016116", "--terms", "5", "--cache-dir", flag.path().to_str().unwrap()], Some(dir.path()));
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn explicit_generator() {
    let o = stripcomb(&["oeis", "A000045", "--gen", "a(n,4)", "--terms", "10"], None);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn guess_finds_characteristic() {
    let out = ok(&["guess", "--k", "5"]);
    assert!(out.contains("characteristic: 1 - x - 2*x^2 + x^3"), "{out}");
    assert!(out.contains("divides count denominator: true"));
}

#[test]
fn audit_verdict() {
    let out = ok(&["audit"]);
    assert!(out.contains("printed form holds"), "{out}");
}

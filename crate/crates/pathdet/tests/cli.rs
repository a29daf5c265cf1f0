//! End-to-end checks of the command-line contract: golden outputs, report
//! formats, exit codes, and determinism of re-runs.

use std::path::PathBuf;
use std::process::{Command, Output};

use pathdet::cli::{exit_code_for, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE};
use pathdet::report;
use pathdet::verify::VerificationRecord;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pathdet"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn temp_path(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("pathdet-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn pgf_golden_outputs() {
    let out = run(&["pgf", "--n", "2", "--l", "0", "--k", "0", "--restricted"]);
    assert_eq!(out.status.code(), Some(EXIT_OK));
    assert_eq!(stdout_of(&out), "x^2 + 3*x*y + y^2\n");

    let out = run(&[
        "pgf",
        "--n",
        "4",
        "--l",
        "0",
        "--k",
        "0",
        "--restricted",
        "--spec",
        "catalan",
    ]);
    assert_eq!(stdout_of(&out), "2\n");

    let out = run(&[
        "pgf", "--n", "2", "--l", "0", "--k", "1", "--spec", "central",
    ]);
    assert_eq!(stdout_of(&out), "4\n");

    let out = run(&[
        "pgf",
        "--n",
        "4",
        "--l",
        "0",
        "--k",
        "0",
        "--restricted",
        "--spec",
        "motzkin",
    ]);
    assert_eq!(stdout_of(&out), "9\n");
}

#[test]
fn det_golden_outputs() {
    let out = run(&["det", "--family", "thm1", "--n", "2", "--k", "1"]);
    assert_eq!(out.status.code(), Some(EXIT_OK));
    assert_eq!(stdout_of(&out), "-1\n");

    let out = run(&["det", "--family", "conj24", "--n", "3", "--k", "2"]);
    assert_eq!(stdout_of(&out), "3\n");

    let out = run(&["det", "--family", "thm9", "--n", "2", "--k", "0"]);
    assert_eq!(stdout_of(&out), "x^2*y^2*t + x^3*y + x*y^3\n");

    let out = run(&[
        "det", "--family", "thm9", "--n", "2", "--k", "0", "--t", "1",
    ]);
    assert_eq!(stdout_of(&out), "x^3*y + x^2*y^2 + x*y^3\n");
}

#[test]
fn verify_json_report_and_round_trip() {
    let path = temp_path("verify.json");
    let out = run(&[
        "verify",
        "--family",
        "cor19",
        "--n-max",
        "8",
        "--k",
        "1",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(EXIT_OK));
    let body = std::fs::read_to_string(&path).unwrap();
    let records = report::from_json(&body).unwrap();
    assert_eq!(records.len(), 8);
    assert!(records
        .iter()
        .all(|r| r.is_match && r.family == "cor19" && r.k == 1));
    // parsing and re-serializing is byte-identical
    assert_eq!(report::to_json(&records), body);
    std::fs::remove_file(&path).ok();
}

#[test]
fn verify_csv_columns() {
    let out = run(&[
        "verify", "--family", "thm1", "--n-max", "3", "--k", "0", "--format", "csv",
    ]);
    let body = stdout_of(&out);
    let header = body.lines().next().unwrap();
    assert_eq!(header, "family,n,k,spec,lhs,rhs,case_label,match,millis");
    assert_eq!(body.lines().count(), 4);
}

#[test]
fn verify_reruns_are_deterministic() {
    let args = [
        "verify",
        "--family",
        "thm3,cor22",
        "--n-max",
        "6",
        "--k-max",
        "2",
        "--format",
        "json",
    ];
    let a = report::from_json(&stdout_of(&run(&args))).unwrap();
    let b = report::from_json(&stdout_of(&run(&args))).unwrap();
    let strip = |mut rs: Vec<VerificationRecord>| {
        for r in &mut rs {
            r.millis = 0;
        }
        rs
    };
    assert_eq!(strip(a), strip(b));
}

#[test]
fn classic_suite_via_cli() {
    let out = run(&[
        "verify", "--family", "classic", "--n-max", "12", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(EXIT_OK));
    let records = report::from_json(&stdout_of(&out)).unwrap();
    assert_eq!(records.len(), 60);
    assert!(records.iter().all(|r| r.is_match));
}

#[test]
fn scan_reports_clean() {
    let out = run(&[
        "scan",
        "--conjecture",
        "24",
        "--n-max",
        "12",
        "--k-max",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(EXIT_OK));
    assert!(stdout_of(&out).contains("scan clean"));

    let out = run(&["scan", "--conjecture", "23", "--n-max", "4", "--k-max", "2"]);
    assert_eq!(out.status.code(), Some(EXIT_USAGE));
}

#[test]
fn replay_via_cli() {
    let out = run(&["replay", "--thm", "8", "--n", "4", "--k", "1"]);
    assert_eq!(out.status.code(), Some(EXIT_OK));
    let body = stdout_of(&out);
    assert!(body.contains("ok"), "{body}");
    assert!(body.contains("determinant reconciled"), "{body}");
}

#[test]
fn usage_errors_exit_1() {
    let out = run(&["pgf", "--n", "2"]); // missing --k
    assert_eq!(out.status.code(), Some(EXIT_USAGE));
    let out = run(&["det", "--family", "thm99", "--n", "2", "--k", "0"]);
    assert_eq!(out.status.code(), Some(EXIT_USAGE));
    let out = run(&["nonsense"]);
    assert_eq!(out.status.code(), Some(EXIT_USAGE));
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(EXIT_OK));
    // caps are usage errors too
    let out = run(&["verify", "--family", "thm8", "--n-max", "11", "--k", "1"]);
    assert_eq!(out.status.code(), Some(EXIT_USAGE));
}

#[test]
fn exit_codes_on_crafted_fixtures() {
    let rec = |family: &str, is_match: bool| VerificationRecord {
        family: family.into(),
        n: 1,
        k: 0,
        spec: "symbolic".into(),
        lhs: "1".into(),
        rhs: if is_match { "1" } else { "2" }.into(),
        case_label: "crafted".into(),
        is_match,
        millis: 0,
    };
    assert_eq!(
        exit_code_for(&[rec("thm1", true), rec("conj24", true)], false),
        EXIT_OK
    );
    assert_eq!(exit_code_for(&[rec("thm1", false)], false), EXIT_MISMATCH);
    assert_eq!(exit_code_for(&[rec("conj24", false)], false), EXIT_OK);
    assert_eq!(exit_code_for(&[rec("conj24", false)], true), EXIT_MISMATCH);
    assert_eq!(
        exit_code_for(&[rec("classic", false)], false),
        EXIT_MISMATCH
    );
}

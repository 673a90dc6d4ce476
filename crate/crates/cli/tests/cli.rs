use std::path::PathBuf;
use std::process::{Command, Output};

use curvadd_cli::{AnalysisReport, EXIT_INVALID, EXIT_OK, EXIT_PARSE};

fn curve_file(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../curves")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_curvadd"))
        .args(args)
        .env_remove("CURVADD_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn json_report_round_trips_byte_for_byte() {
    let dir = std::env::temp_dir().join(format!("curvadd-json-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for name in [
        "hyperbola_f7.curve",
        "hyperbola_f9.curve",
        "example_f5.curve",
        "elliptic_f17.curve",
    ] {
        let json = dir.join(format!("{name}.json"));
        let out = run(&[
            "analyze",
            "--curve",
            curve_file(name).to_str().unwrap(),
            "--json",
            json.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(EXIT_OK), "{name}");
        let text = std::fs::read_to_string(&json).unwrap();
        let report = AnalysisReport::from_json(&text).unwrap();
        assert_eq!(report.to_json(), text, "{name}");
    }
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn hyperbola_report_fields() {
    let dir = std::env::temp_dir().join(format!("curvadd-h7-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let json = dir.join("h7.json");
    run(&[
        "analyze",
        "--curve",
        curve_file("hyperbola_f7.curve").to_str().unwrap(),
        "--json",
        json.to_str().unwrap(),
    ]);
    let r = AnalysisReport::from_json(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(r.points.affine_count, 6);
    assert_eq!(r.points.infinity_count, 2);
    assert!(r.bounds.inequality1.forced_zero && r.bounds.by_count.forced_zero);
    assert!(!r.decision.exists_nonzero);
    assert_eq!(r.decision.oracle_agreement, "agree");
    assert_eq!(r.consistency.status, "consistent");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn exit_codes() {
    let malformed = curve_file("malformed.curve");
    assert_eq!(
        run(&["analyze", "--curve", malformed.to_str().unwrap()])
            .status
            .code(),
        Some(EXIT_PARSE)
    );
    assert_eq!(
        run(&["analyze", "--curve", "/nonexistent/curve"])
            .status
            .code(),
        Some(EXIT_INVALID)
    );
    assert_eq!(
        run(&["bound", "--p", "2", "--d", "3"]).status.code(),
        Some(EXIT_INVALID)
    );
    assert_eq!(
        run(&["bound", "--p", "9", "--d", "3"]).status.code(),
        Some(EXIT_INVALID)
    );
    assert_eq!(
        run(&["bound", "--p", "7"]).status.code(),
        Some(EXIT_INVALID)
    );
    assert_eq!(
        run(&["valuation", "--padic", "3", "6"]).status.code(),
        Some(EXIT_INVALID)
    );
    assert_eq!(run(&["verify-paper"]).status.code(), Some(EXIT_OK));
}

#[test]
fn cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_curvadd"))
        .args([
            "analyze",
            "--curve",
            curve_file("elliptic_f17.curve").to_str().unwrap(),
        ])
        .env("CURVADD_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_INVALID));
}

#[test]
fn bound_command() {
    let out = run(&["bound", "--p", "17", "--class", "elliptic"]);
    assert_eq!(out.status.code(), Some(EXIT_OK));
    assert!(
        stdout(&out).contains("forced_zero = true"),
        "{}",
        stdout(&out)
    );
    let out = run(&["bound", "--p", "5", "--class", "conic"]);
    assert!(stdout(&out).contains("forced_zero = false"));
    let out = run(&["bound", "--p", "17", "--d", "3"]);
    assert!(stdout(&out).contains("lhs = 81"));
}

#[test]
fn search_modes_agree() {
    let out = run(&[
        "search",
        "--curve",
        curve_file("example_f5.curve").to_str().unwrap(),
        "--mode",
        "both",
    ]);
    assert_eq!(out.status.code(), Some(EXIT_OK));
    assert!(stdout(&out).contains("agreement: agree"));
}

#[test]
fn valuation_subcommands() {
    assert!(stdout(&run(&["valuation", "--padic", "-5/8", "2"])).contains("-3"));
    let out = run(&["valuation", "--check-axioms", "50", "--seed", "3"]);
    assert_eq!(out.status.code(), Some(EXIT_OK));
    assert!(!stdout(&out).contains("FAIL"));
    assert_eq!(run(&["valuation", "--demo"]).status.code(), Some(EXIT_OK));
}

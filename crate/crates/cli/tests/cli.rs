use std::process::Command;

use liftlog_cli::report::Report;
use liftlog_cli::{run, EXIT_OK, EXIT_USAGE, EXIT_VERIFY};

const EXAMPLE: &str = "ring x,y; x^10, x^8*y, x*y^4, y^5";

fn liftlog() -> Command {
    Command::new(env!("CARGO_BIN_EXE_liftlog"))
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(["liftlog", "bogus"]).exit_code, EXIT_USAGE);
    assert_eq!(run(["liftlog", "ideal", "show"]).exit_code, EXIT_USAGE);
    let bad = run(["liftlog", "ideal", "show", "-I", "ring x,y; x^-1"]);
    assert_eq!(bad.exit_code, EXIT_USAGE);
    assert!(bad.stderr.contains("1:13"), "{}", bad.stderr);
    let help = run(["liftlog", "--help"]);
    assert_eq!(help.exit_code, EXIT_OK);
    assert!(help.stdout.contains("verify-corpus"));
}

#[test]
fn json_reports_round_trip() {
    let out = run(["liftlog", "--format", "json", "--verify", "lift", "blowup", "-I", EXAMPLE]);
    assert_eq!(out.exit_code, EXIT_OK, "{}", out.stderr);
    let parsed: Report = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(Some(parsed.clone()), out.report);
    assert_eq!(
        parsed.lookup("liftable.pretty").and_then(|v| v.as_str()),
        Some("(x,y)∂x + (x^3,y)∂y")
    );
    assert_eq!(parsed.lookup("chain_ok"), Some(&serde_json::json!(true)));
    assert!(parsed.verification.unwrap().passed);
}

#[test]
fn output_is_deterministic() {
    let args = ["liftlog", "--format", "json", "--verify", "--seed", "7", "lift", "chart", "--map", "x1=y1; x2=y1^3*y2", "--critical", "y1"];
    let first = run(args);
    assert_eq!(first.exit_code, EXIT_OK, "{}", first.stderr);
    for _ in 0..3 {
        assert_eq!(run(args).stdout, first.stdout);
    }
}

#[test]
fn bundled_corpus_passes() {
    let out = run(["liftlog", "--format", "json", "verify-corpus"]);
    assert_eq!(out.exit_code, EXIT_OK, "{}", out.stdout);
    let r = out.report.unwrap();
    let labels: Vec<_> = r.lookup("fixtures").unwrap().as_array().unwrap().iter().map(|f| f["label"].clone()).collect();
    let mut sorted = labels.clone();
    sorted.sort_by(|a, b| a.as_str().cmp(&b.as_str()));
    assert_eq!(labels, sorted);
    assert!(r.verification.unwrap().checks.len() >= 30);
}

#[test]
fn wrong_expectation_exits_two() {
    let dir = std::env::temp_dir().join(format!("liftlog-corpus-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::write(
        dir.join("wrong.toml"),
        "label = \"wrong\"\nsummary = \"a deliberately wrong value\"\n\n[[case]]\nargs = [\"ideal\", \"power\", \"-I\", \"ring x; x\", \"-k\", \"2\"]\nexpect = { result = \"(x^3)\" }\n",
    )
    .unwrap();
    let out = run(["liftlog", "verify-corpus", "--dir", dir.to_str().unwrap()]);
    std::fs::remove_dir_all(&dir).unwrap();
    assert_eq!(out.exit_code, EXIT_VERIFY, "{}", out.stdout);
    assert!(out.stdout.contains("expected \"(x^3)\""), "{}", out.stdout);
}

#[test]
fn degree_cap_comes_from_the_environment() {
    let capped = liftlog()
        .env("LIFTLOG_MAX_DEGREE", "3")
        .args(["der", "module", "-I", EXAMPLE])
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(EXIT_USAGE));
    assert!(String::from_utf8_lossy(&capped.stderr).contains("cap of 3"));
    let garbage = liftlog().env("LIFTLOG_MAX_DEGREE", "lots").args(["der", "module", "-I", EXAMPLE]).output().unwrap();
    assert_eq!(garbage.status.code(), Some(EXIT_USAGE));
    let fine = liftlog().env_remove("LIFTLOG_MAX_DEGREE").args(["der", "module", "-I", EXAMPLE]).output().unwrap();
    assert_eq!(fine.status.code(), Some(EXIT_OK));
    assert!(String::from_utf8_lossy(&fine.stdout).contains("(x,y^3)∂x + (x^7,y)∂y"));
}

//! Bundled fixtures, one per worked example, and the `verify-corpus` runner.

use std::collections::BTreeMap;
use std::path::Path;

use clap::Parser;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::commands::dispatch;
use crate::error::{CliError, CliResult};
use crate::report::{Report, Verification};
use crate::{Cli, Settings};

/// `(file name, contents)` of the bundled fixtures.
pub const BUNDLED: &[(&str, &str)] = &[
    ("closing-chart.toml", include_str!("../fixtures/closing-chart.toml")),
    ("closing-weighted.toml", include_str!("../fixtures/closing-weighted.toml")),
    ("cor-blow.toml", include_str!("../fixtures/cor-blow.toml")),
    ("ex-psi.toml", include_str!("../fixtures/ex-psi.toml")),
    ("examples-der2.toml", include_str!("../fixtures/examples-der2.toml")),
    ("rr-closure-ex.toml", include_str!("../fixtures/rr-closure-ex.toml")),
];

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Fixture {
    pub label: String,
    pub summary: String,
    #[serde(rename = "case")]
    pub cases: Vec<Case>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Case {
    /// Command line after the program name.
    pub args: Vec<String>,
    /// Dotted output paths and their exact expected values.
    #[serde(default)]
    pub expect: BTreeMap<String, toml::Value>,
    /// Discrepancy flag ids the case must raise, and no others.
    #[serde(default)]
    pub flags: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct CaseResult {
    pub args: Vec<String>,
    pub report: Option<Report>,
    pub failures: Vec<String>,
}

impl CaseResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn parse_fixture(name: &str, text: &str) -> CliResult<Fixture> {
    toml::from_str(text).map_err(|e| CliError::Fixture {
        name: name.to_string(),
        message: e.to_string(),
    })
}

pub fn bundled_fixtures() -> CliResult<Vec<Fixture>> {
    BUNDLED.iter().map(|(name, text)| parse_fixture(name, text)).collect()
}

pub fn load_dir(dir: &Path) -> CliResult<Vec<Fixture>> {
    let io = |source| CliError::Io {
        path: dir.display().to_string(),
        source,
    };
    let mut paths: Vec<_> = std::fs::read_dir(dir)
        .map_err(io)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "toml"))
        .collect();
    paths.sort();
    paths
        .iter()
        .map(|p| {
            let text = std::fs::read_to_string(p).map_err(|source| CliError::Io {
                path: p.display().to_string(),
                source,
            })?;
            parse_fixture(&p.display().to_string(), &text)
        })
        .collect()
}

/// Runs one case with `--verify` forced on.
pub fn run_case(case: &Case) -> CaseResult {
    let mut failures = Vec::new();
    let argv = ["liftlog", "--verify"].into_iter().map(String::from).chain(case.args.iter().cloned());
    let report = match Cli::try_parse_from(argv) {
        Err(e) => {
            failures.push(format!("bad arguments: {}", e.render()));
            None
        }
        Ok(cli) => match Settings::from_cli(&cli).and_then(|s| dispatch(&cli.command, s)) {
            Err(e) => {
                failures.push(format!("command failed: {e}"));
                None
            }
            Ok(r) => Some(r),
        },
    };
    if let Some(r) = &report {
        if let Some(v) = &r.verification {
            for c in v.checks.iter().filter(|c| !c.passed) {
                failures.push(format!("verification `{}` failed", c.name));
            }
        }
        for (path, want) in &case.expect {
            let want = serde_json::to_value(want).expect("TOML values map onto JSON");
            match r.lookup(path) {
                Some(got) if *got == want => {}
                Some(got) => failures.push(format!("{path}: expected {want}, got {got}")),
                None => failures.push(format!("{path}: missing from outputs")),
            }
        }
        let mut raised: Vec<&str> = r.discrepancy_flags.iter().map(|f| f.id.as_str()).collect();
        let mut wanted: Vec<&str> = case.flags.iter().map(String::as_str).collect();
        raised.sort_unstable();
        wanted.sort_unstable();
        if raised != wanted {
            failures.push(format!("flags: expected {wanted:?}, raised {raised:?}"));
        }
    }
    CaseResult {
        args: case.args.clone(),
        report,
        failures,
    }
}

/// All cases of all fixtures; fixtures run concurrently, results keep input order.
pub fn run_fixtures(fixtures: &[Fixture]) -> Vec<(String, Vec<CaseResult>)> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = fixtures
            .iter()
            .map(|f| scope.spawn(move || (f.label.clone(), f.cases.iter().map(run_case).collect::<Vec<_>>())))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("fixture runner panicked"))
            .collect()
    })
}

pub fn verify_corpus(dir: Option<&Path>) -> CliResult<Report> {
    let mut fixtures = match dir {
        Some(d) => load_dir(d)?,
        None => bundled_fixtures()?,
    };
    fixtures.sort_by(|a, b| a.label.cmp(&b.label));
    let mut r = Report::new(&["verify-corpus"]);
    if let Some(d) = dir {
        r.input("dir", d.display().to_string());
    }
    let results = run_fixtures(&fixtures);
    let mut verification = Verification {
        passed: true,
        checks: Vec::new(),
    };
    let mut summary = Vec::new();
    let mut flags: Vec<String> = Vec::new();
    for (label, cases) in &results {
        for (k, c) in cases.iter().enumerate() {
            let detail = (!c.passed()).then(|| c.failures.join("; "));
            verification.push(format!("{label}#{}: {}", k + 1, c.args.join(" ")), c.passed(), detail);
            if let Some(rep) = &c.report {
                for f in &rep.discrepancy_flags {
                    let tagged = format!("{label}: {}", f.id);
                    if !flags.contains(&tagged) {
                        flags.push(tagged);
                        r.discrepancy_flags.push(f.clone());
                    }
                }
            }
        }
        summary.push(json!({
            "label": label,
            "cases": cases.len(),
            "passed": cases.iter().filter(|c| c.passed()).count(),
        }));
    }
    r.output("fixtures", Value::Array(summary));
    r.output("total_cases", results.iter().map(|(_, c)| c.len()).sum::<usize>());
    r.verification = Some(verification);
    Ok(r)
}

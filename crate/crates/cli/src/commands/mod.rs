//! One function per command; each returns a filled-in [`Report`].

mod closure;
mod der;
mod ideal;
mod lift;
mod sgr;

use liftlog_core::parse::{parse_ideal, parse_ring_and_ideal};
use liftlog_core::{MonomialIdeal, RingContext};

use crate::error::{usage, CliResult};
use crate::report::{Report, Verification};
use crate::{corpus, Command, Settings};

pub fn dispatch(command: &Command, s: Settings) -> CliResult<Report> {
    match command {
        Command::Ideal { op } => ideal::run(op, s),
        Command::Closure { op } => closure::run_closure(op, s),
        Command::Newton { op } => closure::run_newton(op, s),
        Command::Der { op } => der::run(op, s),
        Command::Lift { op } => lift::run(op, s),
        Command::Sgr(args) => sgr::run(args, s),
        Command::VerifyCorpus { dir } => corpus::verify_corpus(dir.as_deref()),
    }
}

/// Parses `-I`, records it, and sets the report's ring.
pub(crate) fn ideal_input(report: &mut Report, key: &str, text: &str) -> CliResult<MonomialIdeal> {
    let (ctx, ideal) = parse_ring_and_ideal(text)?;
    report.ring = Some(ctx.names().to_vec());
    report.input(key, ideal.to_string());
    Ok(ideal)
}

/// A second ideal, with or without its own ring header.
pub(crate) fn second_ideal(report: &mut Report, key: &str, ctx: &RingContext, text: &str) -> CliResult<MonomialIdeal> {
    let ideal = if text.trim_start().starts_with("ring") {
        let (other, ideal) = parse_ring_and_ideal(text)?;
        if &other != ctx {
            return Err(usage(format!("`{key}` is declared over a different ring")));
        }
        ideal
    } else {
        parse_ideal(ctx, text)?
    };
    report.input(key, ideal.to_string());
    Ok(ideal)
}

/// `"4, 9"` into integers.
pub(crate) fn int_list(flag: &str, text: &str) -> CliResult<Vec<i64>> {
    text.split(',')
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|_| usage(format!("{flag}: `{}` is not an integer", p.trim())))
        })
        .collect()
}

/// Calls `f` on every point of `[0, upper]`.
pub(crate) fn for_each_point(upper: &[u32], mut f: impl FnMut(&[u32])) {
    let mut a = vec![0u32; upper.len()];
    loop {
        f(&a);
        let mut j = 0;
        while j < a.len() {
            if a[j] < upper[j] {
                a[j] += 1;
                break;
            }
            a[j] = 0;
            j += 1;
        }
        if j == a.len() {
            return;
        }
    }
}

/// Starts a verification record when `--verify` is on.
pub(crate) fn verifier(s: &Settings) -> Option<Verification> {
    s.verify.then(|| Verification {
        passed: true,
        checks: Vec::new(),
    })
}

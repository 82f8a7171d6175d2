//! Ratliff-Rush closure as the stable value of `[I^{n+1} : I^n]`.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;

pub const DEFAULT_N_MAX: usize = 20;
pub const DEFAULT_WINDOW: usize = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RRReport {
    pub closure: MonomialIdeal,
    /// First index `n` of the run of equal quotients.
    pub stabilized_at: usize,
    pub checked_window: usize,
    /// Some `m` with `closure^k == I^k` for `k = m, m + 1, m + 2` was found.
    pub power_check_passed: bool,
    /// Smallest such `m` at or after `stabilized_at`.
    pub powers_agree_from: Option<usize>,
}

/// First `m` in `from..=to` where the powers of `closure` and `ideal` agree
/// for three consecutive exponents.
fn first_agreeing_power(ideal: &MonomialIdeal, closure: &MonomialIdeal, from: usize, to: usize) -> Option<usize> {
    let mut lhs = closure.power(from as u32);
    let mut rhs = ideal.power(from as u32);
    let mut run = 0;
    for m in from..to + 3 {
        if lhs == rhs {
            run += 1;
            if run == 3 {
                return Some(m - 2);
            }
        } else {
            run = 0;
            if m > to {
                return None;
            }
        }
        lhs = lhs.product(closure).expect("same ring");
        rhs = rhs.product(ideal).expect("same ring");
    }
    None
}

/// Iterates `q_n = [I^{n+1} : I^n]` for `n = 1, 2, ...` until `window`
/// consecutive quotients coincide, then checks that high powers agree.
pub fn rr_closure(ideal: &MonomialIdeal, n_max: usize, window: usize) -> Result<RRReport> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if window == 0 || n_max < window {
        return Err(Error::InvalidArgument(format!(
            "need n_max >= window >= 1, got n_max = {n_max}, window = {window}"
        )));
    }
    let mut lower = ideal.clone();
    let mut upper = ideal.product(ideal)?;
    let mut quotients: Vec<MonomialIdeal> = Vec::new();
    for n in 1..=n_max {
        quotients.push(upper.quotient(&lower)?);
        let tail = &quotients[quotients.len().saturating_sub(window)..];
        if tail.len() == window && tail.iter().all(|q| q == &tail[0]) {
            let start = n + 1 - window;
            let closure = tail[0].clone();
            let powers_agree_from = first_agreeing_power(ideal, &closure, start, start + n_max);
            return Ok(RRReport {
                closure,
                stabilized_at: start,
                checked_window: window,
                power_check_passed: powers_agree_from.is_some(),
                powers_agree_from,
            });
        }
        lower = upper;
        upper = lower.product(ideal)?;
    }
    Err(Error::NoStabilization { n_max })
}

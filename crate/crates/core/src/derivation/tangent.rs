//! `T(I)`, the derivations with `d(I) ⊆ I`, and the two-variable staircase formula.

use crate::derivation::graded::{admissible_slots, GradedDerivation};
use crate::derivation::module::{assemble, DerivationModule, GradedOptions};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::linalg::{nullspace, q, Q};

/// Degree-`b` piece of `T(I)`: admissible `c` with `c . a = 0` for every
/// generator `a` whose shift `x^{a+b}` is not in `I`.
pub(crate) fn tangent_piece(ideal: &MonomialIdeal, b: &[i64]) -> Vec<Vec<Q>> {
    let n = b.len();
    let Some(slots) = admissible_slots(b) else {
        return Vec::new();
    };
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for (i, ok) in slots.iter().enumerate() {
        if !ok {
            let mut e = vec![q(0); n];
            e[i] = q(1);
            rows.push(e);
        }
    }
    for a in ideal.gens() {
        let shifted: Option<Vec<u32>> = a
            .iter()
            .zip(b)
            .map(|(&ai, &bi)| u32::try_from(i64::from(ai) + bi).ok())
            .collect();
        if !shifted.is_some_and(|s| ideal.contains(&s)) {
            rows.push(a.iter().map(|&e| q(i64::from(e))).collect());
        }
    }
    nullspace(&rows, n)
}

/// `T(I)` computed on `[-1, D + margin]^n` with `D` the largest exponent.
pub fn tangent_module(ideal: &MonomialIdeal, opts: GradedOptions) -> Result<DerivationModule> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let d = i64::from(ideal.max_degree());
    let upper = vec![d + opts.margin; ideal.ctx().n()];
    let module = assemble(ideal.ctx(), upper, opts, |b| tangent_piece(ideal, b))?;
    debug_assert!(module.generators().iter().all(|g| g.preserves(ideal)));
    Ok(module)
}

/// Exponents `(p, q)` of the staircase formula: `T(I) = (x, y^p)∂x + (x^q, y)∂y`.
///
/// With generators `x^{a_i} y^{b_i}` ordered so `a_i` strictly decreases,
/// `p = max (b_{i+1} - b_i)` and `q = max (a_i - a_{i+1})`.
pub fn staircase_exponents(ideal: &MonomialIdeal) -> Result<(u32, u32)> {
    let n = ideal.ctx().n();
    if n != 2 {
        return Err(Error::NotTwoVariables(n));
    }
    if !ideal.is_m_primary() {
        return Err(Error::NotMPrimary);
    }
    // Canonical order is descending lex, so a_i already decreases.
    let gens = ideal.gens();
    let p = gens.windows(2).map(|w| w[1][1] - w[0][1]).max().unwrap_or(0);
    let q = gens.windows(2).map(|w| w[0][0] - w[1][0]).max().unwrap_or(0);
    Ok((p, q))
}

/// `x∂x, y∂y, y^p∂x, x^q∂y` for an m-primary ideal in two variables.
pub fn staircase_t_2var(ideal: &MonomialIdeal) -> Result<DerivationModule> {
    let (p, q_exp) = staircase_exponents(ideal)?;
    let gens = vec![
        GradedDerivation::monomial(&[1, 0], 0),
        GradedDerivation::monomial(&[0, 1], 1),
        GradedDerivation::monomial(&[0, p], 0),
        GradedDerivation::monomial(&[q_exp, 0], 1),
    ];
    DerivationModule::from_generators(ideal.ctx(), gens)
}

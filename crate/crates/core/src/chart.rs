//! Monomial chart morphisms `Q[y] -> Q[x]`, `y_i ↦ x^{m_i}`, and lifting of
//! derivations through them.
//!
//! With an invertible exponent matrix `M` the lift is unique on Laurent
//! polynomials: in logarithmic coordinates `log y = M log x`, so
//! `∂̄(x_j) / x_j = sum_i (M^{-1})_{ji} ∂(y_i) / y_i`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::derivation::{DerivationModule, GradedDerivation, GradedOptions};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::linalg::{format_q, inverse, is_zero_vec, q, Q};
use crate::ring::RingContext;
use crate::valuation::{log_module, WeightValuation};

/// An exact Laurent polynomial: exponent vector to nonzero coefficient.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct LaurentPoly {
    terms: BTreeMap<Vec<i64>, Q>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(exponent: Vec<i64>, coeff: Q) -> Self {
        let mut p = Self::zero();
        p.add_term(exponent, coeff);
        p
    }

    pub fn add_term(&mut self, exponent: Vec<i64>, coeff: Q) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponent).or_insert_with(Q::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &Q)> {
        self.terms.iter()
    }

    /// Multiplies every exponent by `x^shift`.
    pub fn shifted(&self, shift: &[i64]) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    pub fn format(&self, ctx: &RingContext) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        // Highest exponents first reads more naturally.
        for (e, c) in self.terms.iter().rev() {
            let mono = ctx.format_signed_monomial(e);
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            match (mono.as_str(), mag == q(1)) {
                ("1", _) => out.push_str(&format_q(&mag)),
                (m, true) => out.push_str(m),
                (m, false) => out.push_str(&format!("{}*{m}", format_q(&mag))),
            }
        }
        out
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms.iter().map(|(e, c)| format!("{}*{:?}", format_q(c), e)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A derivation of a Laurent polynomial ring, stored by its values on the variables.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentDerivation {
    ctx: RingContext,
    images: Vec<LaurentPoly>,
}

impl LaurentDerivation {
    pub fn new(ctx: &RingContext, images: Vec<LaurentPoly>) -> Result<Self> {
        ctx.check_len(images.len())?;
        Ok(Self {
            ctx: ctx.clone(),
            images,
        })
    }

    pub fn from_graded(ctx: &RingContext, d: &GradedDerivation) -> Result<Self> {
        ctx.check_len(d.n())?;
        let images = (0..ctx.n())
            .map(|i| {
                let mut e = d.degree().to_vec();
                e[i] += 1;
                LaurentPoly::term(e, d.coeffs()[i].clone())
            })
            .collect();
        Ok(Self {
            ctx: ctx.clone(),
            images,
        })
    }

    pub fn ctx(&self) -> &RingContext {
        &self.ctx
    }

    /// `∂(x_j)` for each variable.
    pub fn images(&self) -> &[LaurentPoly] {
        &self.images
    }

    /// `∂(x_j) / x_j`.
    pub fn log_images(&self) -> Vec<LaurentPoly> {
        let n = self.ctx.n();
        self.images
            .iter()
            .enumerate()
            .map(|(j, p)| {
                let mut shift = vec![0; n];
                shift[j] = -1;
                p.shifted(&shift)
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(LaurentPoly::is_zero)
    }

    pub fn to_text(&self) -> String {
        let parts: Vec<String> = self
            .images
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_zero())
            .map(|(j, p)| format!("({})*d_{}", p.format(&self.ctx), self.ctx.name(j)))
            .collect();
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

impl fmt::Debug for LaurentDerivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

/// `y_i ↦ x^{m_i}` with an invertible square exponent matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct MonomialMap {
    source: RingContext,
    target: RingContext,
    rows: Vec<Vec<u32>>,
    inverse: Vec<Vec<Q>>,
}

impl MonomialMap {
    pub fn new(source: &RingContext, target: &RingContext, rows: Vec<Vec<u32>>) -> Result<Self> {
        if source.n() != target.n() {
            return Err(Error::InvalidMap(format!(
                "source has {} variables, target has {}",
                source.n(),
                target.n()
            )));
        }
        source.check_len(rows.len())?;
        for (i, row) in rows.iter().enumerate() {
            target.check_len(row.len())?;
            if row.iter().all(|&e| e == 0) {
                return Err(Error::InvalidMap(format!("`{}` maps to a constant", source.name(i))));
            }
        }
        let m: Vec<Vec<Q>> = rows
            .iter()
            .map(|r| r.iter().map(|&e| q(i64::from(e))).collect())
            .collect();
        let inverse = inverse(&m).ok_or(Error::SingularExponentMatrix)?;
        Ok(Self {
            source: source.clone(),
            target: target.clone(),
            rows,
            inverse,
        })
    }

    pub fn source(&self) -> &RingContext {
        &self.source
    }

    pub fn target(&self) -> &RingContext {
        &self.target
    }

    /// Row `i` is the exponent of the image of `y_i`.
    pub fn exponent_matrix(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// `self` followed by `next`: `y ↦ x^{M} ↦ z^{M N}`.
    pub fn then(&self, next: &MonomialMap) -> Result<MonomialMap> {
        self.target.check_same(&next.source)?;
        let n = self.rows.len();
        let rows = self
            .rows
            .iter()
            .map(|r| (0..n).map(|k| (0..n).map(|j| r[j] * next.rows[j][k]).sum()).collect())
            .collect();
        MonomialMap::new(&self.source, &next.target, rows)
    }

    /// Image of a source Laurent monomial `y^b` as an exponent in the target.
    fn push_exponent(&self, b: &[i64]) -> Vec<i64> {
        let n = self.rows.len();
        (0..n)
            .map(|k| (0..n).map(|i| b[i] * i64::from(self.rows[i][k])).sum())
            .collect()
    }

    pub fn format(&self) -> String {
        let parts: Vec<String> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| format!("{}={}", self.source.name(i), self.target.format_monomial(r)))
            .collect();
        parts.join("; ")
    }
}

impl fmt::Debug for MonomialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format())
    }
}

/// `w_i = (m_i)_j`, the order of vanishing of the image of `y_i` along `x_j = 0`.
pub fn induced_weight(map: &MonomialMap, j: usize) -> Result<WeightValuation> {
    if j >= map.target.n() {
        return Err(Error::InvalidArgument(format!("critical index {j} is out of range")));
    }
    let w: Vec<i64> = map.rows.iter().map(|r| i64::from(r[j])).collect();
    if w.iter().all(|&x| x == 0) {
        return Err(Error::ZeroWeight { index: j });
    }
    WeightValuation::new(&map.source, w)
}

#[derive(Clone, Debug)]
pub struct ChartLift {
    pub module: DerivationModule,
    pub weights: Vec<(usize, WeightValuation)>,
    /// Critical coordinates whose induced weight is a standard basis vector.
    pub unramified: Vec<usize>,
}

/// `∩_{j critical} T(log^{w_j} m)` on the source.
pub fn chart_liftable(map: &MonomialMap, critical: &[usize], opts: GradedOptions) -> Result<ChartLift> {
    if critical.is_empty() {
        return Err(Error::InvalidArgument("critical set is empty".into()));
    }
    let m = MonomialIdeal::maximal(&map.source);
    let mut weights = Vec::new();
    let mut module: Option<DerivationModule> = None;
    let mut crit: Vec<usize> = critical.to_vec();
    crit.sort_unstable();
    crit.dedup();
    for &j in &crit {
        let w = induced_weight(map, j)?;
        let piece = log_module(&w, &m, opts)?;
        module = Some(match module {
            None => piece,
            Some(prev) => prev.intersect(&piece, opts)?,
        });
        weights.push((j, w));
    }
    let unramified = weights
        .iter()
        .filter(|(_, w)| w.is_unit_vector())
        .map(|(j, _)| *j)
        .collect();
    Ok(ChartLift {
        module: module.expect("critical set is nonempty"),
        weights,
        unramified,
    })
}

/// Lift of a source Laurent derivation to the target.
pub fn lift_laurent(map: &MonomialMap, d: &LaurentDerivation) -> Result<LaurentDerivation> {
    map.source.check_same(&d.ctx)?;
    let n = map.rows.len();
    let logs: Vec<LaurentPoly> = d
        .log_images()
        .iter()
        .map(|p| {
            let mut out = LaurentPoly::zero();
            for (e, c) in p.terms() {
                out.add_term(map.push_exponent(e), c.clone());
            }
            out
        })
        .collect();
    let images = (0..n)
        .map(|j| {
            let mut out = LaurentPoly::zero();
            for (i, g) in logs.iter().enumerate() {
                let a = &map.inverse[j][i];
                if a.is_zero() {
                    continue;
                }
                for (e, c) in g.terms() {
                    let mut e = e.clone();
                    e[j] += 1;
                    out.add_term(e, a * c);
                }
            }
            out
        })
        .collect();
    LaurentDerivation::new(&map.target, images)
}

/// The unique target derivation restricting to `d`.
pub fn direct_lift(map: &MonomialMap, d: &GradedDerivation) -> Result<LaurentDerivation> {
    lift_laurent(map, &LaurentDerivation::from_graded(&map.source, d)?)
}

fn check_critical(map: &MonomialMap, critical: &[usize]) -> Result<()> {
    match critical.iter().find(|&&j| j >= map.target.n()) {
        Some(j) => Err(Error::InvalidArgument(format!("critical index {j} is out of range"))),
        None => Ok(()),
    }
}

/// No term of the lift has a negative exponent in a critical coordinate.
pub fn lifts_regularly(map: &MonomialMap, d: &GradedDerivation, critical: &[usize]) -> Result<bool> {
    check_critical(map, critical)?;
    Ok(is_regular(&direct_lift(map, d)?, critical))
}

pub(crate) fn is_regular(lift: &LaurentDerivation, critical: &[usize]) -> bool {
    lift.images
        .iter()
        .all(|p| p.terms().all(|(e, _)| critical.iter().all(|&j| e[j] >= 0)))
}

/// Every critical `x_j` divides `∂̄(x_j)`; requires a regular lift.
pub fn tangency_check(map: &MonomialMap, d: &GradedDerivation, critical: &[usize]) -> Result<bool> {
    check_critical(map, critical)?;
    let lift = direct_lift(map, d)?;
    if !is_regular(&lift, critical) {
        return Err(Error::NotLiftable);
    }
    Ok(critical
        .iter()
        .all(|&j| lift.images[j].terms().all(|(e, _)| e[j] >= 1)))
}

/// Whether `∂̄` maps the valuation ring of `ν_ω` on the target into itself.
///
/// The log-form `sum_j (∂̄ x_j / x_j) x_j ∂_j` is grouped by monomial
/// `x^e θ_γ` with `θ_γ = sum_j γ_j x_j ∂_j`. Such a group raises `ν_ω` by at
/// least `ω . e`, which is harmless when `ω . e >= 0`. When `ω . e` is the
/// smallest negative value `-gcd(ω)`, the group only hits elements of value
/// zero, where it vanishes exactly if `γ` is parallel to `ω`. Anything lower
/// reaches elements of positive value and always fails.
pub fn lifts_into_valuation_ring(lift: &LaurentDerivation, omega: &[i64]) -> Result<bool> {
    use num_integer::Integer;
    let n = lift.ctx.n();
    lift.ctx.check_len(omega.len())?;
    if omega.iter().any(|&x| x < 0) || omega.iter().all(|&x| x == 0) {
        return Err(Error::InvalidWeight);
    }
    let g = omega.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    let mut groups: BTreeMap<Vec<i64>, Vec<Q>> = BTreeMap::new();
    for (j, p) in lift.log_images().iter().enumerate() {
        for (e, c) in p.terms() {
            groups.entry(e.clone()).or_insert_with(|| vec![Q::zero(); n])[j] += c;
        }
    }
    Ok(groups.iter().all(|(e, gamma)| {
        let value: i64 = omega.iter().zip(e).map(|(a, b)| a * b).sum();
        if value >= 0 || is_zero_vec(gamma) {
            return true;
        }
        if value < -g {
            return false;
        }
        // gamma parallel to omega: all 2x2 minors vanish.
        (0..n).all(|a| (0..n).all(|b| &gamma[a] * q(omega[b]) == &gamma[b] * q(omega[a])))
    }))
}

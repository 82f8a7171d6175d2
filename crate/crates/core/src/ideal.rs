//! Monomial ideals in `Q[x_1, ..., x_n]` kept in canonical form.
//!
//! An ideal is stored as its minimal monomial generators sorted in
//! descending lexicographic order, so structural equality is ideal equality.
//! The empty generator list is the zero ideal and `[0, ..., 0]` is the unit
//! ideal; every operation below is defined on both.

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{ExponentVector, RingContext};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ctx: RingContext,
    gens: Vec<ExponentVector>,
}

/// Reduces a generating set to the minimal generators, sorted descending lex.
///
/// The result is a subset of the input.
pub fn minimalize_exponents(mut gens: Vec<ExponentVector>) -> Vec<ExponentVector> {
    gens.sort_unstable_by(|a, b| a.total_degree().cmp(&b.total_degree()).then_with(|| a.cmp(b)));
    gens.dedup();
    let mut kept: Vec<ExponentVector> = Vec::with_capacity(gens.len());
    for g in gens {
        // Anything dividing g has total degree <= deg g and was seen already.
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort_unstable_by(|a, b| b.cmp(a));
    kept
}

impl MonomialIdeal {
    /// `minimalize`: the canonical ideal generated by `gens`.
    pub fn new<I>(ctx: &RingContext, gens: I) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: Into<ExponentVector>,
    {
        let gens: Vec<ExponentVector> = gens.into_iter().map(Into::into).collect();
        for g in &gens {
            ctx.check_len(g.len())?;
        }
        Ok(Self::from_canonical(ctx.clone(), minimalize_exponents(gens)))
    }

    pub(crate) fn from_canonical(ctx: RingContext, gens: Vec<ExponentVector>) -> Self {
        Self { ctx, gens }
    }

    pub(crate) fn from_unchecked(ctx: &RingContext, gens: Vec<ExponentVector>) -> Self {
        Self::from_canonical(ctx.clone(), minimalize_exponents(gens))
    }

    pub fn zero(ctx: &RingContext) -> Self {
        Self::from_canonical(ctx.clone(), Vec::new())
    }

    pub fn unit(ctx: &RingContext) -> Self {
        Self::from_canonical(ctx.clone(), vec![ExponentVector::zero(ctx.n())])
    }

    /// The maximal ideal `(x_1, ..., x_n)`.
    pub fn maximal(ctx: &RingContext) -> Self {
        Self::from_unchecked(ctx, (0..ctx.n()).map(|i| ExponentVector::unit(ctx.n(), i)).collect())
    }

    pub fn ctx(&self) -> &RingContext {
        &self.ctx
    }

    pub fn gens(&self) -> &[ExponentVector] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].iter().all(|&e| e == 0)
    }

    /// Componentwise maximum of the minimal generators.
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut m = vec![0; self.ctx.n()];
        for g in &self.gens {
            for (mi, &gi) in m.iter_mut().zip(g.iter()) {
                *mi = (*mi).max(gi);
            }
        }
        m
    }

    /// Largest single exponent over all minimal generators.
    pub fn max_degree(&self) -> u32 {
        self.max_exponents().into_iter().max().unwrap_or(0)
    }

    pub fn member(&self, a: &[u32]) -> Result<bool> {
        self.ctx.check_len(a.len())?;
        Ok(self.contains(a))
    }

    pub(crate) fn contains(&self, a: &[u32]) -> bool {
        self.gens.iter().any(|g| g.divides(a))
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    pub fn equals(&self, other: &MonomialIdeal) -> bool {
        self == other
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<Self> {
        self.ctx.check_same(&other.ctx)?;
        let all = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(Self::from_unchecked(&self.ctx, all))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<Self> {
        self.ctx.check_same(&other.ctx)?;
        let mut all = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                all.push(a.add(b));
            }
        }
        Ok(Self::from_unchecked(&self.ctx, all))
    }

    pub fn power(&self, k: u32) -> Self {
        let mut acc = Self::unit(&self.ctx);
        for _ in 0..k {
            acc = acc.product(self).expect("same ring");
        }
        acc
    }

    /// Successive powers `I^0, I^1, ..., I^k`.
    pub fn powers(&self, k: u32) -> Vec<Self> {
        let mut out = Vec::with_capacity(k as usize + 1);
        out.push(Self::unit(&self.ctx));
        for i in 0..k as usize {
            let next = out[i].product(self).expect("same ring");
            out.push(next);
        }
        out
    }

    /// `[self : x^g]`.
    pub fn quotient_monomial(&self, g: &[u32]) -> Result<Self> {
        self.ctx.check_len(g.len())?;
        let gens = self.gens.iter().map(|m| m.saturating_sub(g)).collect();
        Ok(Self::from_unchecked(&self.ctx, gens))
    }

    /// The colon ideal `[self : other] = { f : f * other ⊆ self }`.
    pub fn quotient(&self, other: &MonomialIdeal) -> Result<Self> {
        self.ctx.check_same(&other.ctx)?;
        if other.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let mut acc: Option<Self> = None;
        for g in &other.gens {
            let q = self.quotient_monomial(g)?;
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q)?,
            });
            if acc.as_ref().is_some_and(Self::is_zero) {
                break;
            }
        }
        Ok(acc.expect("nonzero divisor has a generator"))
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<Self> {
        self.ctx.check_same(&other.ctx)?;
        let mut all = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            if other.contains(a) {
                all.push(a.clone());
                continue;
            }
            for b in &other.gens {
                all.push(a.lcm(b));
            }
        }
        Ok(Self::from_unchecked(&self.ctx, all))
    }

    pub fn radical(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let gens = self.gens.iter().map(ExponentVector::support).collect();
        Ok(Self::from_unchecked(&self.ctx, gens))
    }

    /// Primary to `(x_1, ..., x_n)`: contains a positive pure power of every variable.
    pub fn is_m_primary(&self) -> bool {
        (0..self.ctx.n()).all(|i| {
            self.gens
                .iter()
                .any(|g| g[i] > 0 && g.iter().enumerate().all(|(j, &e)| j == i || e == 0))
        })
    }

    pub fn is_radical(&self) -> bool {
        self.gens.iter().all(|g| g.iter().all(|&e| e <= 1))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        let parts: Vec<String> = self.gens.iter().map(|g| self.ctx.format_monomial(g)).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

//! Multigraded submodules of the free module of derivations.
//!
//! A module is a list of homogeneous generators. Multiplying a generator by
//! `x^u` keeps its coefficient vector and shifts its degree, so the graded
//! piece in degree `b` is the span of coefficient vectors of generators whose
//! degree is `<= b` componentwise.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::derivation::graded::{admissible_slots, GradedDerivation};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::linalg::{in_span, intersect, rank, rref, Q};
use crate::ring::{ExponentVector, RingContext};

/// Hard ceiling on any coordinate of the degree box.
pub const DEFAULT_MAX_DEGREE: i64 = 256;

/// Box controls for graded computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GradedOptions {
    /// Extra degrees added past the proven generation bound.
    pub margin: i64,
    /// Largest allowed upper corner coordinate before giving up.
    pub max_degree: i64,
}

impl Default for GradedOptions {
    fn default() -> Self {
        Self {
            margin: 1,
            max_degree: DEFAULT_MAX_DEGREE,
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct DerivationModule {
    ctx: RingContext,
    generators: Vec<GradedDerivation>,
    box_upper: Vec<i64>,
}

impl DerivationModule {
    /// Module generated by `generators`; the box is their degree envelope.
    pub fn from_generators(ctx: &RingContext, generators: Vec<GradedDerivation>) -> Result<Self> {
        for g in &generators {
            ctx.check_len(g.n())?;
        }
        let mut box_upper = vec![-1; ctx.n()];
        for g in &generators {
            for (u, &b) in box_upper.iter_mut().zip(g.degree()) {
                *u = (*u).max(b);
            }
        }
        let mut generators = generators;
        generators.sort();
        generators.dedup();
        Ok(Self {
            ctx: ctx.clone(),
            generators,
            box_upper,
        })
    }

    /// `sum_i I_i ∂_i`.
    pub fn from_slot_ideals(ctx: &RingContext, slots: &[MonomialIdeal]) -> Result<Self> {
        ctx.check_len(slots.len())?;
        let mut gens = Vec::new();
        for (i, ideal) in slots.iter().enumerate() {
            ctx.check_same(ideal.ctx())?;
            gens.extend(ideal.gens().iter().map(|u| GradedDerivation::monomial(u, i)));
        }
        Self::from_generators(ctx, gens)
    }

    pub fn ctx(&self) -> &RingContext {
        &self.ctx
    }

    pub fn generators(&self) -> &[GradedDerivation] {
        &self.generators
    }

    /// Upper corner of the degree box `[-1, upper]^n` the module was computed on.
    pub fn box_upper(&self) -> &[i64] {
        &self.box_upper
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Echelon basis of the degree-`b` piece.
    pub fn graded_piece(&self, b: &[i64]) -> Vec<Vec<Q>> {
        rref(
            self.generators
                .iter()
                .filter(|g| g.degree().iter().zip(b).all(|(x, y)| x <= y))
                .map(|g| g.coeffs().to_vec())
                .collect(),
        )
    }

    pub fn contains(&self, d: &GradedDerivation) -> bool {
        d.n() == self.ctx.n() && in_span(&self.graded_piece(d.degree()), d.coeffs())
    }

    pub fn is_submodule_of(&self, other: &DerivationModule) -> bool {
        self.ctx == other.ctx && self.generators.iter().all(|g| other.contains(g))
    }

    pub fn equals(&self, other: &DerivationModule) -> bool {
        self.is_submodule_of(other) && other.is_submodule_of(self)
    }

    /// Degreewise intersection over the union of both boxes.
    pub fn intersect(&self, other: &DerivationModule, opts: GradedOptions) -> Result<Self> {
        self.ctx.check_same(&other.ctx)?;
        let n = self.ctx.n();
        let upper: Vec<i64> = self.box_upper.iter().zip(&other.box_upper).map(|(a, b)| (*a).max(*b)).collect();
        assemble(&self.ctx, upper, opts, |b| {
            intersect(&self.graded_piece(b), &other.graded_piece(b), n)
        })
    }

    /// Per-slot coefficient ideals, when every generator is a single monomial
    /// derivation `x^u ∂_i` (up to a scalar).
    pub fn slot_ideals(&self) -> Option<Vec<MonomialIdeal>> {
        let n = self.ctx.n();
        let mut slots: Vec<Vec<ExponentVector>> = vec![Vec::new(); n];
        for g in &self.generators {
            let support: Vec<usize> = (0..n).filter(|&i| !g.coeffs()[i].is_zero()).collect();
            let [i] = support.as_slice() else {
                return None;
            };
            let mut u = g.degree().to_vec();
            u[*i] += 1;
            slots[*i].push(ExponentVector::new(u.iter().map(|&e| e as u32).collect()));
        }
        Some(
            slots
                .into_iter()
                .map(|s| MonomialIdeal::from_unchecked(&self.ctx, s))
                .collect(),
        )
    }

    /// Text with one generator per entry, in the grammar accepted by the parser.
    pub fn generator_texts(&self) -> Vec<String> {
        self.generators.iter().map(|g| g.to_text(&self.ctx)).collect()
    }
}

impl fmt::Display for DerivationModule {
    /// `(x,y^3)∂x + (x^7,y)∂y` when possible, otherwise a generator list.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if let Some(slots) = self.slot_ideals() {
            let parts: Vec<String> = slots
                .iter()
                .enumerate()
                .filter(|(_, ideal)| !ideal.is_zero())
                .map(|(i, ideal)| {
                    let gens: Vec<String> = ideal.gens().iter().map(|g| self.ctx.format_monomial(g)).collect();
                    format!("({})∂{}", gens.join(","), self.ctx.name(i))
                })
                .collect();
            return write!(f, "{}", parts.join(" + "));
        }
        write!(f, "<{}>", self.generator_texts().join(", "))
    }
}

impl fmt::Debug for DerivationModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All degrees in `[lo, hi]` (componentwise), ordered by total degree then lex.
fn degrees_in_box(lo: &[i64], hi: &[i64]) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    if lo.iter().zip(hi).any(|(l, h)| l > h) {
        return out;
    }
    let mut cur = lo.to_vec();
    loop {
        out.push(cur.clone());
        let mut i = 0;
        loop {
            if i == cur.len() {
                out.sort_by(|a, b| a.iter().sum::<i64>().cmp(&b.iter().sum()).then_with(|| a.cmp(b)));
                return out;
            }
            if cur[i] < hi[i] {
                cur[i] += 1;
                break;
            }
            cur[i] = lo[i];
            i += 1;
        }
    }
}

/// Builds the module whose degree-`b` piece is `piece(b)`.
///
/// Generators are collected on `[-1, upper]^n`. Every degree on the outer
/// shell (some coordinate equal to `upper_j + 1`) must then already be
/// generated; otherwise the box grows by one and the scan repeats.
pub(crate) fn assemble<F>(ctx: &RingContext, mut upper: Vec<i64>, opts: GradedOptions, piece: F) -> Result<DerivationModule>
where
    F: Fn(&[i64]) -> Vec<Vec<Q>>,
{
    let n = ctx.n();
    let mut cache: BTreeMap<Vec<i64>, Vec<Vec<Q>>> = BTreeMap::new();
    let mut lookup = |b: &[i64]| -> Vec<Vec<Q>> {
        cache
            .entry(b.to_vec())
            .or_insert_with(|| if admissible_slots(b).is_some() { rref(piece(b)) } else { Vec::new() })
            .clone()
    };
    loop {
        if upper.iter().any(|&u| u > opts.max_degree) {
            return Err(Error::DegreeCapExceeded { cap: opts.max_degree });
        }
        let mut generators: Vec<GradedDerivation> = Vec::new();
        let lower = vec![-1; n];
        for b in degrees_in_box(&lower, &upper) {
            let basis = lookup(&b);
            if basis.is_empty() {
                continue;
            }
            let mut span: Vec<Vec<Q>> = generators
                .iter()
                .filter(|g| g.degree().iter().zip(&b).all(|(x, y)| x <= y))
                .map(|g| g.coeffs().to_vec())
                .collect();
            let mut r = rank(&span);
            if r == basis.len() {
                continue;
            }
            for v in basis {
                span.push(v.clone());
                let r2 = rank(&span);
                if r2 > r {
                    r = r2;
                    generators.push(GradedDerivation::new_unchecked(b.clone(), v));
                } else {
                    span.pop();
                }
            }
        }
        let candidate = DerivationModule::from_generators(ctx, generators)?;
        let outer: Vec<i64> = upper.iter().map(|u| u + 1).collect();
        let shell_ok = degrees_in_box(&lower, &outer)
            .into_iter()
            .filter(|b| b.iter().zip(&outer).any(|(x, o)| x == o))
            .all(|b| {
                let have = candidate.graded_piece(&b);
                lookup(&b).iter().all(|v| in_span(&have, v))
            });
        if shell_ok {
            return Ok(DerivationModule {
                box_upper: upper,
                ..candidate
            });
        }
        upper = outer;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    fn xy() -> RingContext {
        RingContext::new(&["x", "y"]).unwrap()
    }

    fn slots(r: &RingContext, s: &[&[&[u32]]]) -> DerivationModule {
        let ideals: Vec<MonomialIdeal> = s
            .iter()
            .map(|gens| MonomialIdeal::new(r, gens.iter().map(|g| g.to_vec())).unwrap())
            .collect();
        DerivationModule::from_slot_ideals(r, &ideals).unwrap()
    }

    fn d(b: &[i64], c: &[i64]) -> GradedDerivation {
        GradedDerivation::new(b.to_vec(), c.iter().map(|&x| q(x)).collect()).unwrap()
    }

    #[test]
    fn containment_in_staircase_module() {
        let r = xy();
        let m = slots(&r, &[&[&[1, 0], &[0, 3]], &[&[7, 0], &[0, 1]]]);
        assert!(!m.contains(&d(&[-1, 2], &[1, 0])));
        assert!(m.contains(&d(&[-1, 3], &[1, 0])));
        for g in m.generators() {
            assert!(m.contains(g));
        }
        assert_eq!(m.to_string(), "(x,y^3)∂x + (x^7,y)∂y");
    }

    #[test]
    fn intersection_and_equality() {
        let r = xy();
        let t_m = slots(&r, &[&[&[1, 0], &[0, 1]], &[&[1, 0], &[0, 1]]]);
        let left = slots(&r, &[&[&[1, 0], &[0, 2]], &[&[1, 0], &[0, 1]]]);
        let meet = left.intersect(&t_m, GradedOptions::default()).unwrap();
        assert!(meet.equals(&left));
        assert!(t_m.intersect(&t_m, GradedOptions::default()).unwrap().equals(&t_m));
        let mut permuted = t_m.generators().to_vec();
        permuted.reverse();
        assert!(DerivationModule::from_generators(&r, permuted).unwrap().equals(&t_m));
    }

    #[test]
    fn mixed_generators_fall_back_to_a_list() {
        let r = xy();
        let m = DerivationModule::from_generators(&r, vec![d(&[0, 0], &[1, -1])]).unwrap();
        assert_eq!(m.to_string(), "<x*d_x - y*d_y>");
    }

    #[test]
    fn degree_order_is_graded_lex() {
        let ds = degrees_in_box(&[-1, -1], &[0, 0]);
        assert_eq!(ds, vec![vec![-1, -1], vec![-1, 0], vec![0, -1], vec![0, 0]]);
    }

    #[test]
    fn cap_is_enforced() {
        let r = xy();
        let opts = GradedOptions { margin: 1, max_degree: 2 };
        // Diagonal pieces that keep turning direction are never generated below.
        let res = assemble(&r, vec![1, 1], opts, |b| {
            if b.iter().all(|&x| x >= 0) && b[0] == b[1] {
                vec![vec![q(1), q(b[0])]]
            } else {
                Vec::new()
            }
        });
        assert_eq!(res.unwrap_err(), Error::DegreeCapExceeded { cap: 2 });
    }
}

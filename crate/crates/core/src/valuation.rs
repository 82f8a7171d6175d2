//! Monomial valuations, logarithmic derivation modules along them, and the
//! module of derivations that lift to the normalized blow-up of an ideal.

use num_integer::Integer;

use crate::closures::{integral_closure, newton_polyhedron, rr_closure, RRReport};
use crate::derivation::{admissible_slots, assemble, tangent_module, DerivationModule, GradedOptions};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::linalg::{q, Q};
use crate::ring::{dot_u, RingContext};

/// `ν_w(x^a) = w . a` for a nonnegative, nonzero weight `w`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightValuation {
    w: Vec<i64>,
}

impl WeightValuation {
    /// Rejects negative or all-zero weights. The weight is kept as given;
    /// see [`primitive`](Self::primitive).
    pub fn new(ctx: &RingContext, w: Vec<i64>) -> Result<Self> {
        ctx.check_len(w.len())?;
        if w.iter().any(|&x| x < 0) || w.iter().all(|&x| x == 0) {
            return Err(Error::InvalidWeight);
        }
        Ok(Self { w })
    }

    /// Same valuation up to scaling, with coprime weights.
    pub fn primitive(&self) -> Self {
        let g = self.w.iter().fold(0i64, |acc, &x| acc.gcd(&x));
        Self {
            w: self.w.iter().map(|x| x / g).collect(),
        }
    }

    pub(crate) fn from_primitive(w: Vec<i64>) -> Self {
        Self { w }
    }

    pub fn weights(&self) -> &[i64] {
        &self.w
    }

    pub fn value(&self, a: &[u32]) -> i64 {
        dot_u(&self.w, a)
    }

    /// Minimum over the generators; `ZeroIdeal` has no finite value.
    pub fn value_ideal(&self, ideal: &MonomialIdeal) -> Result<i64> {
        ideal
            .gens()
            .iter()
            .map(|a| self.value(a))
            .min()
            .ok_or(Error::ZeroIdeal)
    }

    /// True when the weight is a standard basis vector.
    pub fn is_unit_vector(&self) -> bool {
        self.w.iter().filter(|&&x| x != 0).count() == 1 && self.w.contains(&1)
    }
}

/// Degree-`b` piece of `T(log^w I)`: everything admissible when `w . b >= 0`.
///
/// When `w . b < 0` the piece is zero for every nonzero `I`: with `x^a` in
/// `I` so is `x^{a + e_j}`, and `d = x^b sum_i c_i x_i ∂_i` must kill both,
/// forcing `c_j = 0`.
pub(crate) fn log_piece(w: &[i64], b: &[i64]) -> Vec<Vec<Q>> {
    let n = b.len();
    let Some(slots) = admissible_slots(b) else {
        return Vec::new();
    };
    let wb: i64 = w.iter().zip(b).map(|(x, y)| x * y).sum();
    if wb < 0 {
        return Vec::new();
    }
    slots
        .iter()
        .enumerate()
        .filter(|(_, ok)| **ok)
        .map(|(i, _)| {
            let mut e = vec![q(0); n];
            e[i] = q(1);
            e
        })
        .collect()
}

/// Upper corner covering every minimal `x^u ∂_i` with `w . u >= w_i`.
fn log_box(w: &[i64], ideal: &MonomialIdeal, margin: i64) -> Vec<i64> {
    let d = i64::from(ideal.max_degree());
    let top = w.iter().copied().max().unwrap_or(0);
    w.iter()
        .map(|&wj| {
            let reach = if wj > 0 { (top + wj - 1) / wj } else { 0 };
            d.max(reach) + margin
        })
        .collect()
}

/// `T(log^w I)`: derivations `d` with `ν_w(d f) >= ν_w(f)` for `f ∈ I`.
pub fn log_module(v: &WeightValuation, ideal: &MonomialIdeal, opts: GradedOptions) -> Result<DerivationModule> {
    ideal.ctx().check_len(v.w.len())?;
    let w = &v.w;
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let upper = log_box(w, ideal, opts.margin);
    assemble(ideal.ctx(), upper, opts, |b| log_piece(w, b))
}

/// Facets of the Newton polyhedron with their values `d = ν_w(I)`.
pub fn rees_valuations(ideal: &MonomialIdeal) -> Result<Vec<(WeightValuation, i64)>> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let np = newton_polyhedron(ideal)?;
    Ok(np
        .facets()
        .iter()
        .map(|f| (WeightValuation::from_primitive(f.normal.clone()), f.rhs))
        .collect())
}

/// `∩_w T(log^w J)` over the given valuations.
pub fn log_intersection(
    valuations: &[(WeightValuation, i64)],
    defining: &MonomialIdeal,
    opts: GradedOptions,
) -> Result<DerivationModule> {
    let mut acc: Option<DerivationModule> = None;
    for (v, _) in valuations {
        let m = log_module(v, defining, opts)?;
        acc = Some(match acc {
            None => m,
            Some(prev) => prev.intersect(&m, opts)?,
        });
    }
    acc.ok_or(Error::UnitIdeal)
}

/// Derivations that lift to the normalized blow-up of `I`.
pub fn liftable_module(ideal: &MonomialIdeal, opts: GradedOptions) -> Result<DerivationModule> {
    log_intersection(&rees_valuations(ideal)?, ideal, opts)
}

#[derive(Clone, Debug)]
pub struct LiftReport {
    pub rees: Vec<(WeightValuation, i64)>,
    pub rr: RRReport,
    pub integral_closure: MonomialIdeal,
    pub radical: MonomialIdeal,
    pub t_i: DerivationModule,
    pub t_rr: DerivationModule,
    pub l: DerivationModule,
    pub t_bar: DerivationModule,
    pub t_rad: DerivationModule,
    /// `T(I) ⊆ T(Î) ⊆ L ⊆ T(Ī)`.
    pub chain_ok: bool,
    pub uniformly_ramified: bool,
    pub differentially_ramified: bool,
}

/// Every Rees valuation is constant on the minimal generators of `√I`.
pub fn uniformly_ramified(rees: &[(WeightValuation, i64)], radical: &MonomialIdeal) -> bool {
    rees.iter().all(|(v, _)| {
        let mut values = radical.gens().iter().map(|a| v.value(a));
        let first = values.next();
        values.all(|x| Some(x) == first)
    })
}

pub fn sandwich_report(ideal: &MonomialIdeal, opts: GradedOptions, n_max: usize) -> Result<LiftReport> {
    let rees = rees_valuations(ideal)?;
    let rr = rr_closure(ideal, n_max, crate::closures::DEFAULT_WINDOW)?;
    let bar = integral_closure(ideal)?;
    let radical = ideal.radical()?;
    let t_i = tangent_module(ideal, opts)?;
    let t_rr = tangent_module(&rr.closure, opts)?;
    let l = log_intersection(&rees, ideal, opts)?;
    let t_bar = tangent_module(&bar, opts)?;
    let t_rad = tangent_module(&radical, opts)?;
    let chain_ok = t_i.is_submodule_of(&t_rr) && t_rr.is_submodule_of(&l) && l.is_submodule_of(&t_bar);
    let uniformly = uniformly_ramified(&rees, &radical);
    let differentially = l.equals(&t_rad);
    Ok(LiftReport {
        rees,
        rr,
        integral_closure: bar,
        radical,
        t_i,
        t_rr,
        l,
        t_bar,
        t_rad,
        chain_ok,
        uniformly_ramified: uniformly,
        differentially_ramified: differentially,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> RingContext {
        RingContext::new(&["x", "y"]).unwrap()
    }

    fn ideal(r: &RingContext, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(r, gens.iter().map(|g| g.to_vec())).unwrap()
    }

    fn opts() -> GradedOptions {
        GradedOptions::default()
    }

    #[test]
    fn values() {
        let r = xy();
        let v = WeightValuation::new(&r, vec![4, 9]).unwrap();
        assert_eq!(v.value(&[2, 0]), 8);
        let u = WeightValuation::new(&r, vec![1, 1]).unwrap();
        assert_eq!(u.value_ideal(&MonomialIdeal::unit(&r)).unwrap(), 0);
        let w = WeightValuation::new(&r, vec![2, 1]).unwrap();
        assert_eq!(w.value_ideal(&ideal(&r, &[&[1, 0], &[0, 2]])).unwrap(), 2);
        assert_eq!(WeightValuation::new(&r, vec![6, 3]).unwrap().primitive(), w);
        assert_eq!(WeightValuation::new(&r, vec![0, 0]).unwrap_err(), Error::InvalidWeight);
        assert_eq!(WeightValuation::new(&r, vec![-1, 2]).unwrap_err(), Error::InvalidWeight);
    }

    #[test]
    fn log_modules() {
        let r = xy();
        let m = MonomialIdeal::maximal(&r);
        for n in 1..5 {
            let v = WeightValuation::new(&r, vec![1, n]).unwrap();
            let got = log_module(&v, &m, opts()).unwrap();
            let expected = if n == 1 {
                "(x,y)∂x + (x,y)∂y".to_string()
            } else {
                format!("(x,y)∂x + (x^{n},y)∂y")
            };
            assert_eq!(got.to_string(), expected);
        }
        let v = WeightValuation::new(&r, vec![4, 9]).unwrap();
        assert_eq!(log_module(&v, &m, opts()).unwrap().to_string(), "(x,y)∂x + (x^3,y)∂y");
        assert_eq!(log_module(&v, &MonomialIdeal::unit(&r), opts()).unwrap_err(), Error::UnitIdeal);
    }

    #[test]
    fn scaling_the_weight_changes_nothing() {
        let r = xy();
        let i = ideal(&r, &[&[3, 0], &[1, 1], &[0, 2]]);
        for w in [[1i64, 2], [4, 9], [3, 1], [0, 1]] {
            let base = log_module(&WeightValuation::new(&r, w.to_vec()).unwrap(), &i, opts()).unwrap();
            for k in 2..4 {
                let scaled = WeightValuation::new(&r, w.iter().map(|x| x * k).collect()).unwrap();
                assert!(log_module(&scaled, &i, opts()).unwrap().equals(&base));
            }
        }
    }

    #[test]
    fn rees_examples() {
        let r = xy();
        let m = MonomialIdeal::maximal(&r);
        let rees = rees_valuations(&m).unwrap();
        assert_eq!(rees.len(), 1);
        assert_eq!((rees[0].0.weights(), rees[0].1), (&[1i64, 1][..], 1));
        let m2 = m.power(2);
        assert_eq!(rees_valuations(&m2).unwrap()[0].1, 2);
        assert_eq!(rees_valuations(&MonomialIdeal::unit(&r)).unwrap_err(), Error::UnitIdeal);
    }

    #[test]
    fn liftable_examples() {
        let r = xy();
        let m = MonomialIdeal::maximal(&r);
        let l = liftable_module(&m, opts()).unwrap();
        assert_eq!(l.to_string(), "(x,y)∂x + (x,y)∂y");
        let i = ideal(&r, &[&[1, 0], &[0, 2]]);
        assert_eq!(liftable_module(&i, opts()).unwrap().to_string(), "(x,y^2)∂x + (x,y)∂y");
    }

    #[test]
    fn sandwich_on_the_staircase_example() {
        let r = xy();
        let i = ideal(&r, &[&[10, 0], &[8, 1], &[1, 4], &[0, 5]]);
        let rep = sandwich_report(&i, opts(), 20).unwrap();
        assert!(rep.chain_ok);
        assert_eq!(rep.t_rr.to_string(), "(x,y)∂x + (x^5,y)∂y");
        assert_eq!(rep.t_bar.to_string(), "(x,y)∂x + (x^3,y)∂y");
        assert!(rep.l.equals(&rep.t_bar));
        assert!(rep.t_rr.is_submodule_of(&rep.l) && rep.l.is_submodule_of(&rep.t_bar));
        assert!(!rep.uniformly_ramified);
        assert!(!rep.differentially_ramified);
    }

    #[test]
    fn classifiers_on_small_blowups() {
        let r = xy();
        let m = sandwich_report(&MonomialIdeal::maximal(&r), opts(), 20).unwrap();
        assert!(m.chain_ok && m.uniformly_ramified && m.differentially_ramified);
        for module in [&m.t_i, &m.t_rr, &m.l, &m.t_bar] {
            assert!(module.equals(&m.t_rad));
        }
        let xy2 = sandwich_report(&ideal(&r, &[&[1, 0], &[0, 2]]), opts(), 20).unwrap();
        assert!(!xy2.uniformly_ramified && !xy2.differentially_ramified);
        assert!(!xy2.l.equals(&xy2.t_rad));
    }
}

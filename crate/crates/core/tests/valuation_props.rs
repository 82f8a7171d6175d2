mod common;

use common::{m_primary, small_ideal, squarefree};
use liftlog_core::derivation::{tangent_module, GradedOptions};
use liftlog_core::valuation::{
    liftable_module, log_module, rees_valuations, sandwich_report, WeightValuation,
};
use liftlog_core::closures::DEFAULT_N_MAX;
use proptest::prelude::*;

fn opts() -> GradedOptions {
    GradedOptions::default()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn defining_ideal_independence(i in small_ideal(3, 4, 3)) {
        let rad = i.radical().unwrap();
        for (w, _) in rees_valuations(&i).unwrap() {
            let base = log_module(&w, &i, opts()).unwrap();
            for k in 2..=3 {
                prop_assert!(base.equals(&log_module(&w, &i.power(k), opts()).unwrap()));
            }
            prop_assert!(base.equals(&log_module(&w, &rad, opts()).unwrap()));
        }
    }

    #[test]
    fn liftable_is_tangent_to_the_radical(i in small_ideal(3, 4, 3)) {
        let l = liftable_module(&i, opts()).unwrap();
        let t = tangent_module(&i.radical().unwrap(), opts()).unwrap();
        prop_assert!(l.is_submodule_of(&t));
    }

    #[test]
    fn sandwich_chain(i in small_ideal(3, 4, 3)) {
        let r = sandwich_report(&i, opts(), DEFAULT_N_MAX).unwrap();
        prop_assert!(r.chain_ok);
        if r.rr.closure == r.integral_closure {
            prop_assert!(r.t_rr.equals(&r.l) && r.l.equals(&r.t_bar));
        }
    }

    #[test]
    fn uniform_implies_differential(i in (1usize..=3).prop_flat_map(|n| m_primary(n, 4, 3))) {
        let r = sandwich_report(&i, opts(), DEFAULT_N_MAX).unwrap();
        if r.uniformly_ramified {
            prop_assert!(r.differentially_ramified, "{}", i);
        }
    }

    #[test]
    fn radical_ideals_are_differentially_ramified(i in squarefree(3, 4)) {
        let l = liftable_module(&i, opts()).unwrap();
        prop_assert!(l.equals(&tangent_module(&i, opts()).unwrap()), "{}", i);
    }

    #[test]
    fn differential_ramification_needs_unit_normals(i in (2usize..=3).prop_flat_map(|n| m_primary(n, 4, 2))) {
        let r = sandwich_report(&i, opts(), DEFAULT_N_MAX).unwrap();
        let ones = r.rees.iter().all(|(w, _)| w.weights().iter().all(|&x| x == 1));
        prop_assert_eq!(r.differentially_ramified, ones, "{}", i);
    }

    #[test]
    fn scaling_the_weight_changes_nothing(
        i in small_ideal(2, 4, 3),
        w in prop::collection::vec(0i64..6, 2),
        k in 2i64..4,
    ) {
        prop_assume!(w.iter().any(|&x| x > 0));
        prop_assume!(i.ctx().n() == 2);
        let v = WeightValuation::new(i.ctx(), w.clone()).unwrap();
        let scaled = WeightValuation::new(i.ctx(), w.iter().map(|x| x * k).collect()).unwrap();
        prop_assert!(log_module(&v, &i, opts()).unwrap().equals(&log_module(&scaled, &i, opts()).unwrap()));
    }
}

/// `y (x, y)`: the radical `(y)` misses the exceptional center, so the
/// monomial reading of uniform ramification does not predict differential
/// ramification outside the m-primary case.
#[test]
fn uniform_reading_needs_m_primary() {
    let r = common::ring(2);
    let i = liftlog_core::MonomialIdeal::new(&r, [[1u32, 1], [0, 2]]).unwrap();
    let rep = sandwich_report(&i, opts(), DEFAULT_N_MAX).unwrap();
    assert!(rep.uniformly_ramified);
    assert!(!rep.differentially_ramified);
    assert!(rep.chain_ok);
}

use liftlog_core::semigroup::{
    sgr_rr_closure, sgr_tangent, sgr_tangent_ring, NumericalSemigroup, SemigroupIdeal,
};
use proptest::prelude::*;

fn semigroup() -> impl Strategy<Value = NumericalSemigroup> {
    prop::collection::vec(2i64..=9, 1..=4).prop_filter_map("gcd must be 1", |g| {
        let mut all = g;
        all.push(all.iter().max().unwrap() + 1);
        NumericalSemigroup::new(&all).ok()
    })
}

/// A semigroup with a few of its positive elements, the shifts of an integral ideal.
fn with_ideal() -> impl Strategy<Value = (NumericalSemigroup, Vec<i64>)> {
    semigroup().prop_flat_map(|s| {
        let members: Vec<i64> = (1..=30).filter(|&x| s.contains(x)).collect();
        (Just(s), prop::sample::subsequence(members, 1..=3))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn singular_rings_have_no_order_zero(s in semigroup()) {
        let t = sgr_tangent_ring(&s);
        if !s.is_regular() {
            prop_assert!(t.min_order() >= 1);
            let m = sgr_tangent(&SemigroupIdeal::maximal(&s)).unwrap();
            prop_assert!(m == t);
        } else {
            prop_assert_eq!(t.min_order(), 0);
        }
    }

    #[test]
    fn rr_closure_contains_and_agrees((s, shifts) in with_ideal()) {
        let e = SemigroupIdeal::new(&s, &shifts).unwrap();
        let rep = sgr_rr_closure(&e, 20, 2).unwrap();
        prop_assert!(e.is_subset_of(&rep.closure));
        if let Some(m) = rep.powers_agree_from {
            for k in m..m + 3 {
                prop_assert!(rep.closure.power(k as u32) == e.power(k as u32));
            }
        }
    }

    #[test]
    fn quotient_adjunction((s, a, b) in with_ideal().prop_flat_map(|(s, a)| {
        let members: Vec<i64> = (1..=30).filter(|&x| s.contains(x)).collect();
        (Just(s), Just(a), prop::sample::subsequence(members, 1..=2))
    })) {
        let e = SemigroupIdeal::new(&s, &a).unwrap();
        let f = SemigroupIdeal::new(&s, &b).unwrap();
        let q = e.quotient(&f).unwrap();
        prop_assert!(q.product(&f).unwrap().is_subset_of(&e));
        let top = s.generators().iter().max().copied().unwrap();
        let bound = s.frobenius() + 3 * top + e.threshold() + f.threshold();
        for m in 0..=bound {
            let want = s.contains(m) && (0..=bound).filter(|&x| f.contains(x)).all(|x| e.contains(m + x));
            prop_assert_eq!(q.contains(m), want, "t^{}", m);
        }
    }

    #[test]
    fn tangent_orders_by_brute_force((s, shifts) in with_ideal()) {
        let e = SemigroupIdeal::new(&s, &shifts).unwrap();
        let k = sgr_tangent(&e).unwrap();
        let top = s.generators().iter().max().copied().unwrap();
        let bound = e.threshold() + s.frobenius() + 2 * top + 2;
        for ord in 0..=bound {
            let ok = (1..=bound).filter(|&x| s.contains(x)).all(|x| s.contains(x + ord - 1))
                && (1..=bound).filter(|&x| e.contains(x)).all(|x| e.contains(x + ord - 1));
            prop_assert_eq!(k.contains(ord), ok, "order {}", ord);
        }
    }
}

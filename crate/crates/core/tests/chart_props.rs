mod common;

use liftlog_core::chart::{
    chart_liftable, direct_lift, lift_laurent, lifts_regularly, tangency_check, MonomialMap,
};
use liftlog_core::derivation::{GradedDerivation, GradedOptions};
use liftlog_core::linalg::{inverse, q};
use liftlog_core::RingContext;
use proptest::prelude::*;

fn opts() -> GradedOptions {
    GradedOptions::default()
}

fn rings(n: usize) -> (RingContext, RingContext, RingContext) {
    (
        RingContext::with_prefix("y", n).unwrap(),
        RingContext::with_prefix("x", n).unwrap(),
        RingContext::with_prefix("z", n).unwrap(),
    )
}

fn invertible(rows: &[Vec<u32>]) -> bool {
    let m: Vec<Vec<_>> = rows.iter().map(|r| r.iter().map(|&e| q(i64::from(e))).collect()).collect();
    rows.iter().all(|r| r.iter().any(|&e| e > 0)) && inverse(&m).is_some()
}

/// Invertible exponent matrices with entries up to `max_exp`.
fn matrix(n: usize, max_exp: u32) -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(prop::collection::vec(0..=max_exp, n), n).prop_filter("invertible", |m| invertible(m))
}

/// Target coordinates whose induced weight is neither zero nor a unit vector.
fn ramified(map: &MonomialMap) -> Vec<usize> {
    let m = map.exponent_matrix();
    (0..m.len())
        .filter(|&j| {
            let col: Vec<u32> = m.iter().map(|r| r[j]).collect();
            let nonzero = col.iter().filter(|&&e| e > 0).count();
            nonzero > 1 || col.iter().any(|&e| e > 1)
        })
        .collect()
}

fn map_and_probes(n: usize) -> impl Strategy<Value = (Vec<Vec<u32>>, Vec<(Vec<u32>, usize)>)> {
    (
        matrix(n, 4),
        prop::collection::vec((prop::collection::vec(0u32..=4, n), 0..n), 12),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn criterion_matches_direct_lift((rows, probes) in (2usize..=3).prop_flat_map(map_and_probes)) {
        let n = rows.len();
        let (src, tgt, _) = rings(n);
        let map = MonomialMap::new(&src, &tgt, rows).unwrap();
        let critical = ramified(&map);
        prop_assume!(!critical.is_empty());
        let lift = chart_liftable(&map, &critical, opts()).unwrap();
        prop_assert!(lift.unramified.is_empty());
        for g in lift.module.generators() {
            prop_assert!(lifts_regularly(&map, g, &critical).unwrap(), "{}", g.to_text(&src));
            prop_assert!(tangency_check(&map, g, &critical).unwrap(), "{}", g.to_text(&src));
        }
        for (u, i) in probes {
            let d = GradedDerivation::monomial(&u, i);
            prop_assert_eq!(
                lifts_regularly(&map, &d, &critical).unwrap(),
                lift.module.contains(&d),
                "{} along {:?}", d.to_text(&src), map
            );
        }
    }

    #[test]
    fn lifting_is_functorial(
        (a, b) in (2usize..=3).prop_flat_map(|n| (matrix(n, 3), matrix(n, 3))),
        u in prop::collection::vec(0u32..=3, 3),
        i in 0usize..3,
    ) {
        let n = a.len();
        let (src, mid, tgt) = rings(n);
        let first = MonomialMap::new(&src, &mid, a).unwrap();
        let second = MonomialMap::new(&mid, &tgt, b).unwrap();
        let d = GradedDerivation::monomial(&u[..n], i % n);
        let composed = direct_lift(&first.then(&second).unwrap(), &d).unwrap();
        let stepwise = lift_laurent(&second, &direct_lift(&first, &d).unwrap()).unwrap();
        prop_assert_eq!(composed, stepwise);
    }

    #[test]
    fn unramified_post_composition_is_invisible(
        (rows, extra) in (2usize..=3).prop_flat_map(|n| (matrix(n, 3), matrix(n, 2))),
        j in 0usize..3,
    ) {
        let n = rows.len();
        let j = j % n;
        let (src, mid, tgt) = rings(n);
        let map = MonomialMap::new(&src, &mid, rows).unwrap();
        // Column j of the second map is e_j: x_j vanishes to order one along z_j only.
        let mut next = extra;
        for (r, row) in next.iter_mut().enumerate() {
            row[j] = u32::from(r == j);
        }
        prop_assume!(invertible(&next));
        let next = MonomialMap::new(&mid, &tgt, next).unwrap();
        let composed = map.then(&next).unwrap();
        let before = chart_liftable(&map, &[j], opts()).unwrap();
        let after = chart_liftable(&composed, &[j], opts()).unwrap();
        prop_assert!(before.module.equals(&after.module));
    }
}

#[test]
fn blowup_charts() {
    let (src, tgt, _) = rings(2);
    for n in 1..=4u32 {
        let map = MonomialMap::new(&src, &tgt, vec![vec![1, 0], vec![n, 1]]).unwrap();
        let lift = chart_liftable(&map, &[0], opts()).unwrap();
        for k in 0..n {
            let d = GradedDerivation::monomial(&[k, 0], 1);
            assert!(!lifts_regularly(&map, &d, &[0]).unwrap());
            assert!(!lift.module.contains(&d));
        }
        let d = GradedDerivation::monomial(&[n, 0], 1);
        assert!(lifts_regularly(&map, &d, &[0]).unwrap());
        assert!(tangency_check(&map, &d, &[0]).unwrap());
    }
}

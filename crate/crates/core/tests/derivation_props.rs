mod common;

use common::{box_points, divisible, m_primary, small_ideal};
use liftlog_core::closures::{integral_closure, rr_closure, DEFAULT_N_MAX, DEFAULT_WINDOW};
use liftlog_core::derivation::{
    admissible_slots, staircase_t_2var, tangent_module, GradedDerivation, GradedOptions,
};
use liftlog_core::linalg::{nullspace, q, rank, Q};
use liftlog_core::MonomialIdeal;
use proptest::prelude::*;

fn opts() -> GradedOptions {
    GradedOptions::default()
}

/// `V_b` from every monomial of `I` in a box, rather than from generators.
fn brute_piece(ideal: &MonomialIdeal, b: &[i64], reach: u32) -> Vec<Vec<Q>> {
    let n = b.len();
    let Some(slots) = admissible_slots(b) else {
        return Vec::new();
    };
    let mut rows = Vec::new();
    for (i, ok) in slots.iter().enumerate() {
        if !ok {
            let mut e = vec![q(0); n];
            e[i] = q(1);
            rows.push(e);
        }
    }
    let upper: Vec<u32> = ideal.max_exponents().iter().map(|e| e + reach).collect();
    for a in box_points(&upper) {
        if !divisible(ideal, &a) {
            continue;
        }
        let target: Option<Vec<u32>> = a.iter().zip(b).map(|(&x, &y)| u32::try_from(i64::from(x) + y).ok()).collect();
        if !target.is_some_and(|t| divisible(ideal, &t)) {
            rows.push(a.iter().map(|&e| q(i64::from(e))).collect());
        }
    }
    nullspace(&rows, n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn generators_preserve_and_brackets_close(i in small_ideal(3, 4, 3)) {
        let t = tangent_module(&i, opts()).unwrap();
        for g in t.generators() {
            prop_assert!(g.preserves(&i));
        }
        for a in t.generators() {
            for b in t.generators() {
                if let Some(c) = a.bracket(b) {
                    prop_assert!(c.preserves(&i), "[{}, {}]", a.to_text(i.ctx()), b.to_text(i.ctx()));
                    prop_assert!(t.contains(&c));
                }
            }
        }
    }

    #[test]
    fn tangent_chain_on_closures(i in small_ideal(3, 4, 3)) {
        let t = tangent_module(&i, opts()).unwrap();
        let rr = rr_closure(&i, DEFAULT_N_MAX, DEFAULT_WINDOW).unwrap().closure;
        let bar = integral_closure(&i).unwrap();
        prop_assert!(t.is_submodule_of(&tangent_module(&rr, opts()).unwrap()));
        prop_assert!(t.is_submodule_of(&tangent_module(&bar, opts()).unwrap()));
    }

    #[test]
    fn staircase_formula_matches(i in m_primary(2, 8, 4)) {
        let t = tangent_module(&i, opts()).unwrap();
        prop_assert!(t.equals(&staircase_t_2var(&i).unwrap()), "{}", i);
    }

    #[test]
    fn graded_pieces_match_brute_force(i in small_ideal(2, 4, 3)) {
        let t = tangent_module(&i, opts()).unwrap();
        let upper = t.box_upper().to_vec();
        let n = upper.len();
        let mut b = vec![-1i64; n];
        loop {
            let brute = brute_piece(&i, &b, 2);
            let piece = t.graded_piece(&b);
            prop_assert_eq!(rank(&piece), brute.len(), "degree {:?}", b);
            let mut stacked = piece.clone();
            stacked.extend(brute.iter().cloned());
            prop_assert_eq!(rank(&stacked), brute.len(), "degree {:?}", b);
            let mut j = 0;
            while j < n {
                if b[j] < upper[j] {
                    b[j] += 1;
                    break;
                }
                b[j] = -1;
                j += 1;
            }
            if j == n {
                break;
            }
        }
    }

    #[test]
    fn bracket_is_antisymmetric(
        u in prop::collection::vec(0u32..4, 2),
        v in prop::collection::vec(0u32..4, 2),
        i in 0usize..2,
        j in 0usize..2,
    ) {
        let a = GradedDerivation::monomial(&u, i);
        let b = GradedDerivation::monomial(&v, j);
        match (a.bracket(&b), b.bracket(&a)) {
            (Some(x), Some(y)) => {
                let neg: Vec<Q> = y.coeffs().iter().map(|c| -c.clone()).collect();
                prop_assert_eq!(x.degree(), y.degree());
                prop_assert_eq!(x.coeffs(), neg.as_slice());
            }
            (None, None) => {}
            other => prop_assert!(false, "one-sided bracket {:?}", other.0.is_some()),
        }
    }
}

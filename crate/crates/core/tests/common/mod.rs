#![allow(dead_code)]

use liftlog_core::{MonomialIdeal, RingContext};
use proptest::prelude::*;

pub fn ring(n: usize) -> RingContext {
    let names = ["x", "y", "z", "w"];
    RingContext::new(&names[..n]).unwrap()
}

/// Nonzero proper ideals: every generator has positive degree.
pub fn proper_ideal(n: usize, max_exp: u32, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(prop::collection::vec(0..=max_exp, n), 1..=max_gens)
        .prop_filter("generators must be nonconstant", |gens| {
            gens.iter().all(|g| g.iter().any(|&e| e > 0))
        })
        .prop_map(move |gens| MonomialIdeal::new(&ring(n), gens).unwrap())
}

/// Proper ideals in one to `max_n` variables.
pub fn small_ideal(max_n: usize, max_exp: u32, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    (1..=max_n).prop_flat_map(move |n| proper_ideal(n, max_exp, max_gens))
}

/// Ideals containing a pure power of every variable.
pub fn m_primary(n: usize, max_exp: u32, extra: usize) -> impl Strategy<Value = MonomialIdeal> {
    (
        prop::collection::vec(1..=max_exp, n),
        prop::collection::vec(prop::collection::vec(0..=max_exp, n), 0..=extra),
    )
        .prop_map(move |(powers, mut gens)| {
            for (i, p) in powers.into_iter().enumerate() {
                let mut g = vec![0; n];
                g[i] = p;
                gens.push(g);
            }
            gens.retain(|g| g.iter().any(|&e| e > 0));
            MonomialIdeal::new(&ring(n), gens).unwrap()
        })
}

/// Squarefree monomial ideals.
pub fn squarefree(max_n: usize, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    (1..=max_n).prop_flat_map(move |n| proper_ideal(n, 1, max_gens))
}

/// Every point of `[0, upper]`.
pub fn box_points(upper: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for &u in upper {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=u).map(move |e| {
                    let mut q = p.clone();
                    q.push(e);
                    q
                })
            })
            .collect();
    }
    out
}

/// Divisibility by some generator, independent of the library's membership.
pub fn divisible(ideal: &MonomialIdeal, a: &[u32]) -> bool {
    ideal.gens().iter().any(|g| g.iter().zip(a).all(|(x, y)| x <= y))
}

//! Integral closure by lattice points of the Newton polyhedron, and a
//! power-membership oracle used to cross-check it.

use crate::closures::newton::newton_polyhedron;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::ring::ExponentVector;

/// `Ī`: minimal lattice points of `NP(I)` inside the generator bounding box.
pub fn integral_closure(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Ok(ideal.clone());
    }
    let np = newton_polyhedron(ideal)?;
    let upper = ideal.max_exponents();
    let mut points = Vec::new();
    for_each_in_box(&upper, |a| {
        if np.contains(a) {
            points.push(ExponentVector::from(a));
        }
    });
    Ok(MonomialIdeal::from_unchecked(ideal.ctx(), points))
}

/// Visits every point of `[0, upper]` (componentwise).
pub(crate) fn for_each_in_box(upper: &[u32], mut f: impl FnMut(&[u32])) {
    let mut cur = vec![0u32; upper.len()];
    loop {
        f(&cur);
        let mut i = 0;
        loop {
            if i == cur.len() {
                return;
            }
            if cur[i] < upper[i] {
                cur[i] += 1;
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}

/// `n! * (max exponent) * 4`, the search depth used for cross-checks.
pub fn default_oracle_bound(ideal: &MonomialIdeal) -> usize {
    let n = ideal.ctx().n();
    let fact: usize = (1..=n).product();
    fact * (ideal.max_degree().max(1) as usize) * 4
}

/// Whether `x^{k a} ∈ I^k` for some `1 <= k <= k_max`.
///
/// Searches sums of generator shifts `g - a` without ever forming `I^k`:
/// `k a ∈ I^k` iff some `k` generators have `sum (g - a) <= 0`. Only the
/// Pareto-minimal partial sums are kept, sums that can no longer reach the
/// negative orthant are dropped, and coordinates that can no longer turn
/// positive are clamped so equivalent states merge.
pub fn integral_member_oracle(ideal: &MonomialIdeal, a: &[u32], k_max: usize) -> bool {
    let n = a.len();
    if ideal.is_zero() || ideal.ctx().n() != n || k_max == 0 {
        return false;
    }
    let steps: Vec<Vec<i64>> = ideal
        .gens()
        .iter()
        .map(|g| g.iter().zip(a).map(|(&gi, &ai)| i64::from(gi) - i64::from(ai)).collect())
        .collect();
    if steps.iter().any(|s| s.iter().all(|&x| x <= 0)) {
        return true;
    }
    let down: Vec<i64> = (0..n).map(|i| steps.iter().map(|s| (-s[i]).max(0)).max().unwrap_or(0)).collect();
    let up: Vec<i64> = (0..n).map(|i| steps.iter().map(|s| s[i].max(0)).max().unwrap_or(0)).collect();
    if (0..n).any(|i| steps.iter().all(|s| s[i] > 0)) {
        return false;
    }
    let k_max = k_max as i64;
    let mut frontier: Vec<Vec<i64>> = vec![vec![0; n]];
    for k in 1..=k_max {
        let remaining = k_max - k;
        let mut next: Vec<Vec<i64>> = Vec::new();
        for s in &frontier {
            'step: for st in &steps {
                let mut t = Vec::with_capacity(n);
                for i in 0..n {
                    let v = s[i] + st[i];
                    if v > remaining * down[i] {
                        continue 'step;
                    }
                    t.push(v.max(-remaining * up[i]));
                }
                if t.iter().all(|&v| v <= 0) {
                    return true;
                }
                next.push(t);
            }
        }
        frontier = pareto_minimal(next);
        if frontier.is_empty() {
            return false;
        }
    }
    false
}

fn pareto_minimal(mut pts: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    pts.sort_unstable_by_key(|p| p.iter().sum::<i64>());
    pts.dedup();
    let mut kept: Vec<Vec<i64>> = Vec::with_capacity(pts.len());
    for p in pts {
        if !kept.iter().any(|k| k.iter().zip(&p).all(|(x, y)| x <= y)) {
            kept.push(p);
        }
    }
    kept
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingContext;

    fn ideal(gens: &[&[u32]]) -> MonomialIdeal {
        let r = RingContext::new(&["x", "y"]).unwrap();
        MonomialIdeal::new(&r, gens.iter().map(|g| g.to_vec())).unwrap()
    }

    #[test]
    fn closure_examples() {
        let i = ideal(&[&[10, 0], &[8, 1], &[1, 4], &[0, 5]]);
        let expected = ideal(&[&[10, 0], &[8, 1], &[6, 2], &[4, 3], &[1, 4], &[0, 5]]);
        assert_eq!(integral_closure(&i).unwrap(), expected);
        let m = ideal(&[&[1, 0], &[0, 1]]);
        assert_eq!(integral_closure(&m).unwrap(), m);
        assert_eq!(
            integral_closure(&ideal(&[&[2, 0], &[0, 2]])).unwrap(),
            ideal(&[&[2, 0], &[1, 1], &[0, 2]])
        );
    }

    #[test]
    fn oracle_examples() {
        assert!(integral_member_oracle(&ideal(&[&[2, 0], &[0, 2]]), &[1, 1], 2));
        assert!(!integral_member_oracle(&ideal(&[&[1, 0], &[0, 1]]), &[0, 0], 30));
        let i = ideal(&[&[10, 0], &[8, 1], &[1, 4], &[0, 5]]);
        assert!(integral_member_oracle(&i, &[6, 2], 8));
        assert!(!integral_member_oracle(&i, &[5, 2], 40));
    }

    #[test]
    fn oracle_matches_explicit_powers() {
        let i = ideal(&[&[5, 0], &[3, 1], &[0, 4]]);
        for a0 in 0..=5 {
            for a1 in 0..=4 {
                let a = [a0, a1];
                let explicit = (1..=6u32).any(|k| i.power(k).contains(&[a0 * k, a1 * k]));
                assert_eq!(integral_member_oracle(&i, &a, 6), explicit, "{a:?}");
            }
        }
    }

    #[test]
    fn box_iteration_covers_everything() {
        let mut count = 0;
        for_each_in_box(&[2, 0, 3], |_| count += 1);
        assert_eq!(count, 12);
    }
}

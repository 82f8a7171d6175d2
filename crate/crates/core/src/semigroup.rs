//! Numerical semigroup rings `Q[t^S]`: ideals, colon ideals, Ratliff-Rush
//! closure and the sets of orders `k` for which `t^k ∂t` preserves an ideal.
//!
//! Every object here is a subset of the integers closed under adding `S`,
//! so it is described by finitely many generators and is cofinite.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    gens: Vec<i64>,
    frobenius: i64,
    /// `member[s]` for `0 <= s <= frobenius + 1`.
    member: Vec<bool>,
}

impl NumericalSemigroup {
    pub fn new(gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::InvalidSemigroup("no generators".into()));
        }
        if let Some(g) = gens.iter().find(|&&g| g <= 0) {
            return Err(Error::InvalidSemigroup(format!("generator {g} is not positive")));
        }
        if gens.iter().fold(0i64, |acc, &g| acc.gcd(&g)) != 1 {
            return Err(Error::InvalidSemigroup("generators must have gcd 1".into()));
        }
        let smallest = *gens.iter().min().expect("nonempty");
        // Grow the table until `smallest` consecutive members appear.
        let mut member = vec![true];
        let mut run = 1;
        let mut s = 0usize;
        while run < smallest {
            s += 1;
            let hit = gens.iter().any(|&g| s as i64 >= g && member[s - g as usize]);
            member.push(hit);
            run = if hit { run + 1 } else { 0 };
        }
        let frobenius = member.iter().rposition(|&m| !m).map_or(-1, |p| p as i64);
        member.truncate((frobenius + 2) as usize);
        let mut minimal: Vec<i64> = gens.to_vec();
        minimal.sort_unstable();
        minimal.dedup();
        let candidates = minimal.clone();
        minimal.retain(|&g| !expressible(g, &candidates, g));
        Ok(Self {
            gens: minimal,
            frobenius,
            member,
        })
    }

    /// The semigroup of all nonnegative integers.
    pub fn naturals() -> Self {
        Self::new(&[1]).expect("valid")
    }

    pub fn generators(&self) -> &[i64] {
        &self.gens
    }

    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn contains(&self, s: i64) -> bool {
        if s < 0 {
            false
        } else if s > self.frobenius {
            true
        } else {
            self.member[s as usize]
        }
    }

    /// Elements up to and including the Frobenius number.
    pub fn small_elements(&self) -> Vec<i64> {
        (0..=self.frobenius.max(0)).filter(|&s| self.contains(s)).collect()
    }

    /// `S = N`, the only regular case.
    pub fn is_regular(&self) -> bool {
        self.frobenius < 0
    }
}

/// Whether `g` is a sum of elements of `gens` other than `g` itself.
fn expressible(g: i64, gens: &[i64], exclude: i64) -> bool {
    let mut reach = vec![false; g as usize + 1];
    reach[0] = true;
    for s in 1..=g as usize {
        reach[s] = gens
            .iter()
            .filter(|&&h| h != exclude && h as usize <= s)
            .any(|&h| reach[s - h as usize]);
    }
    reach[g as usize]
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", join(&self.gens))
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", join(&self.gens))
    }
}

fn join(xs: &[i64]) -> String {
    xs.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

/// `∪ (e + S)` over finitely many shifts `e >= 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SemigroupIdeal {
    sgr: NumericalSemigroup,
    gens: Vec<i64>,
}

impl SemigroupIdeal {
    pub fn new(sgr: &NumericalSemigroup, gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptySemigroupIdeal);
        }
        if let Some(e) = gens.iter().find(|&&e| e < 0) {
            return Err(Error::InvalidArgument(format!("negative shift {e}")));
        }
        Ok(Self::canonical(sgr, gens.to_vec()))
    }

    fn canonical(sgr: &NumericalSemigroup, mut gens: Vec<i64>) -> Self {
        gens.sort_unstable();
        gens.dedup();
        let mut kept: Vec<i64> = Vec::new();
        for e in gens {
            if !kept.iter().any(|&k| sgr.contains(e - k)) {
                kept.push(e);
            }
        }
        Self { sgr: sgr.clone(), gens: kept }
    }

    /// The unit ideal `S` itself.
    pub fn unit(sgr: &NumericalSemigroup) -> Self {
        Self::canonical(sgr, vec![0])
    }

    /// `S \ {0}`.
    pub fn maximal(sgr: &NumericalSemigroup) -> Self {
        Self::canonical(sgr, sgr.gens.clone())
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.sgr
    }

    pub fn generators(&self) -> &[i64] {
        &self.gens
    }

    pub fn contains(&self, m: i64) -> bool {
        self.gens.iter().any(|&e| self.sgr.contains(m - e))
    }

    /// Smallest `T` with every integer `>= T` in the set.
    pub fn threshold(&self) -> i64 {
        let mut t = self.gens[0] + self.sgr.frobenius + 1;
        while t > 0 && self.contains(t - 1) {
            t -= 1;
        }
        t
    }

    /// Members below the threshold.
    pub fn exceptions(&self) -> Vec<i64> {
        (0..self.threshold()).filter(|&m| self.contains(m)).collect()
    }

    pub fn is_subset_of(&self, other: &SemigroupIdeal) -> bool {
        self.gens.iter().all(|&e| other.contains(e))
    }

    fn check_same(&self, other: &SemigroupIdeal) -> Result<()> {
        if self.sgr == other.sgr {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn product(&self, other: &SemigroupIdeal) -> Result<Self> {
        self.check_same(other)?;
        let sums = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a + b))
            .collect();
        Ok(Self::canonical(&self.sgr, sums))
    }

    pub fn power(&self, k: u32) -> Self {
        let mut acc = Self::unit(&self.sgr);
        for _ in 0..k {
            acc = acc.product(self).expect("same semigroup");
        }
        acc
    }

    /// `[self : other] = { s ∈ S : s + f ∈ self for every generator f }`.
    pub fn quotient(&self, other: &SemigroupIdeal) -> Result<Self> {
        self.check_same(other)?;
        // Past the threshold of `self` every shift lands inside.
        let bound = self.threshold().max(self.sgr.frobenius + 1);
        let members: Vec<i64> = (0..=bound)
            .filter(|&s| self.sgr.contains(s) && other.gens.iter().all(|&f| self.contains(s + f)))
            .collect();
        Ok(Self::canonical(&self.sgr, members))
    }
}

impl fmt::Debug for SemigroupIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.gens))
    }
}

impl fmt::Display for SemigroupIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .gens
            .iter()
            .map(|&e| match e {
                0 => "1".to_string(),
                1 => "t".to_string(),
                _ => format!("t^{e}"),
            })
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Quotient report for the semigroup Ratliff-Rush iteration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SgrRRReport {
    pub closure: SemigroupIdeal,
    pub stabilized_at: usize,
    pub checked_window: usize,
    pub power_check_passed: bool,
    pub powers_agree_from: Option<usize>,
}

pub fn sgr_quotient(e: &SemigroupIdeal, f: &SemigroupIdeal) -> Result<SemigroupIdeal> {
    e.quotient(f)
}

/// Stable value of `[E^{n+1} : E^n]`, with the same window and power check
/// as the polynomial version.
pub fn sgr_rr_closure(e: &SemigroupIdeal, n_max: usize, window: usize) -> Result<SgrRRReport> {
    if window == 0 || n_max < window {
        return Err(Error::InvalidArgument(format!(
            "need n_max >= window >= 1, got n_max = {n_max}, window = {window}"
        )));
    }
    let mut lower = e.clone();
    let mut upper = e.product(e)?;
    let mut quotients: Vec<SemigroupIdeal> = Vec::new();
    for n in 1..=n_max {
        quotients.push(upper.quotient(&lower)?);
        let tail = &quotients[quotients.len().saturating_sub(window)..];
        if tail.len() == window && tail.iter().all(|q| q == &tail[0]) {
            let start = n + 1 - window;
            let closure = tail[0].clone();
            let powers_agree_from = first_agreeing_power(e, &closure, start, start + n_max);
            return Ok(SgrRRReport {
                closure,
                stabilized_at: start,
                checked_window: window,
                power_check_passed: powers_agree_from.is_some(),
                powers_agree_from,
            });
        }
        lower = upper;
        upper = lower.product(e)?;
    }
    Err(Error::NoStabilization { n_max })
}

fn first_agreeing_power(e: &SemigroupIdeal, closure: &SemigroupIdeal, from: usize, to: usize) -> Option<usize> {
    let mut run = 0;
    for m in from..to + 3 {
        let m32 = u32::try_from(m).ok()?;
        if closure.power(m32) == e.power(m32) {
            run += 1;
            if run == 3 {
                return Some(m - 2);
            }
        } else {
            run = 0;
            if m > to {
                return None;
            }
        }
    }
    None
}

/// Orders `k` with `t^k ∂t` in a derivation module of `Q[t^S]`.
#[derive(Clone, PartialEq, Eq)]
pub struct OrderSet {
    orders: SemigroupIdeal,
}

impl OrderSet {
    pub fn contains(&self, k: i64) -> bool {
        self.orders.contains(k)
    }

    /// Minimal `k` generating the set as an `S`-module.
    pub fn generators(&self) -> &[i64] {
        self.orders.generators()
    }

    pub fn threshold(&self) -> i64 {
        self.orders.threshold()
    }

    pub fn exceptions(&self) -> Vec<i64> {
        self.orders.exceptions()
    }

    pub fn min_order(&self) -> i64 {
        self.orders.generators()[0]
    }

    pub fn as_ideal(&self) -> &SemigroupIdeal {
        &self.orders
    }
}

impl fmt::Debug for OrderSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}} + S", join(self.generators()))
    }
}

impl fmt::Display for OrderSet {
    /// `A*t∂t + A*t^2∂t` style.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .generators()
            .iter()
            .map(|&k| match k {
                0 => "A*∂t".to_string(),
                1 => "A*t∂t".to_string(),
                _ => format!("A*t^{k}∂t"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `T(E)`: all `k >= 0` such that `t^k ∂t` maps `Q[t^S]` and `E` into themselves.
///
/// `t^k ∂t (t^s) = s t^{s + k - 1}`, so a shift `s = 0` imposes nothing.
pub fn sgr_tangent(e: &SemigroupIdeal) -> Result<OrderSet> {
    let sgr = &e.sgr;
    let bound = e.threshold() + sgr.frobenius + 2;
    let orders: Vec<i64> = (0..=bound)
        .filter(|&k| {
            sgr.gens.iter().all(|&s| sgr.contains(s + k - 1))
                && e.gens.iter().filter(|&&g| g != 0).all(|&g| e.contains(g + k - 1))
        })
        .collect();
    if orders.is_empty() {
        return Err(Error::InvalidArgument("no derivation order found below the scan bound".into()));
    }
    Ok(OrderSet {
        orders: SemigroupIdeal::canonical(sgr, orders),
    })
}

/// `T(Q[t^S])`, the derivations of the ring itself.
pub fn sgr_tangent_ring(sgr: &NumericalSemigroup) -> OrderSet {
    sgr_tangent(&SemigroupIdeal::unit(sgr)).expect("t∂t always preserves the ring")
}

pub fn sgr_is_regular(sgr: &NumericalSemigroup) -> bool {
    sgr.is_regular()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s4567() -> NumericalSemigroup {
        NumericalSemigroup::new(&[4, 5, 6, 7]).unwrap()
    }

    #[test]
    fn semigroup_basics() {
        let s = s4567();
        assert_eq!(s.frobenius(), 3);
        assert_eq!(s.small_elements(), vec![0]);
        assert!(!s.contains(3) && s.contains(4) && s.contains(100));
        let s23 = NumericalSemigroup::new(&[2, 3, 5]).unwrap();
        assert_eq!(s23.generators(), &[2, 3]);
        assert_eq!(s23.frobenius(), 1);
        assert!(NumericalSemigroup::new(&[2, 4]).is_err());
        assert!(NumericalSemigroup::new(&[]).is_err());
        assert_eq!(NumericalSemigroup::naturals().frobenius(), -1);
    }

    #[test]
    fn colon_ideals_of_the_example() {
        let s = s4567();
        let i = SemigroupIdeal::new(&s, &[4, 5]).unwrap();
        let m = SemigroupIdeal::maximal(&s);
        assert_eq!(i.power(2).generators(), &[8, 9, 10]);
        assert_eq!(i.power(2).quotient(&i).unwrap(), i);
        assert_eq!(i.power(3).quotient(&i.power(2)).unwrap(), m);
        assert_eq!(i.quotient(&i).unwrap(), SemigroupIdeal::unit(&s));
        let rr = sgr_rr_closure(&i, 20, 2).unwrap();
        assert_eq!(rr.closure, m);
        assert!(rr.power_check_passed);
        assert_eq!(sgr_rr_closure(&m, 20, 2).unwrap().closure, m);
        let n = NumericalSemigroup::naturals();
        let one = SemigroupIdeal::new(&n, &[1]).unwrap();
        assert_eq!(sgr_rr_closure(&one, 20, 2).unwrap().closure, one);
    }

    #[test]
    fn tangent_order_sets() {
        let s = s4567();
        let i = SemigroupIdeal::new(&s, &[4, 5]).unwrap();
        let t_i = sgr_tangent(&i).unwrap();
        assert_eq!(t_i.generators(), &[1]);
        assert!(!t_i.contains(2));
        let t_m = sgr_tangent(&SemigroupIdeal::maximal(&s)).unwrap();
        assert_eq!(t_m.generators(), &[1, 2, 3, 4]);
        assert_eq!(t_m.threshold(), 1);
        assert_eq!(sgr_tangent_ring(&s), t_m);
        assert_eq!(sgr_tangent_ring(&NumericalSemigroup::naturals()).generators(), &[0]);
        let s23 = NumericalSemigroup::new(&[2, 3]).unwrap();
        assert_eq!(sgr_tangent_ring(&s23).generators(), &[1, 2]);
        assert_eq!(t_i.to_string(), "A*t∂t");
    }

    #[test]
    fn regularity() {
        assert!(!sgr_is_regular(&s4567()));
        assert!(sgr_is_regular(&NumericalSemigroup::naturals()));
        let s23 = NumericalSemigroup::new(&[2, 3]).unwrap();
        assert!(!sgr_is_regular(&s23));
        assert!(!sgr_tangent_ring(&s23).contains(0));
    }

    #[test]
    fn threshold_and_exceptions() {
        let s = s4567();
        let i = SemigroupIdeal::new(&s, &[4, 5]).unwrap();
        assert_eq!(i.threshold(), 8);
        assert_eq!(i.exceptions(), vec![4, 5]);
        assert_eq!(i.to_string(), "(t^4, t^5)");
    }
}

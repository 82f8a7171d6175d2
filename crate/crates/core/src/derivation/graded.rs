//! Homogeneous derivations `sum_i c_i x^{b + e_i} ∂_i` of a fixed multidegree `b`.

use std::fmt::Write as _;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::linalg::{dot_q, format_q, is_zero_vec, Q};
use crate::ring::RingContext;

/// Slots `i` for which `x^{b + e_i}` is a monomial, or `None` when no slot is.
pub fn admissible_slots(b: &[i64]) -> Option<Vec<bool>> {
    let negative: Vec<usize> = (0..b.len()).filter(|&i| b[i] < 0).collect();
    if negative.iter().any(|&i| b[i] < -1) {
        return None;
    }
    match negative.as_slice() {
        [] => Some(vec![true; b.len()]),
        [j] => Some((0..b.len()).map(|i| i == *j).collect()),
        _ => None,
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GradedDerivation {
    degree: Vec<i64>,
    coeffs: Vec<Q>,
}

impl GradedDerivation {
    pub fn new(degree: Vec<i64>, coeffs: Vec<Q>) -> Result<Self> {
        if degree.len() != coeffs.len() {
            return Err(Error::DimensionMismatch {
                expected: degree.len(),
                found: coeffs.len(),
            });
        }
        if degree.iter().any(|&e| e < -1) {
            return Err(Error::InvalidDerivation(format!("degree {degree:?} has an entry below -1")));
        }
        if is_zero_vec(&coeffs) {
            return Err(Error::InvalidDerivation("all coefficients are zero".into()));
        }
        let slots = admissible_slots(&degree).unwrap_or_else(|| vec![false; degree.len()]);
        if let Some(i) = (0..coeffs.len()).find(|&i| !slots[i] && !coeffs[i].is_zero()) {
            return Err(Error::InvalidDerivation(format!(
                "slot {i} of degree {degree:?} would carry a negative exponent"
            )));
        }
        Ok(Self { degree, coeffs })
    }

    pub(crate) fn new_unchecked(degree: Vec<i64>, coeffs: Vec<Q>) -> Self {
        debug_assert!(Self::new(degree.clone(), coeffs.clone()).is_ok());
        Self { degree, coeffs }
    }

    /// The monomial derivation `x^u ∂_i`.
    pub fn monomial(u: &[u32], i: usize) -> Self {
        let mut degree: Vec<i64> = u.iter().map(|&e| i64::from(e)).collect();
        degree[i] -= 1;
        let mut coeffs = vec![Q::zero(); u.len()];
        coeffs[i] = Q::one();
        Self { degree, coeffs }
    }

    pub fn n(&self) -> usize {
        self.degree.len()
    }

    pub fn degree(&self) -> &[i64] {
        &self.degree
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    /// `d(x^a) = (c . a) x^{a + b}`, or `None` when the image is zero.
    pub fn apply(&self, a: &[u32]) -> Option<(Q, Vec<u32>)> {
        let a_q: Vec<Q> = a.iter().map(|&e| Q::from_integer(e.into())).collect();
        let value = dot_q(&self.coeffs, &a_q);
        if value.is_zero() {
            return None;
        }
        let exponent = a
            .iter()
            .zip(&self.degree)
            .map(|(&ai, &bi)| u32::try_from(i64::from(ai) + bi).expect("nonzero image is a monomial"))
            .collect();
        Some((value, exponent))
    }

    /// `d(I) ⊆ I`; checking the minimal generators is enough by the Leibniz rule.
    pub fn preserves(&self, ideal: &MonomialIdeal) -> bool {
        ideal
            .gens()
            .iter()
            .all(|a| self.apply(a).is_none_or(|(_, e)| ideal.contains(&e)))
    }

    /// Multiply by `x^u`.
    pub fn shift(&self, u: &[u32]) -> Self {
        Self {
            degree: self.degree.iter().zip(u).map(|(&b, &e)| b + i64::from(e)).collect(),
            coeffs: self.coeffs.clone(),
        }
    }

    /// Lie bracket `[self, other]`, homogeneous of degree `b1 + b2`.
    pub fn bracket(&self, other: &GradedDerivation) -> Option<GradedDerivation> {
        let b1: Vec<Q> = self.degree.iter().map(|&e| Q::from_integer(e.into())).collect();
        let b2: Vec<Q> = other.degree.iter().map(|&e| Q::from_integer(e.into())).collect();
        let s = dot_q(&self.coeffs, &b2);
        let t = dot_q(&other.coeffs, &b1);
        let coeffs: Vec<Q> = other
            .coeffs
            .iter()
            .zip(&self.coeffs)
            .map(|(c2, c1)| &s * c2 - &t * c1)
            .collect();
        if is_zero_vec(&coeffs) {
            return None;
        }
        let degree: Vec<i64> = self.degree.iter().zip(&other.degree).map(|(a, b)| a + b).collect();
        Some(Self::new(degree, coeffs).expect("bracket of derivations is a derivation"))
    }

    /// Text form such as `x*d_x - y*d_y` or `2/3*y^3*d_x`.
    pub fn to_text(&self, ctx: &RingContext) -> String {
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut exp = self.degree.clone();
            exp[i] += 1;
            let mono = ctx.format_signed_monomial(&exp);
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            if !mag.is_one() {
                let _ = write!(out, "{}*", format_q(&mag));
            }
            if mono != "1" {
                let _ = write!(out, "{mono}*");
            }
            let _ = write!(out, "d_{}", ctx.name(i));
        }
        out
    }
}

impl std::fmt::Debug for GradedDerivation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let coeffs: Vec<String> = self.coeffs.iter().map(format_q).collect();
        write!(f, "deg {:?} coeffs [{}]", self.degree, coeffs.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    fn d(b: &[i64], c: &[i64]) -> GradedDerivation {
        GradedDerivation::new(b.to_vec(), c.iter().map(|&x| q(x)).collect()).unwrap()
    }

    #[test]
    fn apply_examples() {
        assert_eq!(d(&[-1, 3], &[1, 0]).apply(&[10, 0]), Some((q(10), vec![9, 3])));
        assert_eq!(d(&[0, 0], &[1, -1]).apply(&[1, 1]), None);
        assert_eq!(d(&[0, -1], &[0, 1]).apply(&[1, 0]), None);
    }

    #[test]
    fn preserves_examples() {
        let r = RingContext::new(&["x", "y"]).unwrap();
        let i = MonomialIdeal::new(&r, [[10u32, 0], [8, 1], [1, 4], [0, 5]]).unwrap();
        assert!(d(&[-1, 3], &[1, 0]).preserves(&i));
        assert!(!d(&[-1, 2], &[1, 0]).preserves(&i));
        assert!(d(&[-1, 0], &[1, 0]).preserves(&MonomialIdeal::unit(&r)));
    }

    #[test]
    fn rejects_malformed_degrees() {
        assert!(GradedDerivation::new(vec![-1, 0], vec![q(0), q(1)]).is_err());
        assert!(GradedDerivation::new(vec![-2, 0], vec![q(1), q(0)]).is_err());
        assert!(GradedDerivation::new(vec![0, 0], vec![q(0), q(0)]).is_err());
        assert!(GradedDerivation::new(vec![-1, -1], vec![q(1), q(0)]).is_err());
    }

    #[test]
    fn bracket_of_monomial_fields() {
        // [∂x, x∂y] = ∂y
        let dx = d(&[-1, 0], &[1, 0]);
        let xdy = d(&[1, -1], &[0, 1]);
        assert_eq!(dx.bracket(&xdy), Some(d(&[0, -1], &[0, 1])));
        // [y∂x, x∂y] = y∂y - x∂x
        let ydx = d(&[-1, 1], &[1, 0]);
        assert_eq!(ydx.bracket(&xdy), Some(d(&[0, 0], &[-1, 1])));
        assert_eq!(dx.bracket(&dx), None);
    }

    #[test]
    fn text_form() {
        let r = RingContext::new(&["x", "y"]).unwrap();
        assert_eq!(d(&[0, 0], &[1, -1]).to_text(&r), "x*d_x - y*d_y");
        assert_eq!(d(&[-1, 3], &[1, 0]).to_text(&r), "y^3*d_x");
        assert_eq!(d(&[0, -1], &[0, 1]).to_text(&r), "d_y");
        let half = GradedDerivation::new(vec![1, -1], vec![q(0), Q::new(2.into(), 3.into())]).unwrap();
        assert_eq!(half.to_text(&r), "2/3*x*d_y");
    }
}

//! Ring contexts and exponent vectors for `Q[x_1, ..., x_n]`.

use std::collections::HashSet;
use std::fmt;
use std::ops::Deref;
use std::sync::Arc;

use crate::error::{Error, Result};

/// The ambient polynomial ring: an ordered list of distinct variable names.
///
/// Cloning is cheap; the names are shared.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RingContext {
    names: Arc<[String]>,
}

impl RingContext {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::InvalidRing("a ring needs at least one variable".into()));
        }
        let mut seen = HashSet::new();
        for name in names {
            let name = name.as_ref();
            if !is_identifier(name) {
                return Err(Error::InvalidRing(format!("`{name}` is not a valid variable name")));
            }
            if !seen.insert(name) {
                return Err(Error::InvalidRing(format!("variable `{name}` declared twice")));
            }
        }
        Ok(Self {
            names: names.iter().map(|s| s.as_ref().to_string()).collect(),
        })
    }

    /// `x_1, ..., x_n` style ring, handy in tests.
    pub fn with_prefix(prefix: &str, n: usize) -> Result<Self> {
        let names: Vec<String> = (1..=n).map(|i| format!("{prefix}{i}")).collect();
        Self::new(&names)
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub(crate) fn check_len(&self, len: usize) -> Result<()> {
        if len == self.n() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.n(),
                found: len,
            })
        }
    }

    pub(crate) fn check_same(&self, other: &RingContext) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// Renders `x^a` as `x^10*y`, or `1` for the zero exponent.
    pub fn format_monomial(&self, a: &[u32]) -> String {
        self.format_signed_monomial(&a.iter().map(|&e| i64::from(e)).collect::<Vec<_>>())
    }

    /// Like [`format_monomial`](Self::format_monomial) but allows negative (Laurent) exponents.
    pub fn format_signed_monomial(&self, a: &[i64]) -> String {
        let parts: Vec<String> = a
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, &e)| {
                if e == 1 {
                    self.names[i].clone()
                } else {
                    format!("{}^{}", self.names[i], e)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Debug for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ring {}", self.names.join(", "))
    }
}

impl fmt::Display for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ring {};", self.names.join(", "))
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Exponent of a monomial `x^a`, a point of `N^n`.
///
/// The derived ordering is lexicographic; canonical generator lists use the
/// reverse of it.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(entries: Vec<u32>) -> Self {
        Self(entries)
    }

    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        Self(v)
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    /// `self` divides `other`, i.e. `self <= other` componentwise.
    pub fn divides(&self, other: &[u32]) -> bool {
        self.0.iter().zip(other).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &[u32]) -> Self {
        Self(self.0.iter().zip(other).map(|(a, b)| a + b).collect())
    }

    pub fn lcm(&self, other: &[u32]) -> Self {
        Self(self.0.iter().zip(other).map(|(&a, &b)| a.max(b)).collect())
    }

    /// `max(self - other, 0)`, the exponent of `x^self : x^other`.
    pub fn saturating_sub(&self, other: &[u32]) -> Self {
        Self(self.0.iter().zip(other).map(|(&a, &b)| a.saturating_sub(b)).collect())
    }

    pub fn scale(&self, k: u32) -> Self {
        Self(self.0.iter().map(|&a| a * k).collect())
    }

    pub fn support(&self) -> Self {
        Self(self.0.iter().map(|&a| u32::from(a > 0)).collect())
    }

    pub fn to_i64(&self) -> Vec<i64> {
        self.0.iter().map(|&a| i64::from(a)).collect()
    }

    pub fn into_inner(self) -> Vec<u32> {
        self.0
    }
}

impl Deref for ExponentVector {
    type Target = [u32];

    fn deref(&self) -> &[u32] {
        &self.0
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        Self(v)
    }
}

impl From<&[u32]> for ExponentVector {
    fn from(v: &[u32]) -> Self {
        Self(v.to_vec())
    }
}

impl<const N: usize> From<[u32; N]> for ExponentVector {
    fn from(v: [u32; N]) -> Self {
        Self(v.to_vec())
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

pub(crate) fn dot_u(w: &[i64], a: &[u32]) -> i64 {
    w.iter().zip(a).map(|(x, &y)| x * i64::from(y)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicate_and_empty_rings() {
        assert!(RingContext::new(&["x", "x"]).is_err());
        assert!(RingContext::new::<&str>(&[]).is_err());
        assert!(RingContext::new(&["1x"]).is_err());
        assert_eq!(RingContext::new(&["x", "y"]).unwrap().n(), 2);
    }

    #[test]
    fn monomial_formatting() {
        let r = RingContext::new(&["x", "y"]).unwrap();
        assert_eq!(r.format_monomial(&[10, 0]), "x^10");
        assert_eq!(r.format_monomial(&[8, 1]), "x^8*y");
        assert_eq!(r.format_monomial(&[0, 0]), "1");
        assert_eq!(r.format_signed_monomial(&[-1, 2]), "x^-1*y^2");
    }
}

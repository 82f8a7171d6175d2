//! Newton polyhedra `conv(exponents) + R^n_{>=0}` and their facets.
//!
//! Two variables use a lower-hull sweep over the staircase. Higher
//! dimensions run the double description method on the cone of valid
//! inequalities `{ (w, d) : w.v >= d for every exponent v, w >= 0 }`, whose
//! extreme rays with `d > 0` are exactly the non-coordinate facets.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::ring::{dot_u, ExponentVector, RingContext};

/// Default cap on the number of variables for facet enumeration.
pub const DEFAULT_MAX_VARS: usize = 5;

/// The inequality `normal . a >= rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Facet {
    pub normal: Vec<i64>,
    pub rhs: i64,
}

impl Facet {
    pub fn holds(&self, a: &[u32]) -> bool {
        dot_u(&self.normal, a) >= self.rhs
    }

    pub fn is_tight(&self, a: &[u32]) -> bool {
        dot_u(&self.normal, a) == self.rhs
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolyhedron {
    ctx: RingContext,
    facets: Vec<Facet>,
}

impl NewtonPolyhedron {
    pub fn ctx(&self) -> &RingContext {
        &self.ctx
    }

    /// Facets with positive right-hand side, sorted by normal.
    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn contains(&self, a: &[u32]) -> bool {
        self.facets.iter().all(|f| f.holds(a))
    }
}

pub fn newton_polyhedron(ideal: &MonomialIdeal) -> Result<NewtonPolyhedron> {
    newton_polyhedron_with_cap(ideal, DEFAULT_MAX_VARS)
}

pub fn newton_polyhedron_with_cap(ideal: &MonomialIdeal, max_vars: usize) -> Result<NewtonPolyhedron> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let n = ideal.ctx().n();
    if n > max_vars {
        return Err(Error::TooManyVariables { n, cap: max_vars });
    }
    let mut facets = if n == 2 {
        staircase_facets(ideal.gens())
    } else {
        double_description_facets(ideal.gens(), n)
    };
    facets.sort();
    facets.dedup();
    Ok(NewtonPolyhedron {
        ctx: ideal.ctx().clone(),
        facets,
    })
}

fn primitive(normal: Vec<i64>, points: &[ExponentVector]) -> Facet {
    let g = normal.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    let normal: Vec<i64> = normal.into_iter().map(|x| x / g).collect();
    let rhs = points.iter().map(|p| dot_u(&normal, p)).min().unwrap_or(0);
    Facet { normal, rhs }
}

/// Lower hull of a two-variable staircase plus the two unbounded edges.
pub(crate) fn staircase_facets(gens: &[ExponentVector]) -> Vec<Facet> {
    let mut pts: Vec<(i64, i64)> = gens.iter().map(|g| (i64::from(g[0]), i64::from(g[1]))).collect();
    // Minimal generators: x strictly increasing means y strictly decreasing.
    pts.sort();
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for p in pts.iter().copied() {
        while hull.len() >= 2 {
            let o = hull[hull.len() - 2];
            let a = hull[hull.len() - 1];
            let cross = (a.0 - o.0) * (p.1 - o.1) - (a.1 - o.1) * (p.0 - o.0);
            if cross <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    let mut facets = Vec::new();
    for pair in hull.windows(2) {
        let (p, q) = (pair[0], pair[1]);
        facets.push(primitive(vec![p.1 - q.1, q.0 - p.0], gens));
    }
    let first = hull[0];
    let last = hull[hull.len() - 1];
    if first.0 > 0 {
        facets.push(primitive(vec![1, 0], gens));
    }
    if last.1 > 0 {
        facets.push(primitive(vec![0, 1], gens));
    }
    facets.retain(|f| f.rhs > 0);
    facets
}

/// Bitset over constraint indices.
#[derive(Clone, PartialEq, Eq)]
struct ZeroSet(Vec<u64>);

impl ZeroSet {
    fn new(len: usize) -> Self {
        Self(vec![0; len.div_ceil(64)])
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn and(&self, other: &ZeroSet) -> ZeroSet {
        ZeroSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn is_subset_of(&self, other: &ZeroSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
}

struct Ray {
    coords: Vec<BigInt>,
    zeros: ZeroSet,
}

fn bdot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn normalize(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
    v
}

/// Double description over the integers on the cone of valid inequalities.
pub(crate) fn double_description_facets(gens: &[ExponentVector], n: usize) -> Vec<Facet> {
    // Constraint rows on (w, d): w_i >= 0 for each i, then w.v - d >= 0 per point.
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n + gens.len());
    for i in 0..n {
        let mut r = vec![BigInt::zero(); n + 1];
        r[i] = BigInt::from(1);
        rows.push(r);
    }
    for g in gens {
        let mut r: Vec<BigInt> = g.iter().map(|&e| BigInt::from(e)).collect();
        r.push(BigInt::from(-1));
        rows.push(r);
    }
    let total = rows.len();

    // The first n + 1 rows form an invertible system; its inverse columns
    // are the initial extreme rays: (e_k, v0_k) and (0, -1).
    let v0 = &gens[0];
    let mut rays: Vec<Ray> = Vec::new();
    for k in 0..=n {
        let mut coords = vec![BigInt::zero(); n + 1];
        if k < n {
            coords[k] = BigInt::from(1);
            coords[n] = BigInt::from(v0[k]);
        } else {
            coords[n] = BigInt::from(-1);
        }
        let mut zeros = ZeroSet::new(total);
        for (idx, row) in rows.iter().enumerate().take(n + 1) {
            if bdot(row, &coords).is_zero() {
                zeros.insert(idx);
            }
        }
        rays.push(Ray { coords, zeros });
    }

    for idx in (n + 1)..total {
        let row = &rows[idx];
        let values: Vec<BigInt> = rays.iter().map(|r| bdot(row, &r.coords)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_negative()).collect();
        if neg.is_empty() {
            for (i, r) in rays.iter_mut().enumerate() {
                if values[i].is_zero() {
                    r.zeros.insert(idx);
                }
            }
            continue;
        }
        let mut next: Vec<Ray> = Vec::new();
        for &p in &pos {
            for &m in &neg {
                let common = rays[p].zeros.and(&rays[m].zeros);
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(k, r)| k == p || k == m || !common.is_subset_of(&r.zeros));
                if !adjacent {
                    continue;
                }
                let coords: Vec<BigInt> = rays[m]
                    .coords
                    .iter()
                    .zip(&rays[p].coords)
                    .map(|(cm, cp)| &values[p] * cm - &values[m] * cp)
                    .collect();
                let mut zeros = common;
                zeros.insert(idx);
                next.push(Ray {
                    coords: normalize(coords),
                    zeros,
                });
            }
        }
        for (i, mut r) in rays.into_iter().enumerate() {
            if values[i].is_negative() {
                continue;
            }
            if values[i].is_zero() {
                r.zeros.insert(idx);
            }
            next.push(r);
        }
        rays = next;
    }

    rays.into_iter()
        .filter(|r| r.coords[n].is_positive())
        .map(|r| {
            let normal: Vec<i64> = r.coords[..n]
                .iter()
                .map(|x| x.to_i64().expect("facet normal fits in i64"))
                .collect();
            primitive(normal, gens)
        })
        .filter(|f| f.rhs > 0)
        .collect()
}

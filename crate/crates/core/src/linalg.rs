//! Dense exact linear algebra over `Q` for the small systems that come up
//! in graded pieces (at most one column per variable).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn is_zero_vec(v: &[Q]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn dot_q(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

/// Reduced row echelon form; zero rows are dropped.
pub fn rref(mut rows: Vec<Vec<Q>>) -> Vec<Vec<Q>> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivot_row = 0;
    for col in 0..ncols {
        let Some(p) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, p);
        let inv = rows[pivot_row][col].recip();
        for x in rows[pivot_row].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot = rows[pivot_row].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == pivot_row || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot) {
                *x = &*x - &factor * p;
            }
        }
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    rows.truncate(pivot_row);
    rows.retain(|r| !is_zero_vec(r));
    rows
}

pub fn rank(rows: &[Vec<Q>]) -> usize {
    rref(rows.to_vec()).len()
}

/// Basis of `{ v : row . v = 0 for every row }` in `Q^ncols`, in echelon form.
pub fn nullspace(rows: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    let reduced = rref(rows.to_vec());
    let pivots: Vec<usize> = reduced
        .iter()
        .map(|r| r.iter().position(|x| !x.is_zero()).expect("nonzero row"))
        .collect();
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Q::zero(); ncols];
        v[free] = Q::one();
        for (row, &p) in reduced.iter().zip(&pivots) {
            v[p] = -row[free].clone();
        }
        basis.push(v);
    }
    rref(basis)
}

/// Whether `v` lies in the row space of `basis` (any spanning set).
pub fn in_span(basis: &[Vec<Q>], v: &[Q]) -> bool {
    if is_zero_vec(v) {
        return true;
    }
    let mut rows = basis.to_vec();
    let before = rank(&rows);
    rows.push(v.to_vec());
    rank(&rows) == before
}

/// Basis of the intersection of two row spaces in `Q^n`.
pub fn intersect(a: &[Vec<Q>], b: &[Vec<Q>], n: usize) -> Vec<Vec<Q>> {
    let a = rref(a.to_vec());
    let b = rref(b.to_vec());
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    // x = alpha . A lies in span(B) iff it is orthogonal to B^perp.
    let b_perp = nullspace(&b, n);
    if b_perp.is_empty() {
        return a;
    }
    let system: Vec<Vec<Q>> = b_perp
        .iter()
        .map(|p| a.iter().map(|row| dot_q(row, p)).collect())
        .collect();
    let alphas = nullspace(&system, a.len());
    let vectors = alphas
        .iter()
        .map(|alpha| {
            let mut x = vec![Q::zero(); n];
            for (coef, row) in alpha.iter().zip(&a) {
                for (xi, ri) in x.iter_mut().zip(row) {
                    *xi += coef * ri;
                }
            }
            x
        })
        .collect();
    rref(vectors)
}

/// Inverse of a square matrix, `None` when singular.
pub fn inverse(m: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut aug: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, p);
        let inv = aug[col][col].recip();
        for x in aug[col].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot = aug[col].clone();
        for (r, row) in aug.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let factor = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x = &*x - &factor * p;
                }
            }
        }
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Renders a rational as `p` or `p/q`.
pub fn format_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `p` or `p/q` (optionally signed).
pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Q::new(num, den))
}

/// Scales a rational vector to a primitive integer vector with the same direction
/// and a positive first nonzero entry.
pub fn primitive_integer(v: &[Q]) -> Vec<BigInt> {
    use num_integer::Integer;
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Q::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    let sign = ints.iter().find(|x| !x.is_zero()).map_or(BigInt::one(), |x| x.signum());
    ints.into_iter().map(|x| x / &g * &sign).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Q> {
        xs.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn nullspace_of_single_row() {
        let ns = nullspace(&[v(&[1, 1])], 2);
        assert_eq!(ns, vec![v(&[1, -1])]);
        assert_eq!(nullspace(&[], 2).len(), 2);
    }

    #[test]
    fn span_and_intersection() {
        let a = vec![v(&[1, 0, 0]), v(&[0, 1, 0])];
        let b = vec![v(&[0, 1, 1]), v(&[1, 0, 0])];
        assert!(in_span(&a, &v(&[2, 3, 0])));
        assert!(!in_span(&a, &v(&[0, 0, 1])));
        assert_eq!(intersect(&a, &b, 3), vec![v(&[1, 0, 0])]);
    }

    #[test]
    fn inverse_of_chart_matrix() {
        let m = vec![v(&[1, 0]), v(&[2, 1])];
        assert_eq!(inverse(&m).unwrap(), vec![v(&[1, 0]), v(&[-2, 1])]);
        assert!(inverse(&[v(&[1, 2]), v(&[2, 4])]).is_none());
    }

    #[test]
    fn rational_text() {
        assert_eq!(format_q(&parse_q("-6/4").unwrap()), "-3/2");
        assert_eq!(format_q(&q(7)), "7");
        assert!(parse_q("1/0").is_none());
    }
}

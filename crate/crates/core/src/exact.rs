//! Exact rational and integer linear algebra.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn from_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Nearest-double conversion of a rational.
pub fn to_f64(q: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

/// Exact rational value of a finite double.
pub fn from_f64(x: f64) -> Option<Rational> {
    Rational::from_float(x)
}

/// Brings `rows` to reduced row echelon form in place and returns the
/// pivot columns.
pub fn rref(rows: &mut [Vec<Rational>]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].recip();
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x -= &factor * p;
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut work = rows.to_vec();
    rref(&mut work).len()
}

/// Basis of `{x : rows * x = 0}` in reduced row echelon form.
pub fn nullspace(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut work = rows.to_vec();
    let pivots = rref(&mut work);
    let mut basis: Vec<Vec<Rational>> = (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = alloc::vec![Rational::zero(); ncols];
            v[free] = Rational::one();
            for (row, &p) in work.iter().zip(&pivots) {
                v[p] = -row[free].clone();
            }
            v
        })
        .collect();
    rref(&mut basis);
    basis
}

/// Divides by the gcd of the entries (no-op for the zero vector).
pub fn primitive(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// Smallest integer multiple of a rational vector with gcd 1 and the same
/// direction.
pub fn integer_direction(row: &[Rational]) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |l, q| l.lcm(q.denom()));
    let mut v: Vec<BigInt> = row.iter().map(|q| (q * &lcm).to_integer()).collect();
    primitive(&mut v);
    v
}

pub fn dot_int(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `a · v` for a 0/1 vector `v`.
pub fn dot_01(a: &[BigInt], v: &[u8]) -> BigInt {
    a.iter()
        .zip(v)
        .filter(|(_, &b)| b != 0)
        .map(|(x, _)| x.clone())
        .sum()
}

pub fn dot_rational(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Dimension of the affine hull of 0/1 points; `None` for no points.
pub fn affine_dimension(points: &[&[u8]]) -> Option<usize> {
    let (base, rest) = points.split_first()?;
    let diffs: Vec<Vec<Rational>> = rest
        .iter()
        .map(|p| {
            p.iter()
                .zip(base.iter())
                .map(|(&x, &y)| from_int(x as i64 - y as i64))
                .collect()
        })
        .collect();
    Some(rank(&diffs))
}

pub fn is_negative(x: &BigInt) -> bool {
    x.is_negative()
}

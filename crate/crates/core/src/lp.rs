//! Dense two-phase simplex with Bland's rule, generic over exact rationals
//! and doubles.
//!
//! Problems are in standard form `A x = b, x >= 0`. Phase one minimizes the
//! L1 residual through artificial variables; phase two maximizes a linear
//! objective over the (possibly relaxed) feasible set.

use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::exact::Rational;

pub(crate) trait LpNum: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Sign with whatever tolerance the number type needs.
    fn sign(&self) -> i8;
    fn less_than(&self, o: &Self) -> bool;
    /// Penalty keeping relaxed artificials from growing in phase two.
    fn penalty() -> Self;
}

const F64_EPS: f64 = 1e-12;

impl LpNum for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn sign(&self) -> i8 {
        if *self > F64_EPS {
            1
        } else if *self < -F64_EPS {
            -1
        } else {
            0
        }
    }
    fn less_than(&self, o: &Self) -> bool {
        self < o
    }
    fn penalty() -> Self {
        1e6
    }
}

impl LpNum for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn sign(&self) -> i8 {
        if self.is_positive() {
            1
        } else if self.is_negative() {
            -1
        } else {
            0
        }
    }
    fn less_than(&self, o: &Self) -> bool {
        self < o
    }
    fn penalty() -> Self {
        crate::exact::from_int(1_000_000)
    }
}

pub(crate) struct LpOutcome<T> {
    /// Minimal L1 norm of `A x - b` over `x >= 0`.
    pub residual: T,
    /// Maximum of the objective over the phase-one optimal face, `None`
    /// when unbounded or when no objective was given.
    pub optimum: Option<T>,
}

struct Tableau<T> {
    rows: Vec<Vec<T>>,
    basis: Vec<usize>,
    ncols: usize,
}

impl<T: LpNum> Tableau<T> {
    fn rhs(&self, i: usize) -> &T {
        &self.rows[i][self.ncols]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].clone();
        for x in self.rows[r].iter_mut() {
            *x = x.div(&inv);
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || is_exact_zero(&row[c]) {
                continue;
            }
            let factor = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x = x.sub(&factor.mul(p));
            }
        }
        self.basis[r] = c;
    }

    /// Maximizes `cost · x`; returns `false` if unbounded.
    fn optimize(&mut self, cost: &[T], allowed: impl Fn(usize) -> bool) -> bool {
        loop {
            let entering = (0..self.ncols).filter(|&j| allowed(j)).find(|&j| {
                let mut reduced = cost[j].clone();
                for (i, &b) in self.basis.iter().enumerate() {
                    reduced = reduced.sub(&cost[b].mul(&self.rows[i][j]));
                }
                reduced.sign() > 0
            });
            let Some(c) = entering else {
                return true;
            };
            let mut leave: Option<(usize, T)> = None;
            for i in 0..self.rows.len() {
                if self.rows[i][c].sign() <= 0 {
                    continue;
                }
                let ratio = self.rhs(i).div(&self.rows[i][c]);
                let better = match &leave {
                    None => true,
                    Some((li, best)) => {
                        ratio.less_than(best)
                            || (!best.less_than(&ratio) && self.basis[i] < self.basis[*li])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, c),
                None => return false,
            }
        }
    }

    fn value(&self, cost: &[T]) -> T {
        self.basis
            .iter()
            .enumerate()
            .fold(T::zero(), |acc, (i, &b)| acc.add(&cost[b].mul(self.rhs(i))))
    }
}

fn is_exact_zero<T: LpNum>(x: &T) -> bool {
    let z = T::zero();
    !x.less_than(&z) && !z.less_than(x)
}

/// Solves `A x = b, x >= 0`, then maximizes `objective · x` if given.
pub(crate) fn solve<T: LpNum>(a: &[Vec<T>], b: &[T], objective: Option<&[T]>) -> LpOutcome<T> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let ncols = n + m;
    let mut rows = Vec::with_capacity(m);
    for (i, (row, rhs)) in a.iter().zip(b).enumerate() {
        let flip = rhs.less_than(&T::zero());
        let mut r: Vec<T> = row
            .iter()
            .map(|x| if flip { x.neg() } else { x.clone() })
            .collect();
        r.extend((0..m).map(|k| if k == i { T::one() } else { T::zero() }));
        r.push(if flip { rhs.neg() } else { rhs.clone() });
        rows.push(r);
    }
    let mut t = Tableau {
        rows,
        basis: (n..ncols).collect(),
        ncols,
    };
    let phase_one: Vec<T> = (0..ncols)
        .map(|j| if j >= n { T::one().neg() } else { T::zero() })
        .collect();
    t.optimize(&phase_one, |_| true);
    let residual = t.value(&phase_one).neg();

    // pivot zero-level artificials out of the basis where possible
    for i in 0..m {
        if t.basis[i] >= n && t.rhs(i).sign() == 0 {
            if let Some(c) = (0..n).find(|&j| t.rows[i][j].sign() != 0) {
                t.pivot(i, c);
            }
        }
    }

    let optimum = objective.and_then(|obj| {
        let value_cost: Vec<T> = (0..ncols)
            .map(|j| if j < n { obj[j].clone() } else { T::zero() })
            .collect();
        let cost: Vec<T> = (0..ncols)
            .map(|j| {
                if j < n {
                    obj[j].clone()
                } else {
                    T::penalty().neg()
                }
            })
            .collect();
        t.optimize(&cost, |j| j < n).then(|| t.value(&value_cost))
    });
    LpOutcome { residual, optimum }
}

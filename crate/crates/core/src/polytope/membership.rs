use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use super::hull::HRepresentation;
use super::vertices::VertexSet;
use crate::error::{Error, Result};
use crate::exact::{self, Rational};
use crate::lp;
use crate::verdict::Verdict;

pub const DEFAULT_MEMBERSHIP_TOL: f64 = 1e-9;

/// Either description of a classical polytope.
#[derive(Debug, Clone, Copy)]
pub enum Polytope<'a> {
    H(&'a HRepresentation),
    V(&'a VertexSet),
}

impl Polytope<'_> {
    fn ambient_dimension(&self) -> usize {
        match self {
            Polytope::H(h) => h.scenario().len(),
            Polytope::V(v) => v.ambient_dimension(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstraintKind {
    Equality,
    Inequality,
    /// Convex-combination system of a vertex description; the amount is
    /// the minimal L1 residual.
    ConvexHull,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub kind: ConstraintKind,
    pub index: usize,
    pub amount: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MembershipReport {
    pub verdict: Verdict,
    /// Violated constraints, largest violation first.
    pub violations: Vec<Violation>,
}

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

fn finish(mut violations: Vec<Violation>, tight: bool) -> MembershipReport {
    violations.sort_by(|a, b| b.amount.total_cmp(&a.amount));
    let verdict = if !violations.is_empty() {
        Verdict::Outside
    } else if tight {
        Verdict::Boundary
    } else {
        Verdict::Inside
    };
    MembershipReport {
        verdict,
        violations,
    }
}

/// Floating-point membership with tolerance `tol`.
///
/// Against facets: an equality is violated when `|a·z - b| > tol`, an
/// inequality when `a·z - b > tol`; the point is on the boundary when some
/// inequality has `|slack| <= tol`, or when the polytope is lower
/// dimensional (it has no interior in the ambient space). Against vertices
/// the relaxed convex-combination program decides: residual above `tol`
/// means outside, and the point is inside when it admits weights all
/// exceeding `tol` and the polytope is full dimensional.
pub fn membership(z: &[f64], polytope: Polytope<'_>, tol: f64) -> Result<MembershipReport> {
    check_len(polytope.ambient_dimension(), z.len())?;
    match polytope {
        Polytope::H(h) => {
            let mut violations = Vec::new();
            for (i, e) in h.equalities().iter().enumerate() {
                let gap = (e.value_f64(z) - e.offset_f64()).abs();
                if gap > tol {
                    violations.push(Violation {
                        kind: ConstraintKind::Equality,
                        index: i,
                        amount: gap,
                    });
                }
            }
            let mut tight = !h.equalities().is_empty();
            for (i, c) in h.inequalities().iter().enumerate() {
                let excess = c.value_f64(z) - c.offset_f64();
                if excess > tol {
                    violations.push(Violation {
                        kind: ConstraintKind::Inequality,
                        index: i,
                        amount: excess,
                    });
                } else if excess.abs() <= tol {
                    tight = true;
                }
            }
            Ok(finish(violations, tight))
        }
        Polytope::V(v) => {
            let (a, b, obj) = combination_system(v, z.to_vec(), f64::from);
            let out = lp::solve(&a, &b, Some(&obj));
            if out.residual > tol {
                return Ok(finish(
                    alloc::vec![Violation {
                        kind: ConstraintKind::ConvexHull,
                        index: 0,
                        amount: out.residual,
                    }],
                    false,
                ));
            }
            let t = out.optimum.unwrap_or(0.0);
            Ok(finish(Vec::new(), t <= tol || lower_dimensional(v)))
        }
    }
}

/// Exact membership of a rational point (zero tolerance).
pub fn membership_exact(z: &[Rational], polytope: Polytope<'_>) -> Result<MembershipReport> {
    check_len(polytope.ambient_dimension(), z.len())?;
    match polytope {
        Polytope::H(h) => {
            let mut violations = Vec::new();
            for (i, e) in h.equalities().iter().enumerate() {
                let gap = e.value_exact(z) - Rational::from_integer(e.b.clone());
                if !gap.is_zero() {
                    violations.push(Violation {
                        kind: ConstraintKind::Equality,
                        index: i,
                        amount: exact::to_f64(&gap.abs()),
                    });
                }
            }
            let mut tight = !h.equalities().is_empty();
            for (i, c) in h.inequalities().iter().enumerate() {
                let excess = c.value_exact(z) - Rational::from_integer(c.b.clone());
                if excess.is_positive() {
                    violations.push(Violation {
                        kind: ConstraintKind::Inequality,
                        index: i,
                        amount: exact::to_f64(&excess),
                    });
                } else if excess.is_zero() {
                    tight = true;
                }
            }
            Ok(finish(violations, tight))
        }
        Polytope::V(v) => {
            let (a, b, obj) = combination_system(v, z.to_vec(), |x| exact::from_int(i64::from(x)));
            let out = lp::solve(&a, &b, Some(&obj));
            if !out.residual.is_zero() {
                return Ok(finish(
                    alloc::vec![Violation {
                        kind: ConstraintKind::ConvexHull,
                        index: 0,
                        amount: exact::to_f64(&out.residual),
                    }],
                    false,
                ));
            }
            let t = out.optimum.unwrap_or_else(Rational::zero);
            Ok(finish(Vec::new(), !t.is_positive() || lower_dimensional(v)))
        }
    }
}

/// No interior in the ambient space: relative-interior points are still on
/// the boundary, as for the facet test.
fn lower_dimensional(v: &VertexSet) -> bool {
    v.dimension() < v.ambient_dimension()
}

/// Builds `sum_i (t + mu_i) v_i = z`, `sum_i (t + mu_i) = 1` over the
/// variables `(t, mu_1, ..., mu_n) >= 0` with objective `t`. A point lies in
/// the relative interior iff it has a representation with every weight
/// positive, i.e. iff the optimal `t` is positive.
fn combination_system<T: lp::LpNum>(
    v: &VertexSet,
    z: Vec<T>,
    lift: impl Fn(u8) -> T,
) -> (Vec<Vec<T>>, Vec<T>, Vec<T>) {
    let n = v.len();
    let verts = v.vertices();
    let mut rows = Vec::with_capacity(z.len() + 1);
    for k in 0..z.len() {
        let mut row = Vec::with_capacity(n + 1);
        let mut sum = T::zero();
        for p in verts {
            sum = sum.add(&lift(p[k]));
        }
        row.push(sum);
        row.extend(verts.iter().map(|p| lift(p[k])));
        rows.push(row);
    }
    let mut ones = Vec::with_capacity(n + 1);
    ones.push((0..n).fold(T::zero(), |acc, _| acc.add(&T::one())));
    ones.extend((0..n).map(|_| T::one()));
    rows.push(ones);
    let mut rhs = z;
    rhs.push(T::one());
    let mut obj = alloc::vec![T::zero(); n + 1];
    obj[0] = T::one();
    (rows, rhs, obj)
}

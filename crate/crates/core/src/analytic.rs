//! Closed-form description of the two-word scenario `{(1,1,2,2), (1,2,1,2)}`.
//!
//! With `x = Tr(r1 r2 r1 r2)` and `y = Tr(r1 r1 r2 r2)`, the set realizable
//! by normalized states is the region `0 <= y^2 <= x <= y <= 1`, and the
//! classical polytope is the diagonal segment `x = y` in `[0, 1]`.

use alloc::vec::Vec;
use core::f64::consts::FRAC_PI_2;

#[allow(unused_imports)] // shadowed by std float methods when std is in the build graph
use num_traits::Float;

use crate::error::{Error, Result};
use crate::families;
use crate::invariants::{evaluate, DensityOperator};
use crate::scenario::{build_scenario, Scenario, Word};
use crate::verdict::Verdict;

pub const DEFAULT_ANALYTIC_TOL: f64 = 1e-10;

/// Samples per curve in figure data.
pub const FIGURE_SAMPLES: usize = 512;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoWordPoint {
    /// `z_1212`
    pub x: f64,
    /// `z_1122`
    pub y: f64,
}

impl TwoWordPoint {
    pub fn new(x: f64, y: f64) -> Self {
        TwoWordPoint { x, y }
    }

    /// Reads the point from invariants ordered like [`two_word_scenario`],
    /// i.e. `[z_1122, z_1212]`.
    pub fn from_invariants(values: &[f64]) -> Result<Self> {
        match values {
            [y, x] => Ok(TwoWordPoint { x: *x, y: *y }),
            _ => Err(Error::DimensionMismatch {
                expected: 2,
                found: values.len(),
            }),
        }
    }

    /// Coordinates in scenario order, `[z_1122, z_1212]`.
    pub fn to_invariants(self) -> [f64; 2] {
        [self.y, self.x]
    }
}

pub fn two_word_scenario() -> Scenario {
    build_scenario(&[[1, 1, 2, 2], [1, 2, 1, 2]]).expect("valid words")
}

/// Membership in the chain `0 <= y^2 <= x <= y <= 1`.
pub fn two_word_membership(p: TwoWordPoint, tol: f64) -> Verdict {
    let TwoWordPoint { x, y } = p;
    // each slack must be >= 0
    let slacks = [y * y, x - y * y, y - x, 1.0 - y];
    if slacks.iter().any(|&s| s < -tol) {
        Verdict::Outside
    } else if slacks.iter().any(|&s| s <= tol) {
        Verdict::Boundary
    } else {
        Verdict::Inside
    }
}

/// Membership in the cone `{lambda z : lambda >= 0, z in B}` generated by
/// the two-word set, for unnormalized operators.
///
/// Scaling the operators by `c` multiplies both invariants by `c^4`, so the
/// question is whether some `lambda > 0` puts `(x, y) / lambda` in the
/// chain, i.e. `y^2 / lambda <= x <= y <= lambda`. The origin is the image
/// of `lambda = 0`. Otherwise `x <= y` is scale free, the upper bound holds
/// for `lambda >= y`, and `y^2 <= lambda x` holds for large `lambda` exactly
/// when `x > 0` (if `x = 0` then `y = 0` too, which is the origin). So the
/// cone is `{x = y = 0} ∪ {0 < x <= y}`; it is not closed, e.g. `(0, 1)` is
/// a limit point outside it.
pub fn two_word_cone_membership(p: TwoWordPoint) -> bool {
    (p.x == 0.0 && p.y == 0.0) || (0.0 < p.x && p.x <= p.y)
}

fn unit_interval(name: &'static str, v: f64) -> Result<()> {
    if (0.0..=1.0).contains(&v) {
        Ok(())
    } else {
        Err(Error::Domain {
            name,
            value: v,
            domain: "[0, 1]",
        })
    }
}

/// Invariants of two qubit states with Bloch lengths `r`, `s` at angle
/// `theta`.
pub fn qubit_closed_form(r: f64, s: f64, theta: f64) -> Result<TwoWordPoint> {
    unit_interval("r", r)?;
    unit_interval("s", s)?;
    let (r2, s2) = (r * r, s * s);
    let cos = theta.cos();
    let y = (1.0 + r2 + s2 + r2 * s2 + 4.0 * r * s * cos) / 8.0;
    let x = (1.0 + r2 + s2 - r2 * s2 + 4.0 * r * s * cos + 2.0 * r2 * s2 * cos * cos) / 8.0;
    Ok(TwoWordPoint { x, y })
}

/// `(cos^4 theta, cos^2 theta)`, traced by the two-state OBG family.
pub fn obg_curve(theta: f64) -> TwoWordPoint {
    let c2 = theta.cos().powi(2);
    TwoWordPoint { x: c2 * c2, y: c2 }
}

/// Two-word invariants of the Designolle mixture at `omega`, by matrix
/// evaluation.
pub fn designolle_curve(omega: f64) -> Result<TwoWordPoint> {
    let r = families::designolle_pair(omega)?;
    let v = evaluate(&r, &two_word_scenario())?;
    TwoWordPoint::from_invariants(&v.real_parts())
}

/// `(Tr rho, Tr rho^2, ..., Tr rho^d)`.
pub fn spectroscopy_vector(rho: &DensityOperator, d: usize) -> Result<Vec<f64>> {
    if d == 0 {
        return Err(Error::Domain {
            name: "d",
            value: 0.0,
            domain: "d >= 1",
        });
    }
    let n = rho.dimension();
    let s =
        Scenario::from_words((1..=d).map(|k| Word::new(&alloc::vec![1; k]).expect("nonempty")))?;
    let r = crate::invariants::Realization::new(
        [(1, rho.clone())].into_iter().collect(),
        (rho.trace() - 1.0).abs() <= crate::invariants::TRACE_TOL,
    )?;
    debug_assert_eq!(r.dimension(), n);
    Ok(evaluate(&r, &s)?.real_parts())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    ClassicalSegment,
    LineXEqY,
    ParabolaXEqY2,
    Obg,
    Designolle,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::ClassicalSegment,
        Family::LineXEqY,
        Family::ParabolaXEqY2,
        Family::Obg,
        Family::Designolle,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::ClassicalSegment => "classical_segment",
            Family::LineXEqY => "boundary_x_eq_y",
            Family::ParabolaXEqY2 => "boundary_x_eq_y2",
            Family::Obg => "obg",
            Family::Designolle => "designolle",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    Classical,
    Quantum,
    Outside,
}

impl Region {
    pub fn as_str(self) -> &'static str {
        match self {
            Region::Classical => "classical",
            Region::Quantum => "quantum",
            Region::Outside => "outside",
        }
    }

    /// Classical when on the diagonal segment, quantum when elsewhere in the
    /// two-word set, all within `tol`.
    pub fn of(p: TwoWordPoint, tol: f64) -> Region {
        if two_word_membership(p, tol) == Verdict::Outside {
            Region::Outside
        } else if (p.x - p.y).abs() <= tol {
            Region::Classical
        } else {
            Region::Quantum
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FigureRow {
    pub family: Family,
    pub parameter: f64,
    pub point: TwoWordPoint,
    pub region: Region,
}

/// Rows of the two-word figure: `samples` uniform parameter values per
/// family (`t in [0, 1]` for the segment and boundaries, `theta in
/// [0, pi/2]` for OBG, `omega in [0, 1]` for Designolle).
pub fn two_word_figure(samples: usize) -> Result<Vec<FigureRow>> {
    let samples = samples.max(2);
    let mut rows = Vec::with_capacity(samples * Family::ALL.len());
    for family in Family::ALL {
        for i in 0..samples {
            let t = i as f64 / (samples - 1) as f64;
            let (parameter, point) = match family {
                Family::ClassicalSegment | Family::LineXEqY => (t, TwoWordPoint::new(t, t)),
                Family::ParabolaXEqY2 => (t, TwoWordPoint::new(t * t, t)),
                Family::Obg => {
                    let theta = t * FRAC_PI_2;
                    (theta, obg_curve(theta))
                }
                Family::Designolle => (t, designolle_curve(t)?),
            };
            rows.push(FigureRow {
                family,
                parameter,
                point,
                region: Region::of(point, DEFAULT_ANALYTIC_TOL),
            });
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::evaluate;

    fn close(p: TwoWordPoint, x: f64, y: f64, tol: f64) -> bool {
        (p.x - x).abs() <= tol && (p.y - y).abs() <= tol
    }

    #[test]
    fn membership_examples() {
        let tol = DEFAULT_ANALYTIC_TOL;
        assert_eq!(
            two_word_membership(TwoWordPoint::new(0.25, 0.5), tol),
            Verdict::Boundary
        );
        assert_eq!(
            two_word_membership(TwoWordPoint::new(0.3, 0.4), tol),
            Verdict::Inside
        );
        assert_eq!(
            two_word_membership(TwoWordPoint::new(0.5, 0.4), tol),
            Verdict::Outside
        );
    }

    #[test]
    fn cone_examples() {
        assert!(two_word_cone_membership(TwoWordPoint::new(0.0, 0.0)));
        assert!(two_word_cone_membership(TwoWordPoint::new(2.0, 3.0)));
        assert!(!two_word_cone_membership(TwoWordPoint::new(0.0, 1.0)));
        assert!(!two_word_cone_membership(TwoWordPoint::new(3.0, 2.0)));
        // the witness scale from the reduction
        let lambda = 9.0;
        assert_eq!(
            two_word_membership(TwoWordPoint::new(2.0 / lambda, 3.0 / lambda), 1e-10),
            Verdict::Inside
        );
    }

    #[test]
    fn closed_form_examples() {
        assert!(close(
            qubit_closed_form(1.0, 1.0, FRAC_PI_2).unwrap(),
            0.25,
            0.5,
            1e-15
        ));
        assert!(close(
            qubit_closed_form(0.0, 0.0, 1.3).unwrap(),
            0.125,
            0.125,
            1e-15
        ));
        assert!(close(
            qubit_closed_form(1.0, 1.0, 0.0).unwrap(),
            1.0,
            1.0,
            1e-15
        ));
        assert!(qubit_closed_form(1.1, 0.5, 0.0).is_err());
    }

    #[test]
    fn closed_form_matches_matrices() {
        let s = two_word_scenario();
        for &(r, sl, th) in &[(0.3, 0.8, 0.4), (1.0, 0.2, 2.5), (0.6, 0.6, -1.0)] {
            let m = evaluate(&families::bloch_qubit_pair(r, sl, th).unwrap(), &s).unwrap();
            let p = TwoWordPoint::from_invariants(&m.real_parts()).unwrap();
            let q = qubit_closed_form(r, sl, th).unwrap();
            assert!(close(p, q.x, q.y, 1e-12));
        }
    }

    #[test]
    fn obg_matches_matrices() {
        let s = two_word_scenario();
        for &th in &[0.0, 0.3, core::f64::consts::FRAC_PI_4, 1.2, FRAC_PI_2] {
            let m = evaluate(&families::obg_states(2, th).unwrap(), &s).unwrap();
            let p = TwoWordPoint::from_invariants(&m.real_parts()).unwrap();
            let q = obg_curve(th);
            assert!(close(p, q.x, q.y, 1e-12), "{th}");
        }
        assert!(close(
            obg_curve(core::f64::consts::FRAC_PI_4),
            0.25,
            0.5,
            1e-15
        ));
    }

    #[test]
    fn designolle_endpoints() {
        assert!(close(
            designolle_curve(0.0).unwrap(),
            1.0 / 16.0,
            1.0 / 16.0,
            1e-12
        ));
        assert!(close(
            designolle_curve(1.0).unwrap(),
            1.0 / 9.0,
            1.0 / 9.0,
            1e-12
        ));
        let mid = designolle_curve(0.5).unwrap();
        assert!(((mid.y - mid.x) - 1.0 / 2304.0).abs() < 1e-15);
        assert_eq!(Region::of(mid, DEFAULT_ANALYTIC_TOL), Region::Quantum);
        assert!(designolle_curve(1.5).is_err());
    }

    #[test]
    fn spectroscopy() {
        let half = DensityOperator::diagonal(&[0.5, 0.5]).unwrap();
        let v = spectroscopy_vector(&half, 3).unwrap();
        assert!(v
            .iter()
            .zip([1.0, 0.5, 0.25])
            .all(|(a, b)| (a - b).abs() < 1e-15));
        let pure = DensityOperator::pure(&families::ket_plus());
        assert!(spectroscopy_vector(&pure, 5)
            .unwrap()
            .iter()
            .all(|x| (x - 1.0).abs() < 1e-12));
        assert!(spectroscopy_vector(&pure, 0).is_err());
    }

    #[test]
    fn figure_rows() {
        let rows = two_word_figure(FIGURE_SAMPLES).unwrap();
        assert_eq!(rows.len(), 5 * FIGURE_SAMPLES);
        for r in &rows {
            assert_ne!(r.region, Region::Outside);
            if r.family == Family::Obg {
                assert!((r.point.x - r.point.y * r.point.y).abs() <= 1e-12);
            }
        }
    }
}

//! Parametrized state families used as examples and extremal witnesses.

use alloc::vec::Vec;
use core::f64::consts::{FRAC_1_SQRT_2, PI};

use num_complex::Complex64;
#[allow(unused_imports)] // shadowed by std float methods when std is in the build graph
use num_traits::Float;

use crate::error::{Error, Result};
use crate::invariants::{DensityOperator, Realization};
use crate::linalg::{self, c, CMatrix, CVector};
use crate::scenario::Letter;

pub fn ket_zero() -> CVector {
    CVector::from_vec(alloc::vec![c(1.0, 0.0), c(0.0, 0.0)])
}

pub fn ket_one() -> CVector {
    CVector::from_vec(alloc::vec![c(0.0, 0.0), c(1.0, 0.0)])
}

pub fn ket_plus() -> CVector {
    CVector::from_vec(alloc::vec![c(FRAC_1_SQRT_2, 0.0), c(FRAC_1_SQRT_2, 0.0)])
}

pub fn ket_minus() -> CVector {
    CVector::from_vec(alloc::vec![c(FRAC_1_SQRT_2, 0.0), c(-FRAC_1_SQRT_2, 0.0)])
}

pub fn pauli_x() -> CMatrix {
    linalg::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]])
}

pub fn pauli_y() -> CMatrix {
    CMatrix::from_row_slice(2, 2, &[c(0.0, 0.0), c(0.0, -1.0), c(0.0, 1.0), c(0.0, 0.0)])
}

pub fn pauli_z() -> CMatrix {
    linalg::from_real_rows(&[&[1.0, 0.0], &[0.0, -1.0]])
}

/// `(1 + x X + y Y + z Z) / 2`.
pub fn bloch_state(x: f64, y: f64, z: f64) -> Result<DensityOperator> {
    let radius = (x * x + y * y + z * z).sqrt();
    if radius > 1.0 + 1e-12 {
        return Err(Error::Domain {
            name: "Bloch radius",
            value: radius,
            domain: "[0, 1]",
        });
    }
    let m =
        (CMatrix::identity(2, 2) + pauli_x().scale(x) + pauli_y().scale(y) + pauli_z().scale(z))
            .scale(0.5);
    Ok(DensityOperator::trusted(m))
}

fn check_unit_interval(name: &'static str, value: f64) -> Result<()> {
    if (0.0..=1.0).contains(&value) {
        Ok(())
    } else {
        Err(Error::Domain {
            name,
            value,
            domain: "[0, 1]",
        })
    }
}

/// `n` pure qubit states `cos(theta/2)|0> + sin(theta/2) e^{2 pi i k/n}|1>`,
/// `k = 0..n`, assigned to letters `1..=n`.
pub fn obg_states(n: usize, theta: f64) -> Result<Realization> {
    if n < 2 {
        return Err(Error::Domain {
            name: "n",
            value: n as f64,
            domain: "n >= 2",
        });
    }
    let (s, co) = (theta / 2.0).sin_cos();
    let states: Vec<DensityOperator> = (0..n)
        .map(|k| {
            let phase = Complex64::from_polar(1.0, 2.0 * PI * k as f64 / n as f64);
            DensityOperator::pure(&CVector::from_vec(alloc::vec![c(co, 0.0), phase * s]))
        })
        .collect();
    Realization::from_sequence(states, true)
}

/// The mixture `omega * rho + (1 - omega) * sigma` of the incoherent pairs
/// `rho = (|0><0|, |0><0|/3 + 2|1><1|/3)` and
/// `sigma = (|+><+|, |+><+|/4 + 3|-><-|/4)`.
pub fn designolle_pair(omega: f64) -> Result<Realization> {
    check_unit_interval("omega", omega)?;
    let p0 = linalg::projector(&ket_zero());
    let p1 = linalg::projector(&ket_one());
    let pp = linalg::projector(&ket_plus());
    let pm = linalg::projector(&ket_minus());
    let rho = [p0.clone(), p0.scale(1.0 / 3.0) + p1.scale(2.0 / 3.0)];
    let sigma = [pp.clone(), pp.scale(0.25) + pm.scale(0.75)];
    let states = rho
        .iter()
        .zip(&sigma)
        .map(|(a, b)| DensityOperator::trusted(a.scale(omega) + b.scale(1.0 - omega)))
        .collect();
    Realization::from_sequence(states, true)
}

/// `rho_1 = (1 + r X)/2`, `rho_2 = (1 + s cos(theta) X + s sin(theta) Z)/2`.
pub fn bloch_qubit_pair(r: f64, s: f64, theta: f64) -> Result<Realization> {
    check_unit_interval("r", r)?;
    check_unit_interval("s", s)?;
    let (sin, cos) = theta.sin_cos();
    let states = alloc::vec![
        bloch_state(r, 0.0, 0.0)?,
        bloch_state(s * cos, 0.0, s * sin)?,
    ];
    Realization::from_sequence(states, true)
}

/// Realization assigning `ops[i]` to `letters[i]`.
pub fn assign(
    letters: &[Letter],
    ops: &[DensityOperator],
    normalized: bool,
) -> Result<Realization> {
    if letters.len() != ops.len() {
        return Err(Error::DimensionMismatch {
            expected: letters.len(),
            found: ops.len(),
        });
    }
    Realization::new(
        letters.iter().copied().zip(ops.iter().cloned()).collect(),
        normalized,
    )
}

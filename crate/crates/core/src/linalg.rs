//! Small dense complex matrix helpers on top of nalgebra.

use alloc::vec::Vec;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

pub type CMatrix = DMatrix<Complex64>;
pub type CVector = DVector<Complex64>;

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Builds a matrix from row-major real and imaginary parts.
pub fn from_parts(re: &[Vec<f64>], im: &[Vec<f64>]) -> Option<CMatrix> {
    let rows = re.len();
    if im.len() != rows {
        return None;
    }
    let cols = re.first().map_or(0, Vec::len);
    if re.iter().chain(im).any(|row| row.len() != cols) {
        return None;
    }
    Some(CMatrix::from_fn(rows, cols, |i, j| c(re[i][j], im[i][j])))
}

/// Real matrix promoted to complex, row-major input.
pub fn from_real_rows(rows: &[&[f64]]) -> CMatrix {
    let n = rows.len();
    let m = rows.first().map_or(0, |r| r.len());
    CMatrix::from_fn(n, m, |i, j| c(rows[i][j], 0.0))
}

pub fn diagonal(entries: &[f64]) -> CMatrix {
    let n = entries.len();
    CMatrix::from_fn(n, n, |i, j| if i == j { c(entries[i], 0.0) } else { ZERO })
}

/// `|v><v|`.
pub fn projector(v: &CVector) -> CMatrix {
    v * v.adjoint()
}

pub fn trace(a: &CMatrix) -> Complex64 {
    a.diagonal().iter().sum()
}

/// Maximum elementwise `|A - A^dagger|`.
pub fn hermitian_deviation(a: &CMatrix) -> f64 {
    let mut worst = 0.0_f64;
    for i in 0..a.nrows() {
        for j in i..a.ncols() {
            worst = worst.max((a[(i, j)] - a[(j, i)].conj()).norm());
        }
    }
    worst
}

/// `(A + A^dagger) / 2`.
pub fn hermitian_part(a: &CMatrix) -> CMatrix {
    (a + a.adjoint()).scale(0.5)
}

/// Eigenvalues of the Hermitian part of `a`, ascending.
pub fn hermitian_eigenvalues(a: &CMatrix) -> Vec<f64> {
    if a.nrows() == 0 {
        return Vec::new();
    }
    let mut values: Vec<f64> = hermitian_part(a)
        .symmetric_eigen()
        .eigenvalues
        .iter()
        .copied()
        .collect();
    values.sort_by(f64::total_cmp);
    values
}

pub fn min_eigenvalue(a: &CMatrix) -> f64 {
    hermitian_eigenvalues(a).first().copied().unwrap_or(0.0)
}

/// Block-diagonal `a ⊕ b`.
pub fn direct_sum(a: &CMatrix, b: &CMatrix) -> CMatrix {
    let (n, m) = (a.nrows(), b.nrows());
    let mut out = CMatrix::zeros(n + m, n + m);
    out.view_mut((0, 0), (n, n)).copy_from(a);
    out.view_mut((n, n), (m, m)).copy_from(b);
    out
}

pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a.kronecker(b)
}

/// `U A U^dagger`.
pub fn conjugate(u: &CMatrix, a: &CMatrix) -> CMatrix {
    u * a * u.adjoint()
}

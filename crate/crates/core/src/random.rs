//! Seeded random states, unitaries and distributions.
//!
//! Everything here is deterministic given the seed: the generator is
//! ChaCha8 seeded through `SeedableRng::seed_from_u64`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

#[allow(unused_imports)] // shadowed by std float methods when std is in the build graph
use num_traits::Float;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Exp1, StandardNormal};

use crate::error::{Error, Result};
use crate::invariants::{ClassicalModel, DensityOperator, Realization};
use crate::linalg::{c, CMatrix};
use crate::scenario::Letter;

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn gaussian_matrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> CMatrix {
    CMatrix::from_fn(rows, cols, |_, _| {
        c(rng.sample(StandardNormal), rng.sample(StandardNormal))
    })
}

/// `G G^dagger / Tr(G G^dagger)` for a `d x rank` complex Gaussian `G`.
pub fn random_density_with<R: Rng + ?Sized>(
    rng: &mut R,
    d: usize,
    rank: usize,
) -> Result<DensityOperator> {
    if rank == 0 || rank > d {
        return Err(Error::Domain {
            name: "rank",
            value: rank as f64,
            domain: "1 <= rank <= d",
        });
    }
    let g = gaussian_matrix(rng, d, rank);
    let prod = &g * g.adjoint();
    let t = crate::linalg::trace(&prod).re;
    Ok(DensityOperator::trusted(prod.unscale(t)))
}

pub fn random_density(d: usize, rank: usize, seed: u64) -> Result<DensityOperator> {
    random_density_with(&mut rng(seed), d, rank)
}

/// Haar-distributed unitary via QR of a complex Gaussian matrix with the
/// phases of `R`'s diagonal absorbed into `Q`.
pub fn random_unitary<R: Rng + ?Sized>(rng: &mut R, d: usize) -> CMatrix {
    let qr = gaussian_matrix(rng, d, d).qr();
    let (mut q, r) = qr.unpack();
    for j in 0..d {
        let diag = r[(j, j)];
        let n = diag.norm();
        if n > 0.0 {
            let phase = diag / n;
            for i in 0..d {
                q[(i, j)] *= phase;
            }
        }
    }
    q
}

/// Positive operator with trace drawn uniformly from `[0, max_trace]`.
pub fn random_positive<R: Rng + ?Sized>(rng: &mut R, d: usize, max_trace: f64) -> DensityOperator {
    let rank = rng.random_range(1..=d);
    let rho = random_density_with(rng, d, rank).expect("rank in range");
    let t: f64 = rng.random_range(0.0..=max_trace);
    rho.scaled(t)
}

/// Normalized states of random rank on `C^d` for letters `1..=n`.
pub fn random_realization<R: Rng + ?Sized>(rng: &mut R, n: usize, d: usize) -> Realization {
    let states = (0..n)
        .map(|_| {
            let rank = rng.random_range(1..=d);
            random_density_with(rng, d, rank).expect("rank in range")
        })
        .collect();
    Realization::from_sequence(states, true).expect("common dimension")
}

/// Qubit state with Bloch vector uniform in the unit ball.
pub fn random_qubit<R: Rng + ?Sized>(rng: &mut R) -> DensityOperator {
    let v: [f64; 3] = [
        rng.sample(StandardNormal),
        rng.sample(StandardNormal),
        rng.sample(StandardNormal),
    ];
    let norm = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2])
        .sqrt()
        .max(f64::MIN_POSITIVE);
    let u: f64 = rng.random();
    let radius = u.cbrt() / norm;
    crate::families::bloch_state(v[0] * radius, v[1] * radius, v[2] * radius)
        .expect("radius at most one")
}

/// Point uniform on the probability simplex with `k` outcomes.
pub fn random_distribution<R: Rng + ?Sized>(rng: &mut R, k: usize) -> Vec<f64> {
    let raw: Vec<f64> = (0..k).map(|_| rng.sample::<f64, _>(Exp1)).collect();
    let total: f64 = raw.iter().sum();
    let mut p: Vec<f64> = raw.iter().map(|x| x / total).collect();
    // absorb rounding into the largest entry so the sum is 1 to ~1 ulp
    let drift = 1.0 - p.iter().sum::<f64>();
    if let Some(max) = p.iter_mut().max_by(|a, b| a.total_cmp(b)) {
        *max += drift;
    }
    p
}

/// Independent random distributions over `alphabet` outcomes for every
/// letter. A random subset of letters gets a sparse (deterministic-ish)
/// distribution so that boundary points are also exercised.
pub fn random_model<R: Rng + ?Sized>(
    rng: &mut R,
    letters: &[Letter],
    alphabet: usize,
) -> ClassicalModel {
    let dists: BTreeMap<Letter, Vec<f64>> = letters
        .iter()
        .map(|&l| {
            let p = if rng.random_bool(0.2) {
                let mut p = alloc::vec![0.0; alphabet];
                p[rng.random_range(0..alphabet)] = 1.0;
                p
            } else {
                random_distribution(rng, alphabet)
            };
            (l, p)
        })
        .collect();
    ClassicalModel::new(dists).expect("valid distributions")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_one_is_pure() {
        for seed in 0..10 {
            let rho = random_density(3, 1, seed).unwrap();
            assert!((rho.purity() - 1.0).abs() < 1e-12);
            assert!((rho.trace() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn qubit_spectrum_is_a_distribution() {
        for seed in 0..20 {
            let ev = random_density(2, 2, seed).unwrap().eigenvalues();
            assert!(ev.iter().all(|&x| (-1e-12..=1.0 + 1e-12).contains(&x)));
            assert!((ev.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn seeds_are_reproducible() {
        assert_eq!(
            random_density(4, 2, 99).unwrap(),
            random_density(4, 2, 99).unwrap()
        );
        assert_ne!(
            random_density(4, 2, 99).unwrap(),
            random_density(4, 2, 98).unwrap()
        );
    }

    #[test]
    fn rank_bounds() {
        assert!(random_density(2, 0, 1).is_err());
        assert!(random_density(2, 3, 1).is_err());
    }

    #[test]
    fn unitary_is_unitary() {
        let mut r = rng(5);
        let u = random_unitary(&mut r, 4);
        let err = (&u * u.adjoint() - CMatrix::identity(4, 4)).norm();
        assert!(err < 1e-12);
    }

    #[test]
    fn distributions_sum_to_one() {
        let mut r = rng(11);
        for k in 1..8 {
            let p = random_distribution(&mut r, k);
            assert!((p.iter().sum::<f64>() - 1.0).abs() <= 1e-12);
            assert!(p.iter().all(|&x| x >= 0.0));
        }
    }
}

//! Constructions on realizations that act linearly or multiplicatively on
//! invariant vectors.

use alloc::collections::BTreeMap;
use alloc::format;

#[allow(unused_imports)] // shadowed by std float methods when std is in the build graph
use num_traits::Float;

use crate::error::{Error, Result};
use crate::invariants::{DensityOperator, Realization};
use crate::linalg::{self, CMatrix};
use crate::scenario::{classify, Scenario};

fn check_fraction(name: &'static str, value: f64) -> Result<()> {
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

fn check_same_letters(r1: &Realization, r2: &Realization) -> Result<()> {
    if r1.same_letters(r2) {
        Ok(())
    } else {
        Err(Error::InvalidRealization(
            "realizations must share the same letter set".into(),
        ))
    }
}

/// `alpha^(1/m) rho_l ⊕ (1 - alpha)^(1/m) sigma_l`.
///
/// For every word of length `m` the invariant of the result is
/// `alpha * Delta(r1) + (1 - alpha) * Delta(r2)`. The output is generally
/// not normalized.
pub fn direct_sum_mix(
    r1: &Realization,
    r2: &Realization,
    alpha: f64,
    m: usize,
) -> Result<Realization> {
    check_fraction("alpha", alpha)?;
    if m == 0 {
        return Err(Error::Precondition("word length must be at least 1".into()));
    }
    check_same_letters(r1, r2)?;
    let a = alpha.powf(1.0 / m as f64);
    let b = (1.0 - alpha).powf(1.0 / m as f64);
    let operators: BTreeMap<_, _> = r1
        .operators()
        .iter()
        .zip(r2.operators().values())
        .map(|((&l, rho), sigma)| {
            let block = linalg::direct_sum(&rho.matrix().scale(a), &sigma.matrix().scale(b));
            (l, DensityOperator::trusted(block))
        })
        .collect();
    Ok(Realization::trusted(
        operators,
        r1.dimension() + r2.dimension(),
        false,
    ))
}

/// `nu^(1/m) rho_l ⊕ (1 - nu^(1/m)) |l><l|` with `|l>` a basis vector of
/// `C^|L|`.
///
/// Requires a length-homogeneous scenario in which every word has two
/// distinct letters: only then do the basis blocks contribute nothing and
/// every invariant scales by exactly `nu`.
pub fn shrink(r: &Realization, nu: f64, s: &Scenario) -> Result<Realization> {
    check_fraction("nu", nu)?;
    let class = classify(s);
    let m = match class.word_length {
        Some(m) if class.every_word_two_distinct_letters => m,
        _ => {
            return Err(Error::Precondition(
                "shrink needs equal-length words that each contain two distinct letters".into(),
            ))
        }
    };
    if !r.is_normalized() {
        return Err(Error::Precondition(
            "shrink needs a normalized realization".into(),
        ));
    }
    if let Some(&l) = s.letters().iter().find(|&&l| r.get(l).is_err()) {
        return Err(Error::UnknownLetter(l));
    }
    let a = nu.powf(1.0 / m as f64);
    let letters: alloc::vec::Vec<_> = r.letters().collect();
    let k = letters.len();
    let operators: BTreeMap<_, _> = letters
        .iter()
        .enumerate()
        .map(|(i, &l)| {
            let mut basis = CMatrix::zeros(k, k);
            basis[(i, i)] = linalg::c(1.0 - a, 0.0);
            let block = linalg::direct_sum(&r.operators()[&l].matrix().scale(a), &basis);
            (l, DensityOperator::trusted(block))
        })
        .collect();
    Ok(Realization::trusted(operators, r.dimension() + k, true))
}

/// `rho_l ⊗ sigma_l`; invariants multiply coordinatewise.
pub fn hadamard_combine(r1: &Realization, r2: &Realization) -> Result<Realization> {
    check_same_letters(r1, r2)?;
    let operators: BTreeMap<_, _> = r1
        .operators()
        .iter()
        .zip(r2.operators().values())
        .map(|((&l, rho), sigma)| {
            (
                l,
                DensityOperator::trusted(linalg::kron(rho.matrix(), sigma.matrix())),
            )
        })
        .collect();
    let normalized = r1.is_normalized() && r2.is_normalized();
    let realization = Realization::trusted(operators, r1.dimension() * r2.dimension(), normalized);
    if normalized {
        for (l, op) in realization.operators() {
            if (op.trace() - 1.0).abs() > crate::invariants::TRACE_TOL {
                return Err(Error::InvalidRealization(format!(
                    "tensor product for letter {l} lost normalization"
                )));
            }
        }
    }
    Ok(realization)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{bloch_qubit_pair, obg_states};
    use crate::invariants::{evaluate, incoherent_realization, ClassicalModel};
    use crate::scenario::build_scenario;
    use alloc::vec;

    fn two_word() -> Scenario {
        build_scenario(&[vec![1, 1, 2, 2], vec![1, 2, 1, 2]]).unwrap()
    }

    #[test]
    fn mix_with_alpha_one_keeps_first() {
        let r1 = bloch_qubit_pair(0.3, 0.9, 1.1).unwrap();
        let r2 = bloch_qubit_pair(0.8, 0.2, 2.0).unwrap();
        let mixed = direct_sum_mix(&r1, &r2, 1.0, 4).unwrap();
        let a = evaluate(&mixed, &two_word()).unwrap();
        let b = evaluate(&r1, &two_word()).unwrap();
        for (x, y) in a.values().iter().zip(b.values()) {
            assert!((x - y).norm() < 1e-14);
        }
    }

    #[test]
    fn mix_of_vertices_gives_midpoint() {
        let model = |colors: [usize; 2]| {
            let c: BTreeMap<_, _> = [(1, colors[0]), (2, colors[1])].into_iter().collect();
            incoherent_realization(&ClassicalModel::deterministic(&c, 2).unwrap()).unwrap()
        };
        let apart = model([0, 1]);
        let together = model([0, 0]);
        let mixed = direct_sum_mix(&apart, &together, 0.5, 4).unwrap();
        let v = evaluate(&mixed, &two_word()).unwrap().real_parts();
        assert!((v[0] - 0.5).abs() < 1e-14 && (v[1] - 0.5).abs() < 1e-14);
        assert!(!mixed.is_normalized());
    }

    #[test]
    fn mix_rejects_bad_inputs() {
        let r1 = bloch_qubit_pair(0.3, 0.9, 1.1).unwrap();
        let r3 = obg_states(3, 0.4).unwrap();
        assert!(direct_sum_mix(&r1, &r3, 0.5, 4).is_err());
        assert!(direct_sum_mix(&r1, &r1, 1.5, 4).is_err());
        assert!(direct_sum_mix(&r1, &r1, 0.5, 0).is_err());
    }

    #[test]
    fn shrink_examples() {
        let r = obg_states(2, core::f64::consts::FRAC_PI_4).unwrap();
        let s = two_word();
        let base = evaluate(&r, &s).unwrap();
        let zero = evaluate(&shrink(&r, 0.0, &s).unwrap(), &s).unwrap();
        assert!(zero.values().iter().all(|z| z.norm() < 1e-15));
        let same = evaluate(&shrink(&r, 1.0, &s).unwrap(), &s).unwrap();
        for (x, y) in same.values().iter().zip(base.values()) {
            assert!((x - y).norm() < 1e-14);
        }
        let quarter = shrink(&r, 0.25, &s).unwrap();
        assert!(quarter.is_normalized());
        let q = evaluate(&quarter, &s).unwrap();
        for (x, y) in q.values().iter().zip(base.values()) {
            assert!((x - y * 0.25).norm() < 1e-14);
        }
    }

    #[test]
    fn shrink_rejects_repeat_words() {
        let r = obg_states(2, 0.3).unwrap();
        let s = build_scenario(&[vec![1, 1], vec![1, 2]]).unwrap();
        assert!(matches!(shrink(&r, 0.5, &s), Err(Error::Precondition(_))));
        let mixed_len = build_scenario(&[vec![1, 2], vec![1, 1, 2]]).unwrap();
        assert!(shrink(&r, 0.5, &mixed_len).is_err());
    }

    #[test]
    fn hadamard_examples() {
        let r1 = bloch_qubit_pair(0.3, 0.9, 1.1).unwrap();
        let same = obg_states(2, 0.0).unwrap();
        let s = two_word();
        let a = evaluate(&hadamard_combine(&r1, &same).unwrap(), &s).unwrap();
        let b = evaluate(&r1, &s).unwrap();
        for (x, y) in a.values().iter().zip(b.values()) {
            assert!((x - y).norm() < 1e-14);
        }
        let ortho = obg_states(2, core::f64::consts::FRAC_PI_2).unwrap();
        let z = evaluate(&hadamard_combine(&r1, &ortho).unwrap(), &s).unwrap();
        assert!(z.values()[1].norm() < 1e-14);
    }
}

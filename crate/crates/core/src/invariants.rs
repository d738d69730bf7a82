//! Density operators, realizations and Bargmann invariant evaluation.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)] // shadowed by std float methods when std is in the build graph
use num_traits::Float;

use crate::error::{Error, Result};
use crate::linalg::{self, CMatrix, CVector};
use crate::scenario::{classify, Letter, Scenario, Word};

/// Max elementwise `|A - A^dagger|` accepted for an operator.
pub const HERMITIAN_TOL: f64 = 1e-12;
/// Smallest eigenvalue accepted for a positive operator.
pub const PSD_TOL: f64 = 1e-10;
/// Allowed `|Tr(rho) - 1|` for normalized realizations.
pub const TRACE_TOL: f64 = 1e-10;
/// Allowed `|sum(p) - 1|` for classical distributions.
pub const DISTRIBUTION_TOL: f64 = 1e-12;

/// A positive semidefinite operator, not necessarily of unit trace.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityOperator {
    matrix: CMatrix,
}

impl DensityOperator {
    /// Validates Hermiticity and positivity. Inputs failing the tolerances
    /// are rejected, never projected.
    pub fn new(matrix: CMatrix) -> Result<Self> {
        if !matrix.is_square() || matrix.nrows() == 0 {
            return Err(Error::InvalidRealization(format!(
                "operator must be a non-empty square matrix, got {}x{}",
                matrix.nrows(),
                matrix.ncols()
            )));
        }
        if matrix
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::InvalidRealization(
                "operator has non-finite entries".into(),
            ));
        }
        let deviation = linalg::hermitian_deviation(&matrix);
        if deviation > HERMITIAN_TOL {
            return Err(Error::NotHermitian { deviation });
        }
        let min_eigenvalue = linalg::min_eigenvalue(&matrix);
        if min_eigenvalue < -PSD_TOL {
            return Err(Error::NotPositive { min_eigenvalue });
        }
        Ok(DensityOperator { matrix })
    }

    /// Skips validation; for operators that are PSD by construction.
    pub(crate) fn trusted(matrix: CMatrix) -> Self {
        DensityOperator { matrix }
    }

    /// Projector onto `v` (not normalized unless `v` is).
    pub fn pure(v: &CVector) -> Self {
        DensityOperator::trusted(linalg::projector(v))
    }

    /// Diagonal operator with the given nonnegative entries.
    pub fn diagonal(entries: &[f64]) -> Result<Self> {
        DensityOperator::new(linalg::diagonal(entries))
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> CMatrix {
        self.matrix
    }

    pub fn dimension(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn trace(&self) -> f64 {
        linalg::trace(&self.matrix).re
    }

    pub fn purity(&self) -> f64 {
        linalg::trace(&(&self.matrix * &self.matrix)).re
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        linalg::hermitian_eigenvalues(&self.matrix)
    }

    pub(crate) fn scaled(&self, factor: f64) -> Self {
        DensityOperator::trusted(self.matrix.scale(factor))
    }

    /// `U rho U^dagger`, re-Hermitized to remove rounding asymmetry.
    pub fn conjugated(&self, unitary: &CMatrix) -> Result<Self> {
        if unitary.nrows() != self.dimension() || !unitary.is_square() {
            return Err(Error::DimensionMismatch {
                expected: self.dimension(),
                found: unitary.nrows(),
            });
        }
        Ok(DensityOperator::trusted(linalg::hermitian_part(
            &linalg::conjugate(unitary, &self.matrix),
        )))
    }
}

/// A letter-indexed family of operators on a common space.
#[derive(Debug, Clone, PartialEq)]
pub struct Realization {
    operators: BTreeMap<Letter, DensityOperator>,
    dimension: usize,
    normalized: bool,
}

impl Realization {
    /// Checks that all operators share a dimension and, when `normalized`
    /// is set, that each has unit trace.
    pub fn new(operators: BTreeMap<Letter, DensityOperator>, normalized: bool) -> Result<Self> {
        let dimension = operators
            .values()
            .next()
            .map(DensityOperator::dimension)
            .ok_or_else(|| Error::InvalidRealization("no operators".into()))?;
        if operators.contains_key(&0) {
            return Err(Error::InvalidRealization("letters must be positive".into()));
        }
        for op in operators.values() {
            if op.dimension() != dimension {
                return Err(Error::DimensionMismatch {
                    expected: dimension,
                    found: op.dimension(),
                });
            }
        }
        if normalized {
            for (l, op) in &operators {
                let t = op.trace();
                if (t - 1.0).abs() > TRACE_TOL {
                    return Err(Error::InvalidRealization(format!(
                        "operator for letter {l} has trace {t}, expected 1"
                    )));
                }
            }
        }
        Ok(Realization {
            operators,
            dimension,
            normalized,
        })
    }

    /// Letters `1..=n` assigned to `ops` in order.
    pub fn from_sequence(ops: Vec<DensityOperator>, normalized: bool) -> Result<Self> {
        let map = ops
            .into_iter()
            .enumerate()
            .map(|(i, op)| (i as Letter + 1, op))
            .collect();
        Realization::new(map, normalized)
    }

    pub(crate) fn trusted(
        operators: BTreeMap<Letter, DensityOperator>,
        dimension: usize,
        normalized: bool,
    ) -> Self {
        Realization {
            operators,
            dimension,
            normalized,
        }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.operators.keys().copied()
    }

    pub fn operators(&self) -> &BTreeMap<Letter, DensityOperator> {
        &self.operators
    }

    pub fn get(&self, l: Letter) -> Result<&DensityOperator> {
        self.operators.get(&l).ok_or(Error::UnknownLetter(l))
    }

    /// Conjugates every operator by the same unitary.
    pub fn conjugated(&self, unitary: &CMatrix) -> Result<Self> {
        let operators = self
            .operators
            .iter()
            .map(|(&l, op)| Ok((l, op.conjugated(unitary)?)))
            .collect::<Result<_>>()?;
        Ok(Realization::trusted(
            operators,
            self.dimension,
            self.normalized,
        ))
    }

    pub(crate) fn same_letters(&self, other: &Realization) -> bool {
        self.operators.keys().eq(other.operators.keys())
    }
}

/// Invariant values keyed by a scenario's words, in coordinate order.
#[derive(Debug, Clone, PartialEq)]
pub struct InvariantVector {
    words: Vec<Word>,
    values: Vec<Complex64>,
}

impl InvariantVector {
    pub fn new(scenario: &Scenario, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != scenario.len() {
            return Err(Error::DimensionMismatch {
                expected: scenario.len(),
                found: values.len(),
            });
        }
        Ok(InvariantVector {
            words: scenario.words().to_vec(),
            values,
        })
    }

    pub fn from_real(scenario: &Scenario, values: &[f64]) -> Result<Self> {
        InvariantVector::new(
            scenario,
            values.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
        )
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, w: &Word) -> Option<Complex64> {
        self.words.binary_search(w).ok().map(|i| self.values[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, Complex64)> {
        self.words.iter().zip(self.values.iter().copied())
    }

    pub fn real_parts(&self) -> Vec<f64> {
        self.values.iter().map(|z| z.re).collect()
    }

    pub fn max_imaginary(&self) -> f64 {
        self.values.iter().fold(0.0, |m, z| m.max(z.im.abs()))
    }

    fn check_keys(&self, scenario: &Scenario) -> Result<()> {
        if self.words != scenario.words() {
            return Err(Error::Precondition(
                "invariant vector is not keyed by this scenario".into(),
            ));
        }
        Ok(())
    }
}

/// `Tr(rho_l1 rho_l2 ... rho_lm)`, multiplied left to right.
pub fn bargmann(r: &Realization, w: &Word) -> Result<Complex64> {
    let letters = w.letters();
    let mut product = r.get(letters[0])?.matrix().clone();
    for &l in &letters[1..] {
        product *= r.get(l)?.matrix();
    }
    Ok(linalg::trace(&product))
}

/// Bargmann invariants of `r` for every word of `s`.
pub fn evaluate(r: &Realization, s: &Scenario) -> Result<InvariantVector> {
    let values = s
        .words()
        .iter()
        .map(|w| bargmann(r, w))
        .collect::<Result<Vec<_>>>()?;
    InvariantVector::new(s, values)
}

/// Gram matrix of a tuple of pure states, rows and columns labeled by
/// letters.
#[derive(Debug, Clone, PartialEq)]
pub struct GramMatrix {
    letters: Vec<Letter>,
    matrix: CMatrix,
}

impl GramMatrix {
    pub fn new(letters: Vec<Letter>, matrix: CMatrix) -> Result<Self> {
        if !matrix.is_square() || matrix.nrows() != letters.len() {
            return Err(Error::DimensionMismatch {
                expected: letters.len(),
                found: matrix.nrows(),
            });
        }
        let mut sorted = letters.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != letters.len() || sorted.first() == Some(&0) {
            return Err(Error::InvalidRealization(
                "Gram letters must be distinct positive integers".into(),
            ));
        }
        let deviation = linalg::hermitian_deviation(&matrix);
        if deviation > HERMITIAN_TOL {
            return Err(Error::NotHermitian { deviation });
        }
        let min_eigenvalue = linalg::min_eigenvalue(&matrix);
        if min_eigenvalue < -PSD_TOL {
            return Err(Error::NotRealizable { min_eigenvalue });
        }
        Ok(GramMatrix { letters, matrix })
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    fn index(&self, l: Letter) -> Result<usize> {
        self.letters
            .iter()
            .position(|&x| x == l)
            .ok_or(Error::UnknownLetter(l))
    }

    pub fn entry(&self, a: Letter, b: Letter) -> Result<Complex64> {
        Ok(self.matrix[(self.index(a)?, self.index(b)?)])
    }

    /// Pure states `psi_l` with `<psi_a|psi_b> = G[a,b]`, from the factor
    /// `sqrt(Lambda) U^dagger` of `G = U Lambda U^dagger`.
    pub fn pure_realization(&self) -> Result<Realization> {
        let eig = linalg::hermitian_part(&self.matrix).symmetric_eigen();
        let n = self.letters.len();
        let factor = CMatrix::from_fn(n, n, |i, j| {
            Complex64::new(eig.eigenvalues[i].max(0.0).sqrt(), 0.0)
                * eig.eigenvectors[(j, i)].conj()
        });
        let operators = self
            .letters
            .iter()
            .enumerate()
            .map(|(j, &l)| (l, DensityOperator::pure(&factor.column(j).into_owned())))
            .collect();
        let normalized = (0..n).all(|i| (self.matrix[(i, i)].re - 1.0).abs() <= TRACE_TOL);
        Ok(Realization::trusted(operators, n, normalized))
    }
}

/// Cycle products `G[l1,l2] G[l2,l3] ... G[lm,l1]` for every word of `s`.
pub fn gram_invariants(g: &GramMatrix, s: &Scenario) -> Result<InvariantVector> {
    let values = s
        .words()
        .iter()
        .map(|w| {
            let letters = w.letters();
            let m = letters.len();
            (0..m).try_fold(Complex64::new(1.0, 0.0), |acc, i| {
                Ok(acc * g.entry(letters[i], letters[(i + 1) % m])?)
            })
        })
        .collect::<Result<Vec<_>>>()?;
    InvariantVector::new(s, values)
}

/// Per-letter probability distributions over a shared alphabet.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassicalModel {
    alphabet: usize,
    distributions: BTreeMap<Letter, Vec<f64>>,
}

impl ClassicalModel {
    pub fn new(distributions: BTreeMap<Letter, Vec<f64>>) -> Result<Self> {
        let alphabet = distributions
            .values()
            .next()
            .map(Vec::len)
            .ok_or_else(|| Error::InvalidDistribution("no letters".into()))?;
        if alphabet == 0 {
            return Err(Error::InvalidDistribution("empty alphabet".into()));
        }
        for (l, p) in &distributions {
            if p.len() != alphabet {
                return Err(Error::InvalidDistribution(format!(
                    "letter {l} has {} outcomes, expected {alphabet}",
                    p.len()
                )));
            }
            if p.iter().any(|&x| x < 0.0 || !x.is_finite()) {
                return Err(Error::InvalidDistribution(format!(
                    "letter {l} has a negative or non-finite probability"
                )));
            }
            let total: f64 = p.iter().sum();
            if (total - 1.0).abs() > DISTRIBUTION_TOL {
                return Err(Error::InvalidDistribution(format!(
                    "letter {l} sums to {total}"
                )));
            }
        }
        Ok(ClassicalModel {
            alphabet,
            distributions,
        })
    }

    /// Delta distributions `p_l = e_{colors[l]}` over `alphabet` outcomes;
    /// colors are 0-based.
    pub fn deterministic(colors: &BTreeMap<Letter, usize>, alphabet: usize) -> Result<Self> {
        let distributions = colors
            .iter()
            .map(|(&l, &c)| {
                if c >= alphabet {
                    return Err(Error::InvalidDistribution(format!(
                        "color {c} outside alphabet of size {alphabet}"
                    )));
                }
                let mut p = alloc::vec![0.0; alphabet];
                p[c] = 1.0;
                Ok((l, p))
            })
            .collect::<Result<_>>()?;
        ClassicalModel::new(distributions)
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn distribution(&self, l: Letter) -> Result<&[f64]> {
        self.distributions
            .get(&l)
            .map(Vec::as_slice)
            .ok_or(Error::UnknownLetter(l))
    }

    pub fn distributions(&self) -> &BTreeMap<Letter, Vec<f64>> {
        &self.distributions
    }
}

/// `z_w = sum_lambda prod_i p^(l_i)_lambda`, the probability that every
/// party named in `w` sees the same outcome.
pub fn classical_point(p: &ClassicalModel, s: &Scenario) -> Result<InvariantVector> {
    let values = s
        .words()
        .iter()
        .map(|w| {
            let dists = w
                .letters()
                .iter()
                .map(|&l| p.distribution(l))
                .collect::<Result<Vec<_>>>()?;
            let z: f64 = (0..p.alphabet())
                .map(|lambda| dists.iter().map(|d| d[lambda]).product::<f64>())
                .sum();
            Ok(Complex64::new(z, 0.0))
        })
        .collect::<Result<Vec<_>>>()?;
    InvariantVector::new(s, values)
}

/// States diagonal in the computational basis with the model's
/// distributions on the diagonal.
pub fn incoherent_realization(p: &ClassicalModel) -> Result<Realization> {
    let operators = p
        .distributions()
        .iter()
        .map(|(&l, d)| (l, DensityOperator::trusted(linalg::diagonal(d))))
        .collect();
    Ok(Realization::trusted(operators, p.alphabet(), true))
}

/// `f(z) = sum_l Re z_(l,...,l)`; nonnegative on every quantum point of a
/// length-homogeneous scenario holding all repeat words.
pub fn pointedness_functional(v: &InvariantVector, s: &Scenario) -> Result<f64> {
    v.check_keys(s)?;
    if !classify(s).contains_all_single_letter_repeats {
        return Err(Error::Precondition(
            "scenario must be length-homogeneous and contain every repeat word (l,...,l)".into(),
        ));
    }
    Ok(v.iter()
        .filter(|(w, _)| w.repeated_letter().is_some())
        .map(|(_, z)| z.re)
        .sum())
}

/// `Tr(rho_1^2) + Tr(rho_2^2) - 2 Tr(rho_1 rho_2)`, the squared
/// Schatten-2 distance between letters 1 and 2.
pub fn schatten2_distance_sq(r: &Realization) -> Result<f64> {
    let word = |seq: &[Letter]| Word::new(seq);
    let z11 = bargmann(r, &word(&[1, 1])?)?;
    let z22 = bargmann(r, &word(&[2, 2])?)?;
    let z12 = bargmann(r, &word(&[1, 2])?)?;
    Ok(z11.re + z22.re - 2.0 * z12.re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{ket_plus, ket_zero};
    use crate::scenario::build_scenario;
    use alloc::vec;

    fn zero_plus() -> Realization {
        Realization::from_sequence(
            vec![
                DensityOperator::pure(&ket_zero()),
                DensityOperator::pure(&ket_plus()),
            ],
            true,
        )
        .unwrap()
    }

    fn w(seq: &[Letter]) -> Word {
        Word::new(seq).unwrap()
    }

    #[test]
    fn overlap_of_zero_and_plus() {
        let z = bargmann(&zero_plus(), &w(&[1, 2])).unwrap();
        assert!((z - Complex64::new(0.5, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn purity_of_maximally_mixed_qubit() {
        let r =
            Realization::from_sequence(vec![DensityOperator::diagonal(&[0.5, 0.5]).unwrap()], true)
                .unwrap();
        assert!((bargmann(&r, &w(&[1, 1])).unwrap().re - 0.5).abs() < 1e-15);
    }

    #[test]
    fn order_two_three_four_witness_value() {
        let rho = DensityOperator::pure(&ket_zero());
        let sigma = DensityOperator::pure(&ket_plus());
        let r =
            Realization::from_sequence(vec![rho.clone(), rho, sigma.clone(), sigma], true).unwrap();
        let value = -bargmann(&r, &w(&[1, 4])).unwrap()
            + bargmann(&r, &w(&[1, 4, 2])).unwrap()
            + bargmann(&r, &w(&[1, 4, 3])).unwrap()
            - bargmann(&r, &w(&[1, 4, 2, 3])).unwrap();
        assert!((value - Complex64::new(0.25, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn unknown_letter_and_dimension_mismatch() {
        assert_eq!(
            bargmann(&zero_plus(), &w(&[1, 3])),
            Err(Error::UnknownLetter(3))
        );
        let err = Realization::from_sequence(
            vec![
                DensityOperator::diagonal(&[1.0, 0.0]).unwrap(),
                DensityOperator::diagonal(&[1.0, 0.0, 0.0]).unwrap(),
            ],
            true,
        )
        .unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
    }

    #[test]
    fn rejects_non_psd_and_non_hermitian() {
        assert!(matches!(
            DensityOperator::diagonal(&[1.0, -0.1]),
            Err(Error::NotPositive { .. })
        ));
        let m = linalg::from_real_rows(&[&[1.0, 0.2], &[0.1, 0.0]]);
        assert!(matches!(
            DensityOperator::new(m),
            Err(Error::NotHermitian { .. })
        ));
        let unnormalized = DensityOperator::diagonal(&[1.0, 1.0]).unwrap();
        assert!(Realization::from_sequence(vec![unnormalized.clone()], true).is_err());
        assert!(Realization::from_sequence(vec![unnormalized], false).is_ok());
    }

    #[test]
    fn evaluate_examples() {
        let two_word = build_scenario(&[vec![1, 1, 2, 2], vec![1, 2, 1, 2]]).unwrap();
        let v = evaluate(&zero_plus(), &two_word).unwrap();
        assert!((v.values()[0].re - 0.5).abs() < 1e-15);
        assert!((v.values()[1].re - 0.25).abs() < 1e-15);

        let spectro = build_scenario(&[vec![1], vec![1, 1]]).unwrap();
        let mixed =
            Realization::from_sequence(vec![DensityOperator::diagonal(&[0.5, 0.5]).unwrap()], true)
                .unwrap();
        let v = evaluate(&mixed, &spectro).unwrap();
        assert_eq!(v.real_parts(), vec![1.0, 0.5]);

        let same = Realization::from_sequence(
            vec![
                DensityOperator::pure(&ket_plus()),
                DensityOperator::pure(&ket_plus()),
            ],
            true,
        )
        .unwrap();
        let s = build_scenario(&[vec![1, 2], vec![1, 1, 2], vec![1, 2, 1, 2], vec![2]]).unwrap();
        for (_, z) in evaluate(&same, &s).unwrap().iter() {
            assert!((z - Complex64::new(1.0, 0.0)).norm() < 1e-14);
        }
    }

    #[test]
    fn gram_examples() {
        let h = core::f64::consts::FRAC_1_SQRT_2;
        let g =
            GramMatrix::new(vec![1, 2], linalg::from_real_rows(&[&[1.0, h], &[h, 1.0]])).unwrap();
        let s = build_scenario(&[vec![1, 2]]).unwrap();
        assert!((gram_invariants(&g, &s).unwrap().values()[0].re - 0.5).abs() < 1e-15);

        let id = GramMatrix::new(vec![1, 2, 3], CMatrix::identity(3, 3)).unwrap();
        let s = build_scenario(&[vec![1, 2], vec![1, 2, 3], vec![1, 1, 2]]).unwrap();
        assert!(gram_invariants(&id, &s)
            .unwrap()
            .values()
            .iter()
            .all(|z| z.norm() == 0.0));

        let ones =
            GramMatrix::new(vec![1, 2, 3], CMatrix::from_element(3, 3, linalg::ONE)).unwrap();
        assert!(gram_invariants(&ones, &s)
            .unwrap()
            .values()
            .iter()
            .all(|z| (z - linalg::ONE).norm() == 0.0));

        let bad = GramMatrix::new(
            vec![1, 2],
            linalg::from_real_rows(&[&[1.0, 2.0], &[2.0, 1.0]]),
        );
        assert!(matches!(bad, Err(Error::NotRealizable { .. })));
    }

    #[test]
    fn gram_pure_realization_reproduces_entries() {
        let g = GramMatrix::new(
            vec![1, 2, 3],
            CMatrix::from_fn(3, 3, |i, j| match (i, j) {
                (a, b) if a == b => linalg::ONE,
                (0, 1) => linalg::c(0.3, 0.4),
                (1, 0) => linalg::c(0.3, -0.4),
                (0, 2) | (2, 0) => linalg::c(0.2, 0.0),
                (1, 2) => linalg::c(0.0, 0.1),
                _ => linalg::c(0.0, -0.1),
            }),
        )
        .unwrap();
        let r = g.pure_realization().unwrap();
        assert!(r.is_normalized());
        let s = crate::scenario::full_scenario(3, 4).unwrap();
        let a = gram_invariants(&g, &s).unwrap();
        let b = evaluate(&r, &s).unwrap();
        for (x, y) in a.values().iter().zip(b.values()) {
            assert!((x - y).norm() < 1e-10);
        }
    }

    #[test]
    fn classical_point_examples() {
        let s = build_scenario(&[vec![1, 2], vec![1, 3], vec![2, 3], vec![1, 2, 3]]).unwrap();
        let colors: BTreeMap<Letter, usize> = [(1, 0), (2, 0), (3, 1)].into_iter().collect();
        let p = ClassicalModel::deterministic(&colors, 3).unwrap();
        assert_eq!(
            classical_point(&p, &s).unwrap().real_parts(),
            vec![1.0, 0.0, 0.0, 0.0]
        );

        let uniform: BTreeMap<Letter, Vec<f64>> = (1..=3).map(|l| (l, vec![0.5, 0.5])).collect();
        let p = ClassicalModel::new(uniform).unwrap();
        let v = classical_point(&p, &s).unwrap().real_parts();
        assert_eq!(v, vec![0.5, 0.5, 0.5, 0.25]);

        let two_word = build_scenario(&[vec![1, 1, 2, 2], vec![1, 2, 1, 2]]).unwrap();
        let p = ClassicalModel::new(
            [(1, vec![0.2, 0.3, 0.5]), (2, vec![0.6, 0.1, 0.3])]
                .into_iter()
                .collect(),
        )
        .unwrap();
        let v = classical_point(&p, &two_word).unwrap().real_parts();
        assert!((v[0] - v[1]).abs() < 1e-15);
    }

    #[test]
    fn classical_model_validation() {
        let bad_sum = ClassicalModel::new([(1, vec![0.5, 0.6])].into_iter().collect());
        assert!(matches!(bad_sum, Err(Error::InvalidDistribution(_))));
        let negative = ClassicalModel::new([(1, vec![1.5, -0.5])].into_iter().collect());
        assert!(matches!(negative, Err(Error::InvalidDistribution(_))));
        let ragged =
            ClassicalModel::new([(1, vec![1.0]), (2, vec![0.5, 0.5])].into_iter().collect());
        assert!(matches!(ragged, Err(Error::InvalidDistribution(_))));
    }

    #[test]
    fn incoherent_matches_classical() {
        let p = ClassicalModel::new(
            [
                (1, vec![0.2, 0.3, 0.5]),
                (2, vec![0.6, 0.1, 0.3]),
                (3, vec![0.0, 1.0, 0.0]),
            ]
            .into_iter()
            .collect(),
        )
        .unwrap();
        let s = crate::scenario::full_scenario(3, 4).unwrap();
        let a = classical_point(&p, &s).unwrap();
        let b = evaluate(&incoherent_realization(&p).unwrap(), &s).unwrap();
        for (x, y) in a.values().iter().zip(b.values()) {
            assert!((x - y).norm() < 1e-12);
        }
    }

    #[test]
    fn pointedness_examples() {
        let s = build_scenario(&[vec![1, 1], vec![2, 2], vec![1, 2]]).unwrap();
        let zero = Realization::from_sequence(
            vec![DensityOperator::diagonal(&[0.0, 0.0]).unwrap(); 2],
            false,
        )
        .unwrap();
        assert_eq!(
            pointedness_functional(&evaluate(&zero, &s).unwrap(), &s).unwrap(),
            0.0
        );
        let f = pointedness_functional(&evaluate(&zero_plus(), &s).unwrap(), &s).unwrap();
        assert!((f - 2.0).abs() < 1e-14);

        let two_word = build_scenario(&[vec![1, 1, 2, 2], vec![1, 2, 1, 2]]).unwrap();
        let v = evaluate(&zero_plus(), &two_word).unwrap();
        assert!(pointedness_functional(&v, &two_word).is_err());
        assert!(pointedness_functional(&v, &s).is_err());
    }

    #[test]
    fn schatten_distance_examples() {
        let one = DensityOperator::diagonal(&[0.0, 1.0]).unwrap();
        let zero = DensityOperator::pure(&ket_zero());
        let same = Realization::from_sequence(vec![zero.clone(), zero.clone()], true).unwrap();
        assert!(schatten2_distance_sq(&same).unwrap().abs() < 1e-15);
        let ortho = Realization::from_sequence(vec![zero, one], true).unwrap();
        assert!((schatten2_distance_sq(&ortho).unwrap() - 2.0).abs() < 1e-15);
        assert!((schatten2_distance_sq(&zero_plus()).unwrap() - 1.0).abs() < 1e-15);
    }
}

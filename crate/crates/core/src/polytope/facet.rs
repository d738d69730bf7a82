use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use super::hull::LinearConstraint;
use super::vertices::VertexSet;
use crate::error::{Error, Result};
use crate::exact::{self, Rational};
use crate::scenario::{canonical_form, Letter, Scenario};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Enumerated,
    UserSupplied,
}

/// `coefficients · z <= offset` over a scenario's words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetInequality {
    pub coefficients: Vec<Rational>,
    pub offset: Rational,
    pub provenance: Provenance,
}

impl FacetInequality {
    pub fn new(coefficients: Vec<Rational>, offset: Rational, provenance: Provenance) -> Self {
        FacetInequality {
            coefficients,
            offset,
            provenance,
        }
    }

    pub fn from_constraint(c: &LinearConstraint) -> Self {
        FacetInequality {
            coefficients: c
                .a
                .iter()
                .map(|x| Rational::from_integer(x.clone()))
                .collect(),
            offset: Rational::from_integer(c.b.clone()),
            provenance: Provenance::Enumerated,
        }
    }

    /// Sparse construction: each term names a word (any rotation) and its
    /// coefficient; repeated words accumulate.
    pub fn from_terms<W: AsRef<[Letter]>>(
        s: &Scenario,
        terms: &[(W, Rational)],
        offset: Rational,
    ) -> Result<Self> {
        let mut coefficients = alloc::vec![Rational::zero(); s.len()];
        for (w, q) in terms {
            let canon = canonical_form(w.as_ref())?;
            let idx = s.index_of(&canon).ok_or_else(|| {
                Error::InvalidWord(alloc::format!("word {canon} is not in the scenario"))
            })?;
            coefficients[idx] += q;
        }
        Ok(FacetInequality::new(
            coefficients,
            offset,
            Provenance::UserSupplied,
        ))
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// `coefficients · z - offset`; positive values are violations.
    pub fn excess_f64(&self, z: &[f64]) -> f64 {
        let lhs: f64 = self
            .coefficients
            .iter()
            .zip(z)
            .map(|(q, x)| exact::to_f64(q) * x)
            .sum();
        lhs - exact::to_f64(&self.offset)
    }

    fn excess_vertex(&self, v: &[u8]) -> Rational {
        let lhs: Rational = self
            .coefficients
            .iter()
            .zip(v)
            .filter(|(_, &b)| b != 0)
            .map(|(q, _)| q.clone())
            .sum();
        lhs - &self.offset
    }

    /// Integer form with gcd 1 (same orientation).
    pub fn to_constraint(&self) -> LinearConstraint {
        let mut row = self.coefficients.clone();
        row.push(self.offset.clone());
        let mut ints = exact::integer_direction(&row);
        let b = ints.pop().unwrap_or_else(BigInt::zero);
        LinearConstraint { a: ints, b }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FacetCheck {
    pub valid: bool,
    pub facet_defining: bool,
    pub saturating_count: usize,
}

/// Validity and facet certification of `c` against the vertices, in exact
/// arithmetic. Facet-defining means valid with saturating vertices spanning
/// an affine space of dimension `dim(P) - 1`; a polytope of dimension 0 has
/// no facets.
pub fn verify_facet(c: &FacetInequality, v: &VertexSet) -> Result<FacetCheck> {
    if c.len() != v.ambient_dimension() {
        return Err(Error::DimensionMismatch {
            expected: v.ambient_dimension(),
            found: c.len(),
        });
    }
    let mut valid = true;
    let mut saturating: Vec<&[u8]> = Vec::new();
    for p in v.vertices() {
        let e = c.excess_vertex(p);
        if e > Rational::zero() {
            valid = false;
        } else if e.is_zero() {
            saturating.push(p);
        }
    }
    let dim = v.dimension();
    let facet_defining =
        valid && dim > 0 && exact::affine_dimension(&saturating).is_some_and(|d| d + 1 == dim);
    Ok(FacetCheck {
        valid,
        facet_defining,
        saturating_count: saturating.len(),
    })
}

/// Index and value of the point maximizing `a·z - b`; ties go to the first
/// occurrence. `None` for an empty list.
pub fn max_violation(c: &FacetInequality, points: &[Vec<f64>]) -> Option<(usize, f64)> {
    let mut best: Option<(usize, f64)> = None;
    for (i, z) in points.iter().enumerate() {
        let e = c.excess_f64(z);
        if best.is_none_or(|(_, b)| e > b) {
            best = Some((i, e));
        }
    }
    best
}

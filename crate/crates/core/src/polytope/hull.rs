use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::vertices::VertexSet;
use crate::error::{Error, Result};
use crate::exact::{self, Rational};
use crate::scenario::Scenario;

/// Integer constraint `a · z (= or <=) b`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearConstraint {
    pub a: Vec<BigInt>,
    pub b: BigInt,
}

impl LinearConstraint {
    pub fn value_f64(&self, z: &[f64]) -> f64 {
        self.a
            .iter()
            .zip(z)
            .map(|(a, x)| bigint_to_f64(a) * x)
            .sum::<f64>()
    }

    pub fn value_exact(&self, z: &[Rational]) -> Rational {
        self.a.iter().zip(z).map(|(a, x)| x * a).sum()
    }

    pub fn offset_f64(&self) -> f64 {
        bigint_to_f64(&self.b)
    }

    /// Human readable form over the scenario's word keys, e.g.
    /// `z12 + z13 - 2 z123 <= 1`.
    pub fn display<'a>(
        &'a self,
        scenario: &'a Scenario,
        relation: &'a str,
    ) -> impl fmt::Display + 'a {
        ConstraintDisplay {
            constraint: self,
            scenario,
            relation,
        }
    }
}

fn bigint_to_f64(x: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

struct ConstraintDisplay<'a> {
    constraint: &'a LinearConstraint,
    scenario: &'a Scenario,
    relation: &'a str,
}

impl fmt::Display for ConstraintDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (a, w) in self.constraint.a.iter().zip(self.scenario.words()) {
            if a.is_zero() {
                continue;
            }
            let mag = a.abs();
            let sign = if a.is_negative() { "-" } else { "+" };
            match (first, a.is_negative()) {
                (true, false) => {}
                (true, true) => f.write_str("-")?,
                _ => write!(f, " {sign} ")?,
            }
            if mag != BigInt::from(1) {
                write!(f, "{mag} ")?;
            }
            write!(f, "z{}", w.key())?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " {} {}", self.relation, self.constraint.b)
    }
}

/// Affine hull of a vertex set: its dimension and an equality system in
/// reduced echelon form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineHull {
    pub dimension: usize,
    pub equalities: Vec<LinearConstraint>,
    /// Leading coordinate of each equality, eliminated when projecting.
    pub pivots: Vec<usize>,
}

pub fn affine_hull(v: &VertexSet) -> AffineHull {
    let base = &v.vertices()[0];
    let n = v.ambient_dimension();
    let diffs: Vec<Vec<Rational>> = v.vertices()[1..]
        .iter()
        .map(|p| {
            p.iter()
                .zip(base)
                .map(|(&x, &y)| exact::from_int(x as i64 - y as i64))
                .collect()
        })
        .collect();
    let dimension = exact::rank(&diffs);
    let null = exact::nullspace(&diffs, n);
    let mut pivots = Vec::with_capacity(null.len());
    let equalities = null
        .iter()
        .map(|row| {
            let a = exact::integer_direction(row);
            pivots.push(a.iter().position(|x| !x.is_zero()).expect("nonzero row"));
            let b = exact::dot_01(&a, base);
            LinearConstraint { a, b }
        })
        .collect();
    AffineHull {
        dimension,
        equalities,
        pivots,
    }
}

/// Size gates for full facet enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HullLimits {
    pub max_vertices: usize,
    pub max_ambient_dimension: usize,
}

impl Default for HullLimits {
    fn default() -> Self {
        HullLimits {
            max_vertices: 5000,
            max_ambient_dimension: 24,
        }
    }
}

/// Equalities plus facet inequalities `a · z <= b` of the polytope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HRepresentation {
    scenario: Scenario,
    dimension: usize,
    equalities: Vec<LinearConstraint>,
    inequalities: Vec<LinearConstraint>,
}

impl HRepresentation {
    pub fn new(
        scenario: Scenario,
        dimension: usize,
        equalities: Vec<LinearConstraint>,
        inequalities: Vec<LinearConstraint>,
    ) -> Result<Self> {
        let n = scenario.len();
        if let Some(c) = equalities
            .iter()
            .chain(&inequalities)
            .find(|c| c.a.len() != n)
        {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: c.a.len(),
            });
        }
        Ok(HRepresentation {
            scenario,
            dimension,
            equalities,
            inequalities,
        })
    }

    pub fn scenario(&self) -> &Scenario {
        &self.scenario
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn equalities(&self) -> &[LinearConstraint] {
        &self.equalities
    }

    pub fn inequalities(&self) -> &[LinearConstraint] {
        &self.inequalities
    }
}

pub fn facet_enumerate(v: &VertexSet) -> Result<HRepresentation> {
    facet_enumerate_with(v, HullLimits::default())
}

/// Complete irredundant facet system by double description.
///
/// The vertices are projected onto the coordinates that are not leading
/// coordinates of the affine-hull equalities, where the polytope is full
/// dimensional. Facets of the projected polytope are the extreme rays of
/// the cone `{(b, -a) : b - a · v >= 0 for all vertices v}`; each is lifted
/// back with zeros on the eliminated coordinates.
pub fn facet_enumerate_with(v: &VertexSet, limits: HullLimits) -> Result<HRepresentation> {
    if v.len() > limits.max_vertices {
        return Err(Error::ResourceLimit {
            what: "facet enumeration (vertices)",
            required: v.len() as u128,
            cap: limits.max_vertices as u128,
        });
    }
    if v.ambient_dimension() > limits.max_ambient_dimension {
        return Err(Error::ResourceLimit {
            what: "facet enumeration (ambient dimension)",
            required: v.ambient_dimension() as u128,
            cap: limits.max_ambient_dimension as u128,
        });
    }
    let hull = affine_hull(v);
    let n = v.ambient_dimension();
    let free: Vec<usize> = (0..n).filter(|c| !hull.pivots.contains(c)).collect();
    debug_assert_eq!(free.len(), hull.dimension);

    let mut inequalities = Vec::new();
    if hull.dimension > 0 {
        let generators: Vec<Vec<BigInt>> = v
            .vertices()
            .iter()
            .map(|p| {
                let mut g = Vec::with_capacity(free.len() + 1);
                g.push(BigInt::from(1));
                g.extend(free.iter().map(|&c| BigInt::from(p[c])));
                g
            })
            .collect();
        for ray in dual_extreme_rays(&generators) {
            let mut a = vec![BigInt::zero(); n];
            for (k, &c) in free.iter().enumerate() {
                a[c] = -&ray[k + 1];
            }
            inequalities.push(LinearConstraint {
                a,
                b: ray[0].clone(),
            });
        }
        inequalities.sort();
    }
    HRepresentation::new(
        v.scenario().clone(),
        hull.dimension,
        hull.equalities,
        inequalities,
    )
}

#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn and(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }
    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
    fn contains(&self, o: &Bits) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a & b == *b)
    }
}

struct Ray {
    coords: Vec<BigInt>,
    zeros: Bits,
}

/// Extreme rays of `{y : g · y >= 0 for all generators g}`, assuming the
/// generators span the whole space.
fn dual_extreme_rays(generators: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let d = generators[0].len();
    let m = generators.len();

    // greedy choice of d independent generators
    let mut basis: Vec<usize> = Vec::with_capacity(d);
    let mut echelon: Vec<Vec<Rational>> = Vec::new();
    for (i, g) in generators.iter().enumerate() {
        let mut trial = echelon.clone();
        trial.push(
            g.iter()
                .map(|x| Rational::from_integer(x.clone()))
                .collect(),
        );
        if exact::rank(&trial) > echelon.len() {
            echelon = trial;
            basis.push(i);
            if basis.len() == d {
                break;
            }
        }
    }
    assert_eq!(basis.len(), d, "generators must span the space");

    // columns of the inverse of the basis matrix are the initial rays
    let mut aug: Vec<Vec<Rational>> = basis
        .iter()
        .enumerate()
        .map(|(r, &i)| {
            let mut row: Vec<Rational> = generators[i]
                .iter()
                .map(|x| Rational::from_integer(x.clone()))
                .collect();
            row.extend((0..d).map(|k| exact::from_int(i64::from(k == r))));
            row
        })
        .collect();
    exact::rref(&mut aug);
    let mut rays: Vec<Ray> = (0..d)
        .map(|j| {
            let col: Vec<Rational> = (0..d).map(|i| aug[i][d + j].clone()).collect();
            let mut zeros = Bits::new(m);
            for (k, &b) in basis.iter().enumerate() {
                if k != j {
                    zeros.set(b);
                }
            }
            Ray {
                coords: exact::integer_direction(&col),
                zeros,
            }
        })
        .collect();

    let mut in_basis = vec![false; m];
    for &b in &basis {
        in_basis[b] = true;
    }
    for (i, g) in generators.iter().enumerate() {
        if in_basis[i] {
            continue;
        }
        let values: Vec<BigInt> = rays.iter().map(|r| exact::dot_int(g, &r.coords)).collect();
        let pos: Vec<usize> = (0..rays.len())
            .filter(|&k| values[k].is_positive())
            .collect();
        let neg: Vec<usize> = (0..rays.len())
            .filter(|&k| values[k].is_negative())
            .collect();
        if neg.is_empty() {
            for (r, val) in rays.iter_mut().zip(&values) {
                if val.is_zero() {
                    r.zeros.set(i);
                }
            }
            continue;
        }
        let mut created = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].zeros.and(&rays[q].zeros);
                if common.count() + 2 < d {
                    continue;
                }
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(k, r)| k == p || k == q || !r.zeros.contains(&common));
                if !adjacent {
                    continue;
                }
                let mut coords: Vec<BigInt> = rays[q]
                    .coords
                    .iter()
                    .zip(&rays[p].coords)
                    .map(|(yq, yp)| &values[p] * yq - &values[q] * yp)
                    .collect();
                exact::primitive(&mut coords);
                let mut zeros = common;
                zeros.set(i);
                created.push(Ray { coords, zeros });
            }
        }
        let mut kept: Vec<Ray> = Vec::with_capacity(rays.len() - neg.len() + created.len());
        for (r, val) in rays.into_iter().zip(&values) {
            if val.is_negative() {
                continue;
            }
            let mut r = r;
            if val.is_zero() {
                r.zeros.set(i);
            }
            kept.push(r);
        }
        kept.extend(created);
        rays = kept;
    }
    rays.into_iter().map(|r| r.coords).collect()
}

//! The claims suite: one outcome per acceptance criterion, each made of
//! named sub-checks.
//!
//! Reports are deterministic for a given seed. Wall-clock limits are
//! checked but elapsed times are not printed, so repeated runs produce
//! identical text.

use std::fmt::Write as _;
use std::path::Path;
use std::time::{Duration, Instant};

use bargmann_core::analytic::{two_word_scenario, TwoWordPoint};
use bargmann_core::combinators::{direct_sum_mix, hadamard_combine, shrink};
use bargmann_core::exact::{self, Rational};
use bargmann_core::families::{designolle_pair, ket_plus, ket_zero, obg_states};
use bargmann_core::linalg::{self, CMatrix};
use bargmann_core::polytope::{membership, membership_exact, Polytope, VertexSet};
use bargmann_core::random::{
    random_model, random_positive, random_qubit, random_realization, random_unitary, rng, SeededRng,
};
use bargmann_core::{
    bargmann, build_scenario, classical_point, evaluate, event_graph_scenario, facet_enumerate,
    full_scenario, max_violation, pointedness_functional, schatten2_distance_sq, verify_facet,
    vertex_enumerate, DensityOperator, FacetInequality, Letter, Realization, Scenario, Verdict,
    Word,
};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};
use rand::Rng;

use crate::io::{self, FacetTable};

/// Seed used when `--seed` is not given.
pub const DEFAULT_SEED: u64 = 20_250_101;

const FOUR_WORD_TABLE: &str = include_str!("../fixtures/four_word_facets.json");

pub fn builtin_facet_table() -> FacetTable {
    io::parse_facet_table(
        Path::new("<built-in four_word_facets.json>"),
        FOUR_WORD_TABLE,
    )
    .expect("built-in facet table parses")
}

pub struct ClaimsConfig {
    pub seed: u64,
    pub facet_table: FacetTable,
}

impl Default for ClaimsConfig {
    fn default() -> Self {
        ClaimsConfig {
            seed: DEFAULT_SEED,
            facet_table: builtin_facet_table(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub id: u8,
    pub title: &'static str,
    pub checks: Vec<Check>,
    pub elapsed: Duration,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// `criterion N: PASS|FAIL  title`, followed by the failing sub-checks.
    pub fn line(&self) -> String {
        let mut s = format!(
            "criterion {}: {}  {}",
            self.id,
            if self.passed() { "PASS" } else { "FAIL" },
            self.title
        );
        let failing: Vec<String> = self
            .checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| format!("{} ({})", c.name, c.detail))
            .collect();
        if !failing.is_empty() {
            let _ = write!(s, "  [failed: {}]", failing.join("; "));
        }
        s
    }
}

struct Builder {
    id: u8,
    title: &'static str,
    checks: Vec<Check>,
    start: Instant,
}

impl Builder {
    fn new(id: u8, title: &'static str) -> Self {
        Builder {
            id,
            title,
            checks: Vec::new(),
            start: Instant::now(),
        }
    }

    fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    /// Records a failed check for an error from a computation that should
    /// have succeeded.
    fn fail_err(&mut self, name: &str, e: impl std::fmt::Display) {
        self.check(name, false, format!("error: {e}"));
    }

    fn time_limit(&mut self, limit: Duration) {
        let elapsed = self.start.elapsed();
        self.check(
            format!("runtime < {} s", limit.as_secs()),
            elapsed < limit,
            format!("{:.3} s", elapsed.as_secs_f64()),
        );
    }

    fn finish(self) -> Outcome {
        Outcome {
            id: self.id,
            title: self.title,
            elapsed: self.start.elapsed(),
            checks: self.checks,
        }
    }
}

/// Independent stream per criterion so that adding samples to one does not
/// move the others.
fn stream(seed: u64, id: u64) -> SeededRng {
    rng(seed ^ id.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

fn max_dev(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

// ------------------------------------------------------------- criterion 1

pub fn facet_reproduction(config: &ClaimsConfig) -> Outcome {
    let mut b = Builder::new(1, "facet reproduction on {(1,2),(1,3),(2,3),(1,2,3)}");
    let table = &config.facet_table;
    let s = match build_scenario(&[vec![1, 2], vec![1, 3], vec![2, 3], vec![1, 2, 3]]) {
        Ok(s) => s,
        Err(e) => {
            b.fail_err("scenario", e);
            return b.finish();
        }
    };
    b.check(
        "reference table scenario",
        table.scenario == s,
        format!("table has {} words", table.scenario.len()),
    );
    let h = match vertex_enumerate(&s).and_then(|v| facet_enumerate(&v)) {
        Ok(h) => h,
        Err(e) => {
            b.fail_err("enumeration", e);
            return b.finish();
        }
    };
    b.check(
        "full-dimensional (no equalities)",
        h.equalities().is_empty(),
        format!("{} equalities", h.equalities().len()),
    );
    // compare primitive integer forms: equal up to positive scaling
    let mut expected: Vec<_> = table
        .facets
        .iter()
        .map(FacetInequality::to_constraint)
        .collect();
    expected.sort();
    let got: Vec<_> = h.inequalities().to_vec();
    let missing: Vec<String> = expected
        .iter()
        .filter(|c| !got.contains(c))
        .map(|c| c.display(&s, "<=").to_string())
        .collect();
    let extra: Vec<String> = got
        .iter()
        .filter(|c| !expected.contains(c))
        .map(|c| c.display(&s, "<=").to_string())
        .collect();
    b.check(
        "facet system matches reference table",
        missing.is_empty() && extra.is_empty() && expected.len() == got.len(),
        if missing.is_empty() && extra.is_empty() {
            format!("{} facets", got.len())
        } else {
            format!(
                "missing from enumeration: [{}]; not in table: [{}]",
                missing.join(", "),
                extra.join(", ")
            )
        },
    );
    b.time_limit(Duration::from_secs(1));
    b.finish()
}

// ------------------------------------------------------------- criterion 2

pub fn two_word_polytope(_config: &ClaimsConfig) -> Outcome {
    let mut b = Builder::new(2, "two-word polytope {(1,1,2,2),(1,2,1,2)}");
    let s = two_word_scenario();
    let result = vertex_enumerate(&s).and_then(|v| facet_enumerate(&v).map(|h| (v, h)));
    let (v, h) = match result {
        Ok(x) => x,
        Err(e) => {
            b.fail_err("enumeration", e);
            return b.finish();
        }
    };
    let mut got = v.vertices().to_vec();
    got.sort();
    b.check(
        "vertices {(0,0),(1,1)}",
        got == [vec![0u8, 0], vec![1, 1]],
        format!("{:?}", v.vertices()),
    );
    // coordinates ordered (z1122, z1212)
    let eq = h.equalities();
    let ok = eq.len() == 1 && eq[0].a == [BigInt::one(), -BigInt::one()] && eq[0].b.is_zero();
    b.check(
        "affine hull z1122 = z1212",
        ok,
        eq.iter()
            .map(|e| e.display(&s, "=").to_string())
            .collect::<Vec<_>>()
            .join("; "),
    );
    b.time_limit(Duration::from_secs(1));
    b.finish()
}

// ------------------------------------------------------------- criterion 3

/// `-z14 + z142 + z143 - z1423 <= 0`, the transitivity witness on the
/// order-{2,3,4} words.
pub fn transitivity_witness(s: &Scenario) -> bargmann_core::Result<FacetInequality> {
    let one = exact::from_int(1);
    let terms = [
        (vec![1, 4], -one.clone()),
        (vec![1, 4, 2], one.clone()),
        (vec![1, 4, 3], one.clone()),
        (vec![1, 4, 2, 3], -one),
    ];
    FacetInequality::from_terms(s, &terms, Rational::zero())
}

/// `(|0><0|, |0><0|, |+><+|, |+><+|)` on letters 1..=4.
pub fn witness_states() -> bargmann_core::Result<Realization> {
    let rho = DensityOperator::pure(&ket_zero());
    let sigma = DensityOperator::pure(&ket_plus());
    Realization::from_sequence(vec![rho.clone(), rho, sigma.clone(), sigma], true)
}

pub fn witness_value(_config: &ClaimsConfig) -> Outcome {
    let mut b = Builder::new(3, "order-{2,3,4} witness value and facet certificate");
    let run = || -> bargmann_core::Result<_> {
        let s = full_scenario(4, 4)?;
        let c = transitivity_witness(&s)?;
        let z = evaluate(&witness_states()?, &s)?.real_parts();
        let v = vertex_enumerate(&s)?;
        let check = verify_facet(&c, &v)?;
        Ok((s, c, z, v, check))
    };
    let (s, c, z, v, check) = match run() {
        Ok(x) => x,
        Err(e) => {
            b.fail_err("evaluation", e);
            return b.finish();
        }
    };
    b.check(
        "108-word scenario",
        s.len() == 108,
        format!("{} words", s.len()),
    );
    let (_, value) = max_violation(&c, std::slice::from_ref(&z)).unwrap_or((0, f64::NAN));
    b.check(
        "violation = 0.25 within 1e-12",
        (value - 0.25).abs() <= 1e-12,
        format!("value {value:.17}"),
    );
    let assignments = (s.letters().len() as u128).pow(s.letters().len() as u32);
    b.check(
        "256 assignments",
        assignments == 256,
        format!("{assignments} assignments, {} vertices", v.len()),
    );
    b.check("valid on every vertex", check.valid, format!("{check:?}"));
    b.check(
        "facet-defining",
        check.facet_defining,
        format!("{} saturating vertices", check.saturating_count),
    );
    b.time_limit(Duration::from_secs(60));
    b.finish()
}

// ------------------------------------------------------------- criterion 4

/// Largest violation of `0 <= y^2 <= x <= y <= 1`.
fn chain_deficiency(p: TwoWordPoint) -> f64 {
    [-(p.y * p.y), p.y * p.y - p.x, p.x - p.y, p.y - 1.0]
        .into_iter()
        .fold(f64::NEG_INFINITY, f64::max)
}

fn two_word_point(r: &Realization, s: &Scenario) -> bargmann_core::Result<TwoWordPoint> {
    TwoWordPoint::from_invariants(&evaluate(r, s)?.real_parts())
}

pub fn two_word_containment(config: &ClaimsConfig) -> Outcome {
    let mut b = Builder::new(4, "two-word containment and analytic curves");
    let s = two_word_scenario();
    let mut g = stream(config.seed, 4);

    let mut worst = f64::NEG_INFINITY;
    let mut errors = 0usize;
    for _ in 0..10_000 {
        let r = Realization::from_sequence(vec![random_qubit(&mut g), random_qubit(&mut g)], true);
        match r.and_then(|r| two_word_point(&r, &s)) {
            Ok(p) => worst = worst.max(chain_deficiency(p)),
            Err(_) => errors += 1,
        }
    }
    b.check(
        "10^4 qubit pairs in 0 <= y^2 <= x <= y <= 1 (1e-10)",
        errors == 0 && worst <= 1e-10,
        format!("worst deficiency {worst:.3e}, {errors} errors"),
    );

    let mut worst = f64::NEG_INFINITY;
    let mut errors = 0usize;
    for i in 0..1_000 {
        let d = 1 + i % 4;
        match two_word_point(&random_realization(&mut g, 2, d), &s) {
            Ok(p) => worst = worst.max(chain_deficiency(p)),
            Err(_) => errors += 1,
        }
    }
    b.check(
        "10^3 pairs with d <= 4 in the chain (1e-10)",
        errors == 0 && worst <= 1e-10,
        format!("worst deficiency {worst:.3e}, {errors} errors"),
    );

    // matrix evaluation of the OBG states, not the closed form
    let mut worst = 0.0f64;
    let mut errors = 0usize;
    for k in 0..=256 {
        let theta = std::f64::consts::PI * k as f64 / 256.0;
        match obg_states(2, theta).and_then(|r| two_word_point(&r, &s)) {
            Ok(p) => worst = worst.max((p.x - p.y * p.y).abs()),
            Err(_) => errors += 1,
        }
    }
    b.check(
        "OBG points on x = y^2 (1e-12)",
        errors == 0 && worst <= 1e-12,
        format!("max |x - y^2| {worst:.3e}"),
    );

    for omega in [0.0, 1.0] {
        match designolle_pair(omega).and_then(|r| two_word_point(&r, &s)) {
            Ok(p) => b.check(
                format!("Designolle omega = {omega} on the diagonal (1e-12)"),
                (p.x - p.y).abs() <= 1e-12,
                format!("|x - y| {:.3e}", (p.x - p.y).abs()),
            ),
            Err(e) => b.fail_err("Designolle endpoint", e),
        }
    }
    match designolle_pair(0.5).and_then(|r| two_word_point(&r, &s)) {
        Ok(p) => {
            let gap = p.y - p.x;
            b.check(
                "Designolle omega = 0.5 off the diagonal by > 1e-3",
                gap > 1e-3,
                format!(
                    "y - x = {gap:.6e} (exact value 1/2304 = {:.6e})",
                    1.0 / 2304.0
                ),
            );
        }
        Err(e) => b.fail_err("Designolle midpoint", e),
    }
    b.finish()
}

// ------------------------------------------------------------- criterion 5

pub fn combinator_identities(config: &ClaimsConfig) -> Outcome {
    const INSTANCES: usize = 128;
    let mut b = Builder::new(5, "combinator identities");
    let mut g = stream(config.seed, 5);

    let mix_s = build_scenario(&[
        vec![1, 2, 3],
        vec![1, 1, 2],
        vec![1, 3, 2],
        vec![2, 2, 2],
        vec![3, 3, 1],
    ]);
    let shrink_s = build_scenario(&[vec![1, 2, 3], vec![1, 1, 2], vec![1, 3, 2], vec![2, 3, 3]]);
    let had_s = full_scenario(3, 4);
    let (mix_s, shrink_s, had_s) = match (mix_s, shrink_s, had_s) {
        (Ok(a), Ok(b), Ok(c)) => (a, b, c),
        _ => {
            b.check("scenarios", false, "could not build test scenarios");
            return b.finish();
        }
    };

    let mut run =
        |name: &str,
         b: &mut Builder,
         f: &mut dyn FnMut(&mut SeededRng) -> bargmann_core::Result<f64>| {
            let mut worst = 0.0f64;
            let mut errors = Vec::new();
            for _ in 0..INSTANCES {
                match f(&mut g) {
                    Ok(d) => worst = worst.max(d),
                    Err(e) => errors.push(e.to_string()),
                }
            }
            b.check(
                format!("{name} on {INSTANCES} instances (1e-11)"),
                errors.is_empty() && worst <= 1e-11,
                match errors.first() {
                    Some(e) => format!("{} errors, first: {e}", errors.len()),
                    None => format!("max deviation {worst:.3e}"),
                },
            );
        };

    run(
        "direct_sum_mix = alpha D1 + (1 - alpha) D2",
        &mut b,
        &mut |g| {
            let d1 = g.random_range(1..=3);
            let d2 = g.random_range(1..=3);
            let r1 = random_realization(g, 3, d1);
            let r2 = random_realization(g, 3, d2);
            let alpha: f64 = g.random();
            let a = evaluate(&r1, &mix_s)?;
            let c = evaluate(&r2, &mix_s)?;
            let mixed = evaluate(&direct_sum_mix(&r1, &r2, alpha, 3)?, &mix_s)?;
            let expected: Vec<_> = a
                .values()
                .iter()
                .zip(c.values())
                .map(|(x, y)| x * alpha + y * (1.0 - alpha))
                .collect();
            Ok(max_dev(mixed.values(), &expected))
        },
    );
    run("shrink = nu D", &mut b, &mut |g| {
        let d = g.random_range(1..=3);
        let r = random_realization(g, 3, d);
        let nu: f64 = g.random();
        let base = evaluate(&r, &shrink_s)?;
        let shrunk = evaluate(&shrink(&r, nu, &shrink_s)?, &shrink_s)?;
        let expected: Vec<_> = base.values().iter().map(|x| x * nu).collect();
        Ok(max_dev(shrunk.values(), &expected))
    });
    run("hadamard_combine = D1 . D2", &mut b, &mut |g| {
        let d1 = g.random_range(1..=3);
        let d2 = g.random_range(1..=3);
        let r1 = random_realization(g, 3, d1);
        let r2 = random_realization(g, 3, d2);
        let a = evaluate(&r1, &had_s)?;
        let c = evaluate(&r2, &had_s)?;
        let combined = evaluate(&hadamard_combine(&r1, &r2)?, &had_s)?;
        let expected: Vec<_> = a
            .values()
            .iter()
            .zip(c.values())
            .map(|(x, y)| x * y)
            .collect();
        Ok(max_dev(combined.values(), &expected))
    });
    b.finish()
}

// ------------------------------------------------------------- criterion 6

/// `(name, scenario, check classical points)`. Classical points are only
/// checked where no word repeats a letter (and on the two-word scenario,
/// where both coordinates reduce to the same sum): with a repeated letter
/// the product formula squares that letter's probabilities, which the 0/1
/// vertices cannot reproduce (e.g. z11 = sum p^2 < 1 while every vertex has
/// z11 = 1).
fn soundness_scenarios() -> bargmann_core::Result<Vec<(&'static str, Scenario, bool)>> {
    Ok(vec![
        (
            "four-word",
            build_scenario(&[vec![1, 2], vec![1, 3], vec![2, 3], vec![1, 2, 3]])?,
            true,
        ),
        ("two-word", two_word_scenario(), true),
        (
            "4-cycle",
            build_scenario(&[vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]])?,
            true,
        ),
        (
            "five-word",
            build_scenario(&[
                vec![1, 2],
                vec![1, 3],
                vec![2, 3],
                vec![1, 2, 3],
                vec![1, 1, 2, 2],
            ])?,
            false,
        ),
        (
            "K4 edges",
            event_graph_scenario(&[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])?,
            true,
        ),
        (
            "3 letters, distinct-letter words",
            build_scenario(&[
                vec![1],
                vec![2],
                vec![3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3],
                vec![1, 2, 3],
                vec![1, 3, 2],
            ])?,
            true,
        ),
    ])
}

/// Random rational test points: convex mixtures of all vertices, mixtures
/// of a random vertex subset pushed slightly outward, and uniform points in
/// a box around the unit cube.
fn rational_point(g: &mut SeededRng, v: &VertexSet) -> Vec<Rational> {
    let n = v.ambient_dimension();
    let verts = v.vertices();
    match g.random_range(0..3) {
        0 | 1 => {
            let pick_all = g.random_bool(0.5);
            let weights: Vec<i64> = verts
                .iter()
                .map(|_| {
                    if pick_all || g.random_bool(0.4) {
                        g.random_range(0..=6)
                    } else {
                        0
                    }
                })
                .collect();
            let total: i64 = weights.iter().sum();
            let (weights, total) = if total == 0 {
                let mut w = vec![0; verts.len()];
                w[g.random_range(0..verts.len())] = 1;
                (w, 1)
            } else {
                (weights, total)
            };
            let mut z: Vec<Rational> = (0..n)
                .map(|i| {
                    let num: i64 = verts
                        .iter()
                        .zip(&weights)
                        .map(|(p, w)| w * i64::from(p[i]))
                        .sum();
                    exact::rational(num, total)
                })
                .collect();
            if g.random_bool(0.5) {
                let i = g.random_range(0..n);
                z[i] += exact::rational(g.random_range(-1..=1), 64);
            }
            z
        }
        _ => (0..n)
            .map(|_| exact::rational(g.random_range(-4..=20), 16))
            .collect(),
    }
}

pub fn polytope_soundness(config: &ClaimsConfig) -> Outcome {
    let mut b = Builder::new(6, "polytope soundness");
    let mut g = stream(config.seed, 6);
    let scenarios = match soundness_scenarios() {
        Ok(s) => s,
        Err(e) => {
            b.fail_err("scenarios", e);
            return b.finish();
        }
    };
    for (name, s, check_classical) in &scenarios {
        let v = match vertex_enumerate(s) {
            Ok(v) => v,
            Err(e) => {
                b.fail_err(name, e);
                continue;
            }
        };
        let h = match facet_enumerate(&v) {
            Ok(h) => h,
            Err(e) => {
                b.fail_err(name, e);
                continue;
            }
        };
        let mut outside = 0usize;
        let mut errors = 0usize;
        for i in 0..if *check_classical { 500 } else { 0 } {
            let alphabet = 1 + i % 5;
            let model = random_model(&mut g, s.letters(), alphabet);
            let z = match classical_point(&model, s) {
                Ok(z) => z.real_parts(),
                Err(_) => {
                    errors += 1;
                    continue;
                }
            };
            for p in [Polytope::H(&h), Polytope::V(&v)] {
                match membership(&z, p, bargmann_core::polytope::DEFAULT_MEMBERSHIP_TOL) {
                    Ok(r) if r.verdict.is_member() => {}
                    Ok(_) => outside += 1,
                    Err(_) => errors += 1,
                }
            }
        }
        if *check_classical {
            b.check(
                format!("{name}: 500 classical points inside/boundary (H and V)"),
                outside == 0 && errors == 0,
                format!("{outside} outside, {errors} errors"),
            );
        }
        if s.len() <= 5 {
            let mut disagree = 0usize;
            let mut errors = 0usize;
            let mut counts = [0usize; 3];
            for _ in 0..1000 {
                let z = rational_point(&mut g, &v);
                match (
                    membership_exact(&z, Polytope::H(&h)),
                    membership_exact(&z, Polytope::V(&v)),
                ) {
                    (Ok(a), Ok(c)) => {
                        if a.verdict != c.verdict {
                            disagree += 1;
                        }
                        counts[match a.verdict {
                            Verdict::Inside => 0,
                            Verdict::Boundary => 1,
                            Verdict::Outside => 2,
                        }] += 1;
                    }
                    _ => errors += 1,
                }
            }
            b.check(
                format!("{name}: facets agree with exact feasibility on 1000 rational points"),
                disagree == 0 && errors == 0,
                format!(
                    "{disagree} disagreements, {errors} errors (inside {}, boundary {}, outside {})",
                    counts[0], counts[1], counts[2]
                ),
            );
        }
    }
    b.finish()
}

// ------------------------------------------------------------- criterion 7

/// Trace of the product taken in the given order, without canonicalizing.
fn raw_trace(r: &Realization, seq: &[Letter]) -> bargmann_core::Result<Complex64> {
    let mut m: CMatrix = r.get(seq[0])?.matrix().clone();
    for &l in &seq[1..] {
        m *= r.get(l)?.matrix();
    }
    Ok(linalg::trace(&m))
}

pub fn algebraic_invariants(config: &ClaimsConfig) -> Outcome {
    const INSTANCES: usize = 128;
    let mut b = Builder::new(7, "algebraic invariants");
    let mut g = stream(config.seed, 7);

    let record =
        |b: &mut Builder, name: &str, tol: f64, results: Vec<bargmann_core::Result<f64>>| {
            let errors = results.iter().filter(|r| r.is_err()).count();
            let worst = results
                .iter()
                .filter_map(|r| r.as_ref().ok())
                .copied()
                .fold(f64::NEG_INFINITY, f64::max);
            b.check(
                format!("{name} on {INSTANCES} instances ({tol:.0e})"),
                errors == 0 && worst <= tol,
                format!("worst {worst:.3e}, {errors} errors"),
            );
        };

    // cyclic invariance of raw products, and agreement with the canonical evaluation
    let results = (0..INSTANCES)
        .map(|_| {
            let d = g.random_range(1..=4);
            let r = random_realization(&mut g, 3, d);
            let len = g.random_range(1..=6);
            let w: Vec<Letter> = (0..len).map(|_| g.random_range(1..=3)).collect();
            let k = g.random_range(0..len);
            let mut rotated = w.clone();
            rotated.rotate_left(k);
            let a = raw_trace(&r, &w)?;
            let c = raw_trace(&r, &rotated)?;
            let canonical = bargmann(&r, &Word::new(&w)?)?;
            Ok((a - c).norm().max((a - canonical).norm()))
        })
        .collect();
    record(&mut b, "cyclic invariance", 1e-12, results);

    let s3 = full_scenario(3, 4).ok();
    let results = (0..INSTANCES)
        .map(|_| {
            let s = s3
                .as_ref()
                .ok_or(bargmann_core::Error::Precondition("scenario".into()))?;
            let d = g.random_range(1..=4);
            let r = random_realization(&mut g, 3, d);
            let u = random_unitary(&mut g, d);
            let a = evaluate(&r, s)?;
            let c = evaluate(&r.conjugated(&u)?, s)?;
            Ok(max_dev(a.values(), c.values()))
        })
        .collect();
    record(&mut b, "unitary invariance", 1e-10, results);

    let results = (0..INSTANCES)
        .map(|_| {
            let s = s3
                .as_ref()
                .ok_or(bargmann_core::Error::Precondition("scenario".into()))?;
            let d = g.random_range(1..=4);
            let r = random_realization(&mut g, 3, d);
            let v = evaluate(&r, s)?;
            Ok(v.values()
                .iter()
                .map(|z| z.norm() - 1.0)
                .fold(f64::NEG_INFINITY, f64::max))
        })
        .collect();
    record(
        &mut b,
        "|Delta| <= 1 for normalized tuples (excess)",
        1e-10,
        results,
    );

    let results = (0..INSTANCES)
        .map(|_| {
            let d = g.random_range(1..=4);
            let a = random_positive(&mut g, d, 3.0);
            let c = random_positive(&mut g, d, 3.0);
            let ab = linalg::trace(&(a.matrix() * c.matrix()));
            Ok((ab.re - a.trace() * c.trace()).max(-ab.re).max(ab.im.abs()))
        })
        .collect();
    record(
        &mut b,
        "0 <= Tr(r1 r2) <= Tr(r1) Tr(r2) (excess)",
        1e-12,
        results,
    );

    let repeat_s = build_scenario(&[
        vec![1, 1, 1],
        vec![2, 2, 2],
        vec![3, 3, 3],
        vec![1, 2, 3],
        vec![1, 3, 2],
        vec![1, 1, 2],
        vec![2, 3, 3],
    ])
    .ok();
    let results = (0..INSTANCES)
        .map(|_| {
            let s = repeat_s
                .as_ref()
                .ok_or(bargmann_core::Error::Precondition("scenario".into()))?;
            let d = g.random_range(1..=4);
            let ops = (0..3).map(|_| random_positive(&mut g, d, 2.0)).collect();
            let r = Realization::from_sequence(ops, false)?;
            Ok(-pointedness_functional(&evaluate(&r, s)?, s)?)
        })
        .collect();
    record(
        &mut b,
        "pointedness functional >= 0 (negative part)",
        1e-12,
        results,
    );

    let results = (0..INSTANCES)
        .map(|_| {
            let d = g.random_range(1..=4);
            let r = random_realization(&mut g, 2, d);
            let diff = r.get(1)?.matrix() - r.get(2)?.matrix();
            let eig: f64 = linalg::hermitian_eigenvalues(&diff)
                .iter()
                .map(|x| x * x)
                .sum();
            Ok((schatten2_distance_sq(&r)? - eig).abs())
        })
        .collect();
    record(
        &mut b,
        "d2 identity against eigenvalue norm",
        1e-12,
        results,
    );
    b.finish()
}

// -------------------------------------------------------------------- suite

pub type Criterion = fn(&ClaimsConfig) -> Outcome;

pub const CRITERIA: [Criterion; 7] = [
    facet_reproduction,
    two_word_polytope,
    witness_value,
    two_word_containment,
    combinator_identities,
    polytope_soundness,
    algebraic_invariants,
];

pub fn run_all(config: &ClaimsConfig) -> Vec<Outcome> {
    CRITERIA.iter().map(|f| f(config)).collect()
}

pub fn render(outcomes: &[Outcome]) -> String {
    let mut out = String::new();
    for o in outcomes {
        let _ = writeln!(out, "{}", o.line());
    }
    let passed = outcomes.iter().filter(|o| o.passed()).count();
    let _ = writeln!(out, "{passed}/{} criteria passed", outcomes.len());
    out
}

use std::path::{Path, PathBuf};

use bargmann_core::analytic::{two_word_figure, FIGURE_SAMPLES};
use bargmann_core::invariants::gram_invariants;
use bargmann_core::polytope::{
    facet_enumerate, membership, vertex_enumerate_capped, ConstraintKind, HRepresentation,
    MembershipReport, Polytope, VertexSet, DEFAULT_ASSIGNMENT_CAP, DEFAULT_MEMBERSHIP_TOL,
};
use bargmann_core::{evaluate, max_violation, verify_facet, InvariantVector, Scenario};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::claims::{self, ClaimsConfig, DEFAULT_SEED};
use crate::error::{CliError, Result};
use crate::io;

#[derive(Debug, Parser)]
#[command(
    name = "bargmann",
    version,
    about = "Bargmann invariants, classical polytopes and coherence witnesses"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Canonicalize a scenario file (least rotations, sorted, deduplicated).
    Canon(CanonArgs),
    /// Vertices, and optionally facets, of the classical polytope.
    Polytope(PolytopeArgs),
    /// Invariant vector of a tuple of states or of a Gram matrix.
    Eval(EvalArgs),
    /// Classical-polytope membership report for a tuple of states.
    Witness(WitnessArgs),
    /// Emit figure data as CSV.
    Figure(FigureArgs),
    /// Run the claims suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct Output {
    /// Write to this file instead of stdout.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CanonArgs {
    #[arg(long, value_name = "PATH")]
    pub scenario: PathBuf,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct PolytopeArgs {
    #[arg(long, value_name = "PATH")]
    pub scenario: PathBuf,
    /// Vertices only (default).
    #[arg(long, conflicts_with = "facets")]
    pub vertices: bool,
    /// Also enumerate the affine hull and all facets.
    #[arg(long)]
    pub facets: bool,
    /// Cap on the number of assignments |L|^|L|.
    #[arg(long, value_name = "INT", default_value_t = DEFAULT_ASSIGNMENT_CAP)]
    pub cap: u128,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
#[group(id = "source", required = true, multiple = false, args = ["states", "gram"])]
pub struct Source {
    #[arg(long, value_name = "PATH")]
    pub states: Option<PathBuf>,
    #[arg(long, value_name = "PATH")]
    pub gram: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(long, value_name = "PATH")]
    pub scenario: PathBuf,
    #[command(flatten)]
    pub source: Source,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct WitnessArgs {
    #[arg(long, value_name = "PATH")]
    pub scenario: PathBuf,
    #[command(flatten)]
    pub source: Source,
    /// Inequality to certify and evaluate.
    #[arg(long, value_name = "PATH")]
    pub ineq: Option<PathBuf>,
    #[arg(long, value_name = "FLOAT", default_value_t = DEFAULT_MEMBERSHIP_TOL, value_parser = positive_f64)]
    pub tol: f64,
    #[arg(long, value_name = "INT", default_value_t = DEFAULT_ASSIGNMENT_CAP)]
    pub cap: u128,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FigureName {
    TwoWord,
}

#[derive(Debug, Args)]
pub struct FigureArgs {
    pub name: FigureName,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Seed for the randomized sample sets.
    #[arg(long, value_name = "INT", default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Reference facet table for the four-word scenario (defaults to the
    /// built-in one).
    #[arg(long, value_name = "PATH")]
    pub facet_table: Option<PathBuf>,
    #[command(flatten)]
    pub output: Output,
}

fn positive_f64(s: &str) -> std::result::Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        _ => Err(format!("{s:?} is not a positive number")),
    }
}

pub fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Canon(a) => canon(&a),
        Command::Polytope(a) => polytope(&a),
        Command::Eval(a) => eval(&a),
        Command::Witness(a) => witness(&a),
        Command::Figure(a) => figure(&a),
        Command::Verify(a) => verify(&a),
    }
}

fn canon(a: &CanonArgs) -> Result<()> {
    let s = io::load_scenario(&a.scenario)?;
    io::write_output(
        a.output.out.as_deref(),
        &io::to_pretty(&io::scenario_json(&s)),
    )
}

fn polytope(a: &PolytopeArgs) -> Result<()> {
    let s = io::load_scenario(&a.scenario)?;
    let v = vertex_enumerate_capped(&s, a.cap)?;
    let h = if a.facets {
        Some(facet_enumerate(&v)?)
    } else {
        None
    };
    io::write_output(
        a.output.out.as_deref(),
        &io::to_pretty(&io::polytope_json(&v, h.as_ref())),
    )
}

fn invariants(s: &Scenario, source: &Source) -> Result<InvariantVector> {
    match (&source.states, &source.gram) {
        (Some(path), _) => Ok(evaluate(&io::load_states(path)?, s)?),
        (None, Some(path)) => Ok(gram_invariants(&io::load_gram(path)?, s)?),
        (None, None) => Err(CliError::Usage(
            "one of --states or --gram is required".into(),
        )),
    }
}

fn eval(a: &EvalArgs) -> Result<()> {
    let s = io::load_scenario(&a.scenario)?;
    let v = invariants(&s, &a.source)?;
    io::write_output(
        a.output.out.as_deref(),
        &io::to_pretty(&io::invariants_json(&v)),
    )
}

fn kind_str(k: ConstraintKind) -> &'static str {
    match k {
        ConstraintKind::Equality => "equality",
        ConstraintKind::Inequality => "inequality",
        ConstraintKind::ConvexHull => "convex-combination",
    }
}

fn report_json(r: &MembershipReport, h: Option<&HRepresentation>) -> Value {
    let violations: Vec<Value> = r
        .violations
        .iter()
        .map(|v| {
            let mut m = Map::new();
            m.insert("kind".into(), json!(kind_str(v.kind)));
            m.insert("index".into(), json!(v.index));
            m.insert("amount".into(), json!(v.amount));
            if let Some(h) = h {
                let text = match v.kind {
                    ConstraintKind::Equality => Some(
                        h.equalities()[v.index]
                            .display(h.scenario(), "=")
                            .to_string(),
                    ),
                    ConstraintKind::Inequality => Some(
                        h.inequalities()[v.index]
                            .display(h.scenario(), "<=")
                            .to_string(),
                    ),
                    ConstraintKind::ConvexHull => None,
                };
                if let Some(t) = text {
                    m.insert("constraint".into(), json!(t));
                }
            }
            Value::Object(m)
        })
        .collect();
    json!({ "verdict": r.verdict.as_str(), "violations": violations })
}

/// Membership against facets when enumeration is within the size gates,
/// otherwise against the vertices by convex-combination feasibility.
pub fn classify_point(v: &VertexSet, z: &[f64], tol: f64) -> Result<(Value, MembershipReport)> {
    match facet_enumerate(v) {
        Ok(h) => {
            let r = membership(z, Polytope::H(&h), tol)?;
            let mut j = report_json(&r, Some(&h));
            j["method"] = json!("facets");
            Ok((j, r))
        }
        Err(e) if e.is_resource_limit() => {
            let r = membership(z, Polytope::V(v), tol)?;
            let mut j = report_json(&r, None);
            j["method"] = json!("convex-combination");
            Ok((j, r))
        }
        Err(e) => Err(e.into()),
    }
}

fn witness(a: &WitnessArgs) -> Result<()> {
    let s = io::load_scenario(&a.scenario)?;
    let v = invariants(&s, &a.source)?;
    let z = v.real_parts();
    let vertices = vertex_enumerate_capped(&s, a.cap)?;
    let (mut report, _) = classify_point(&vertices, &z, a.tol)?;
    report["invariants"] = io::invariants_json(&v);
    report["max_imaginary"] = json!(v.max_imaginary());
    if let Some(path) = &a.ineq {
        let c = io::load_inequality(path, &s)?;
        let check = verify_facet(&c, &vertices)?;
        let (_, value) = max_violation(&c, std::slice::from_ref(&z)).expect("one point");
        report["inequality"] = json!({
            "valid": check.valid,
            "facet_defining": check.facet_defining,
            "saturating_vertices": check.saturating_count,
            "value": value,
            "violated": value > a.tol,
        });
    }
    io::write_output(a.output.out.as_deref(), &io::to_pretty(&report))
}

fn figure(a: &FigureArgs) -> Result<()> {
    match a.name {
        FigureName::TwoWord => {
            let rows = two_word_figure(FIGURE_SAMPLES)?;
            io::write_output(a.output.out.as_deref(), &io::figure_csv(&rows))
        }
    }
}

fn verify(a: &VerifyArgs) -> Result<()> {
    let table = match &a.facet_table {
        Some(path) => io::parse_facet_table(path, &io::read_text(path)?)?,
        None => claims::builtin_facet_table(),
    };
    let config = ClaimsConfig {
        seed: a.seed,
        facet_table: table,
    };
    let outcomes = claims::run_all(&config);
    let text = claims::render(&outcomes);
    io::write_output(a.output.out.as_deref(), &text)?;
    let failed = outcomes.iter().filter(|o| !o.passed()).count();
    if failed == 0 {
        Ok(())
    } else {
        Err(CliError::VerifyFailed(failed))
    }
}

pub fn out_path(o: &Output) -> Option<&Path> {
    o.out.as_deref()
}

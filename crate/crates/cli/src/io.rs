//! JSON and CSV file formats.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use bargmann_core::analytic::FigureRow;
use bargmann_core::exact::{self, Rational};
use bargmann_core::invariants::GramMatrix;
use bargmann_core::linalg;
use bargmann_core::polytope::{HRepresentation, LinearConstraint, VertexSet};
use bargmann_core::{
    build_scenario, DensityOperator, FacetInequality, InvariantVector, Letter, Provenance,
    Realization, Scenario, Word,
};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::error::{CliError, Result};

/// Imaginary parts below this are written as plain reals.
pub const REAL_CUTOFF: f64 = 1e-12;

pub fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })
}

pub fn parse_json<T: DeserializeOwned>(path: &Path, text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|source| CliError::Json {
        path: path.to_path_buf(),
        source,
    })
}

/// Writes to `out`, or stdout when `None`.
pub fn write_output(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Write {
            path: path.to_path_buf(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

// ---------------------------------------------------------------- scenario

#[derive(Deserialize)]
#[serde(untagged)]
enum ScenarioFile {
    Wrapped { words: Vec<Vec<Letter>> },
    Bare(Vec<Vec<Letter>>),
}

pub fn parse_scenario(path: &Path, text: &str) -> Result<Scenario> {
    let words = match parse_json::<ScenarioFile>(path, text)? {
        ScenarioFile::Wrapped { words } | ScenarioFile::Bare(words) => words,
    };
    build_scenario(&words).map_err(|e| CliError::format(path, e.to_string()))
}

pub fn load_scenario(path: &Path) -> Result<Scenario> {
    parse_scenario(path, &read_text(path)?)
}

fn words_json(s: &Scenario) -> Value {
    Value::Array(s.words().iter().map(|w| json!(w.letters())).collect())
}

pub fn scenario_json(s: &Scenario) -> Value {
    json!({ "words": words_json(s) })
}

// ------------------------------------------------------------------ states

#[derive(Deserialize)]
struct MatrixParts {
    re: Vec<Vec<f64>>,
    #[serde(default)]
    im: Option<Vec<Vec<f64>>>,
}

impl MatrixParts {
    fn to_matrix(&self, path: &Path, what: &str) -> Result<linalg::CMatrix> {
        let zeros: Vec<Vec<f64>>;
        let im = match &self.im {
            Some(im) => im,
            None => {
                zeros = self.re.iter().map(|r| vec![0.0; r.len()]).collect();
                &zeros
            }
        };
        linalg::from_parts(&self.re, im).ok_or_else(|| {
            CliError::format(
                path,
                format!("{what}: \"re\" and \"im\" must be matrices of equal shape"),
            )
        })
    }
}

#[derive(Deserialize)]
struct StatesFile {
    #[serde(default)]
    dimension: Option<usize>,
    #[serde(default = "default_true")]
    normalized: bool,
    states: BTreeMap<String, MatrixParts>,
}

fn default_true() -> bool {
    true
}

fn parse_letter(path: &Path, key: &str) -> Result<Letter> {
    match key.trim().parse::<Letter>() {
        Ok(l) if l > 0 => Ok(l),
        _ => Err(CliError::format(
            path,
            format!("state key {key:?} is not a positive letter"),
        )),
    }
}

pub fn parse_states(path: &Path, text: &str) -> Result<Realization> {
    let file: StatesFile = parse_json(path, text)?;
    let mut ops = BTreeMap::new();
    for (key, parts) in &file.states {
        let l = parse_letter(path, key)?;
        let m = parts.to_matrix(path, &format!("state {key}"))?;
        if let Some(d) = file.dimension {
            if m.nrows() != d {
                return Err(CliError::format(
                    path,
                    format!(
                        "state {key} is {}x{}, expected dimension {d}",
                        m.nrows(),
                        m.ncols()
                    ),
                ));
            }
        }
        let op = DensityOperator::new(m)
            .map_err(|e| CliError::format(path, format!("state {key}: {e}")))?;
        ops.insert(l, op);
    }
    Realization::new(ops, file.normalized).map_err(|e| CliError::format(path, e.to_string()))
}

pub fn load_states(path: &Path) -> Result<Realization> {
    parse_states(path, &read_text(path)?)
}

/// Inverse of [`parse_states`].
pub fn states_json(r: &Realization) -> Value {
    let mut states = Map::new();
    for (l, op) in r.operators() {
        let m = op.matrix();
        let re: Vec<Vec<f64>> = (0..m.nrows())
            .map(|i| (0..m.ncols()).map(|j| m[(i, j)].re).collect())
            .collect();
        let im: Vec<Vec<f64>> = (0..m.nrows())
            .map(|i| (0..m.ncols()).map(|j| m[(i, j)].im).collect())
            .collect();
        states.insert(l.to_string(), json!({ "re": re, "im": im }));
    }
    json!({ "dimension": r.dimension(), "normalized": r.is_normalized(), "states": states })
}

#[derive(Deserialize)]
struct GramFile {
    letters: Vec<Letter>,
    #[serde(flatten)]
    parts: MatrixParts,
}

pub fn parse_gram(path: &Path, text: &str) -> Result<GramMatrix> {
    let file: GramFile = parse_json(path, text)?;
    let m = file.parts.to_matrix(path, "gram matrix")?;
    GramMatrix::new(file.letters, m).map_err(|e| CliError::format(path, e.to_string()))
}

pub fn load_gram(path: &Path) -> Result<GramMatrix> {
    parse_gram(path, &read_text(path)?)
}

// -------------------------------------------------------------- invariants

pub fn complex_json(z: num_complex::Complex64) -> Value {
    if z.im.abs() < REAL_CUTOFF {
        json!(z.re)
    } else {
        json!({ "re": z.re, "im": z.im })
    }
}

pub fn invariants_json(v: &InvariantVector) -> Value {
    let mut out = Map::new();
    for (w, z) in v.iter() {
        out.insert(w.key(), complex_json(z));
    }
    Value::Object(out)
}

// ------------------------------------------------------------ inequalities

/// Integer JSON number, or a decimal string for values beyond `i64`.
pub fn bigint_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

pub fn constraint_json(c: &LinearConstraint) -> Value {
    json!({
        "a": c.a.iter().map(bigint_json).collect::<Vec<_>>(),
        "b": bigint_json(&c.b),
    })
}

pub fn polytope_json(v: &VertexSet, h: Option<&HRepresentation>) -> Value {
    let mut out = Map::new();
    out.insert("scenario".into(), words_json(v.scenario()));
    out.insert("dimension".into(), json!(v.dimension()));
    out.insert("vertices".into(), json!(v.vertices()));
    if let Some(h) = h {
        out.insert(
            "equalities".into(),
            Value::Array(h.equalities().iter().map(constraint_json).collect()),
        );
        out.insert(
            "facets".into(),
            Value::Array(h.inequalities().iter().map(constraint_json).collect()),
        );
    }
    Value::Object(out)
}

/// A coefficient: JSON integer, finite float (taken exactly), or a string
/// `"p/q"` / `"p"`.
pub fn parse_rational(v: &Value) -> std::result::Result<Rational, String> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(exact::from_int(i))
            } else if let Some(f) = n.as_f64() {
                exact::from_f64(f).ok_or_else(|| format!("coefficient {n} is not finite"))
            } else {
                Err(format!("unsupported number {n}"))
            }
        }
        Value::String(s) => s
            .trim()
            .parse::<Rational>()
            .map_err(|_| format!("coefficient {s:?} is not an integer or p/q rational")),
        other => Err(format!(
            "coefficient {other} must be a number or a \"p/q\" string"
        )),
    }
}

#[derive(Deserialize)]
struct InequalityEntry {
    #[serde(default)]
    a: Option<Vec<Value>>,
    #[serde(default)]
    terms: Option<Map<String, Value>>,
    b: Value,
}

fn inequality_from_entry(
    path: &Path,
    s: &Scenario,
    e: &InequalityEntry,
) -> Result<FacetInequality> {
    let bad = |m: String| CliError::format(path, m);
    let offset = parse_rational(&e.b).map_err(bad)?;
    match (&e.a, &e.terms) {
        (Some(a), None) => {
            if a.len() != s.len() {
                return Err(bad(format!(
                    "dense coefficient vector has {} entries, scenario has {} words",
                    a.len(),
                    s.len()
                )));
            }
            let coeffs = a
                .iter()
                .map(parse_rational)
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(bad)?;
            Ok(FacetInequality::new(
                coeffs,
                offset,
                Provenance::UserSupplied,
            ))
        }
        (None, Some(terms)) => {
            let mut parsed = Vec::with_capacity(terms.len());
            for (key, q) in terms {
                let w: Word = key
                    .parse()
                    .map_err(|e: bargmann_core::Error| bad(e.to_string()))?;
                parsed.push((w.letters().to_vec(), parse_rational(q).map_err(bad)?));
            }
            FacetInequality::from_terms(s, &parsed, offset).map_err(|e| bad(e.to_string()))
        }
        _ => Err(bad(
            "an inequality needs exactly one of \"a\" (dense) or \"terms\" (sparse)".into(),
        )),
    }
}

pub fn parse_inequality(path: &Path, text: &str, s: &Scenario) -> Result<FacetInequality> {
    let e: InequalityEntry = parse_json(path, text)?;
    inequality_from_entry(path, s, &e)
}

pub fn load_inequality(path: &Path, s: &Scenario) -> Result<FacetInequality> {
    parse_inequality(path, &read_text(path)?, s)
}

#[derive(Deserialize)]
struct FacetTableFile {
    scenario: Vec<Vec<Letter>>,
    facets: Vec<InequalityEntry>,
}

/// A scenario with a list of inequalities, used for reference facet
/// tables.
pub struct FacetTable {
    pub scenario: Scenario,
    pub facets: Vec<FacetInequality>,
}

pub fn parse_facet_table(path: &Path, text: &str) -> Result<FacetTable> {
    let file: FacetTableFile = parse_json(path, text)?;
    let scenario =
        build_scenario(&file.scenario).map_err(|e| CliError::format(path, e.to_string()))?;
    let facets = file
        .facets
        .iter()
        .map(|e| inequality_from_entry(path, &scenario, e))
        .collect::<Result<Vec<_>>>()?;
    Ok(FacetTable { scenario, facets })
}

// ------------------------------------------------------------------ figure

pub fn figure_csv(rows: &[FigureRow]) -> String {
    let mut out = String::from("family,parameter,x,y,region\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{},{:.16e},{:.16e},{:.16e},{}",
            r.family.as_str(),
            r.parameter,
            r.point.x,
            r.point.y,
            r.region.as_str()
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> &'static Path {
        Path::new("test.json")
    }

    #[test]
    fn scenario_forms() {
        let a = parse_scenario(p(), r#"{"words": [[3,1,2],[1,2,3]]}"#).unwrap();
        let b = parse_scenario(p(), "[[2,3,1]]").unwrap();
        assert_eq!(a, b);
        assert_eq!(scenario_json(&a), json!({"words": [[1, 2, 3]]}));
        assert!(parse_scenario(p(), "[[]]").is_err());
        assert!(parse_scenario(p(), "[[1,2]").is_err());
    }

    #[test]
    fn states_round_trip() {
        let text = r#"{"dimension": 2, "normalized": true,
            "states": {"1": {"re": [[1,0],[0,0]]}, "2": {"re": [[0.5,0.5],[0.5,0.5]], "im": [[0,0],[0,0]]}}}"#;
        let r = parse_states(p(), text).unwrap();
        assert_eq!(r.dimension(), 2);
        let again = parse_states(p(), &states_json(&r).to_string()).unwrap();
        assert_eq!(again, r);
        let bad = r#"{"states": {"1": {"re": [[1,0],[0,-1]]}}}"#;
        assert!(parse_states(p(), bad).is_err());
    }

    #[test]
    fn rationals() {
        assert_eq!(
            parse_rational(&json!("3/4")).unwrap(),
            exact::rational(3, 4)
        );
        assert_eq!(parse_rational(&json!(-2)).unwrap(), exact::from_int(-2));
        assert_eq!(parse_rational(&json!(0.5)).unwrap(), exact::rational(1, 2));
        assert!(parse_rational(&json!("x")).is_err());
    }

    #[test]
    fn inequality_forms() {
        let s = build_scenario(&[vec![1, 2], vec![1, 3], vec![2, 3], vec![1, 2, 3]]).unwrap();
        let dense = parse_inequality(p(), r#"{"a": [1, 1, 1, -2], "b": 1}"#, &s).unwrap();
        let sparse = parse_inequality(
            p(),
            r#"{"terms": {"12": 1, "13": 1, "23": 1, "231": "-2"}, "b": "1"}"#,
            &s,
        )
        .unwrap();
        assert_eq!(dense, sparse);
        assert!(parse_inequality(p(), r#"{"a": [1], "b": 1}"#, &s).is_err());
        assert!(parse_inequality(p(), r#"{"terms": {"14": 1}, "b": 1}"#, &s).is_err());
    }
}

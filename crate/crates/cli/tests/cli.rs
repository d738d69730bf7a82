use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use bargmann::io::scenario_json;
use bargmann_core::{build_scenario, full_scenario};
use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bargmann"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout_json(o: &Output) -> Value {
    assert_eq!(code(o), 0, "stderr: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).expect("JSON on stdout")
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const FOUR_WORD: &str = r#"{"words": [[1,2],[1,3],[2,3],[1,2,3]]}"#;
const TWO_WORD: &str = "[[1,1,2,2],[1,2,1,2]]";
const ZERO_PLUS: &str = r#"{"dimension": 2, "states": {
    "1": {"re": [[1,0],[0,0]]},
    "2": {"re": [[0.5,0.5],[0.5,0.5]]}}}"#;

#[test]
fn canon_sorts_and_collapses_rotations() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "s.json", "[[3,1,2],[2,3,1],[2,1]]");
    let v = stdout_json(&run(&["canon", "--scenario", s(&p)]));
    assert_eq!(v, serde_json::json!({"words": [[1, 2], [1, 2, 3]]}));

    let empty = write(&dir, "e.json", "[[1,2],[]]");
    let o = run(&["canon", "--scenario", s(&empty)]);
    assert_eq!(code(&o), 3);
    assert!(!o.stderr.is_empty());

    let bad = write(&dir, "b.json", "[[1,2]");
    assert_eq!(code(&run(&["canon", "--scenario", s(&bad)])), 3);
    assert_eq!(
        code(&run(&["canon", "--scenario", "/nonexistent/file.json"])),
        3
    );
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(code(&run(&[])), 1);
    assert_eq!(code(&run(&["no-such-command"])), 1);
    assert_eq!(code(&run(&["figure", "three-word"])), 1);
    assert_eq!(code(&run(&["eval", "--scenario", "x.json"])), 1);
    assert_eq!(
        code(&run(&[
            "witness",
            "--scenario",
            "x.json",
            "--states",
            "a",
            "--tol",
            "-1"
        ])),
        1
    );
    assert_eq!(code(&run(&["--help"])), 0);
}

#[test]
fn polytope_outputs() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "four.json", FOUR_WORD);
    let v = stdout_json(&run(&["polytope", "--scenario", s(&p), "--facets"]));
    assert_eq!(v["vertices"].as_array().unwrap().len(), 5);
    assert_eq!(v["facets"].as_array().unwrap().len(), 5);
    assert_eq!(v["equalities"].as_array().unwrap().len(), 0);
    assert_eq!(v["dimension"], 4);

    let vertices_only = stdout_json(&run(&["polytope", "--scenario", s(&p), "--vertices"]));
    assert!(vertices_only.get("facets").is_none());

    let p = write(&dir, "two.json", TWO_WORD);
    let v = stdout_json(&run(&["polytope", "--scenario", s(&p), "--facets"]));
    assert_eq!(v["vertices"].as_array().unwrap().len(), 2);
    assert_eq!(v["equalities"], serde_json::json!([{"a": [1, -1], "b": 0}]));
    assert_eq!(v["facets"].as_array().unwrap().len(), 2);
}

#[test]
fn resource_gates_exit_2() {
    let dir = TempDir::new().unwrap();
    let words: Vec<Vec<u32>> = full_scenario(4, 4)
        .unwrap()
        .to_sequences()
        .into_iter()
        .filter(|w| w.len() > 1)
        .collect();
    let scenario = build_scenario(&words).unwrap();
    assert_eq!(scenario.len(), 104);
    let p = write(&dir, "full.json", &scenario_json(&scenario).to_string());
    let o = run(&["polytope", "--scenario", s(&p), "--facets"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("--ineq"));
    // vertices alone are fine
    assert_eq!(code(&run(&["polytope", "--scenario", s(&p)])), 0);
    // assignment cap
    assert_eq!(
        code(&run(&["polytope", "--scenario", s(&p), "--cap", "100"])),
        2
    );
}

#[test]
fn eval_states_and_gram() {
    let dir = TempDir::new().unwrap();
    let sc = write(&dir, "two.json", TWO_WORD);
    let st = write(&dir, "states.json", ZERO_PLUS);
    let v = stdout_json(&run(&["eval", "--scenario", s(&sc), "--states", s(&st)]));
    assert!((v["1122"].as_f64().unwrap() - 0.5).abs() < 1e-15);
    assert!((v["1212"].as_f64().unwrap() - 0.25).abs() < 1e-15);

    let h = std::f64::consts::FRAC_1_SQRT_2;
    let gram = write(
        &dir,
        "gram.json",
        &format!(r#"{{"letters": [1, 2], "re": [[1, {h}], [{h}, 1]]}}"#),
    );
    let g = stdout_json(&run(&["eval", "--scenario", s(&sc), "--gram", s(&gram)]));
    for k in ["1122", "1212"] {
        assert!((g[k].as_f64().unwrap() - v[k].as_f64().unwrap()).abs() < 1e-12);
    }

    let not_psd = write(
        &dir,
        "bad.json",
        r#"{"states": {"1": {"re": [[1.5,0],[0,-0.5]]}, "2": {"re": [[1,0],[0,0]]}}}"#,
    );
    assert_eq!(
        code(&run(&[
            "eval",
            "--scenario",
            s(&sc),
            "--states",
            s(&not_psd)
        ])),
        3
    );
    let wrong_dim = write(
        &dir,
        "dim.json",
        r#"{"dimension": 3, "states": {"1": {"re": [[1,0],[0,0]]}}}"#,
    );
    assert_eq!(
        code(&run(&[
            "eval",
            "--scenario",
            s(&sc),
            "--states",
            s(&wrong_dim)
        ])),
        3
    );
}

#[test]
fn witness_reports() {
    let dir = TempDir::new().unwrap();
    let full = write(
        &dir,
        "full.json",
        &scenario_json(&full_scenario(4, 4).unwrap()).to_string(),
    );
    let states = write(
        &dir,
        "states.json",
        r#"{"states": {
            "1": {"re": [[1,0],[0,0]]}, "2": {"re": [[1,0],[0,0]]},
            "3": {"re": [[0.5,0.5],[0.5,0.5]]}, "4": {"re": [[0.5,0.5],[0.5,0.5]]}}}"#,
    );
    let ineq = write(
        &dir,
        "ineq.json",
        r#"{"terms": {"14": -1, "142": 1, "143": 1, "1423": -1}, "b": 0}"#,
    );
    let v = stdout_json(&run(&[
        "witness",
        "--scenario",
        s(&full),
        "--states",
        s(&states),
        "--ineq",
        s(&ineq),
    ]));
    let w = &v["inequality"];
    assert_eq!(w["valid"], true);
    assert_eq!(w["facet_defining"], true);
    assert!((w["value"].as_f64().unwrap() - 0.25).abs() <= 1e-12);
    assert_eq!(w["violated"], true);
    assert_eq!(v["verdict"], "outside");
    assert_eq!(v["method"], "convex-combination");

    // incoherent (diagonal) states on a scenario without repeated letters;
    // with three outcomes no facet is tight
    let four = write(&dir, "four.json", FOUR_WORD);
    let diag = write(
        &dir,
        "diag.json",
        r#"{"states": {"1": {"re": [[0.5,0,0],[0,0.3,0],[0,0,0.2]]},
            "2": {"re": [[0.2,0,0],[0,0.5,0],[0,0,0.3]]},
            "3": {"re": [[0.3,0,0],[0,0.2,0],[0,0,0.5]]}}}"#,
    );
    let v = stdout_json(&run(&[
        "witness",
        "--scenario",
        s(&four),
        "--states",
        s(&diag),
    ]));
    assert_eq!(v["verdict"], "inside");
    assert_eq!(v["method"], "facets");
    assert_eq!(v["violations"], serde_json::json!([]));

    // Designolle mixture at omega = 1/2
    let two = write(&dir, "two.json", TWO_WORD);
    let designolle = write(
        &dir,
        "designolle.json",
        r#"{"states": {
            "1": {"re": [[0.75, 0.25], [0.25, 0.25]]},
            "2": {"re": [[0.41666666666666667, -0.125], [-0.125, 0.58333333333333333]]}}}"#,
    );
    let v = stdout_json(&run(&[
        "witness",
        "--scenario",
        s(&two),
        "--states",
        s(&designolle),
    ]));
    assert_eq!(v["verdict"], "outside");
    let first = &v["violations"][0];
    assert_eq!(first["kind"], "equality");
    assert_eq!(first["constraint"], "z1122 - z1212 = 0");
    assert!((first["amount"].as_f64().unwrap() - 1.0 / 2304.0).abs() < 1e-12);
}

#[test]
fn invalid_inequality_files_exit_3() {
    let dir = TempDir::new().unwrap();
    let four = write(&dir, "four.json", FOUR_WORD);
    let states = write(
        &dir,
        "st.json",
        r#"{"states": {"1": {"re": [[1]]}, "2": {"re": [[1]]}, "3": {"re": [[1]]}}}"#,
    );
    for text in [
        r#"{"a": [1, 2], "b": 0}"#,
        r#"{"terms": {"45": 1}, "b": 0}"#,
        r#"{"a": [1,1,1,1], "b": "x"}"#,
    ] {
        let ineq = write(&dir, "i.json", text);
        let o = run(&[
            "witness",
            "--scenario",
            s(&four),
            "--states",
            s(&states),
            "--ineq",
            s(&ineq),
        ]);
        assert_eq!(code(&o), 3, "{text}");
    }
}

#[test]
fn figure_csv() {
    let o = run(&["figure", "two-word"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("family,parameter,x,y,region"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    let num = |s: &str| s.parse::<f64>().unwrap();
    let obg: Vec<_> = rows.iter().filter(|r| r[0] == "obg").collect();
    assert!(!obg.is_empty());
    for r in &obg {
        assert!((num(r[2]) - num(r[3]).powi(2)).abs() <= 1e-12);
    }
    let designolle: Vec<_> = rows.iter().filter(|r| r[0] == "designolle").collect();
    for r in [designolle.first().unwrap(), designolle.last().unwrap()] {
        assert!((num(r[2]) - num(r[3])).abs() <= 1e-12);
        assert_eq!(r[4], "classical");
    }
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("fig.csv");
    assert_eq!(code(&run(&["figure", "two-word", "--out", s(&out)])), 0);
    assert_eq!(std::fs::read_to_string(&out).unwrap(), text);
}

#[test]
fn outputs_are_deterministic() {
    let dir = TempDir::new().unwrap();
    let four = write(&dir, "four.json", FOUR_WORD);
    let a = run(&["polytope", "--scenario", s(&four), "--facets"]);
    let b = run(&["polytope", "--scenario", s(&four), "--facets"]);
    assert_eq!(a.stdout, b.stdout);
    let a = run(&["figure", "two-word"]);
    let b = run(&["figure", "two-word"]);
    assert_eq!(a.stdout, b.stdout);
}

fn statuses(text: &str) -> Vec<(String, bool)> {
    text.lines()
        .filter(|l| l.starts_with("criterion "))
        .map(|l| {
            let (head, _) = l.split_once("  ").unwrap();
            (
                head.split(':').next().unwrap().to_string(),
                head.ends_with("PASS"),
            )
        })
        .collect()
}

#[test]
fn verify_suite() {
    let a = run(&["verify"]);
    let b = run(&["verify"]);
    assert_eq!(a.stdout, b.stdout, "same seed, same report");
    assert_eq!(code(&a), 4);
    let text = String::from_utf8(a.stdout).unwrap();
    let st = statuses(&text);
    assert_eq!(st.len(), 7);
    // the only failing check is the omega = 1/2 distance requirement
    for (name, passed) in &st {
        assert_eq!(*passed, name != "criterion 4", "{text}");
    }
    assert!(text.contains("Designolle omega = 0.5 off the diagonal by > 1e-3"));

    let other = run(&["verify", "--seed", "12345"]);
    assert_eq!(
        statuses(&String::from_utf8(other.stdout).unwrap()),
        st,
        "verdicts do not depend on the seed"
    );

    let dir = TempDir::new().unwrap();
    let corrupted = write(
        &dir,
        "table.json",
        r#"{"scenario": [[1,2],[1,3],[2,3],[1,2,3]], "facets": [
            {"terms": {"123": -1}, "b": 0},
            {"terms": {"123": 1, "12": -1}, "b": 0},
            {"terms": {"123": 1, "13": -1}, "b": 0},
            {"terms": {"123": 1, "23": -1}, "b": 0},
            {"terms": {"12": 1, "13": 1, "23": 1, "123": -2}, "b": 2}]}"#,
    );
    let o = run(&["verify", "--facet-table", s(&corrupted)]);
    assert_eq!(code(&o), 4);
    let text = String::from_utf8(o.stdout).unwrap();
    let line = text
        .lines()
        .find(|l| l.starts_with("criterion 1:"))
        .unwrap();
    assert!(
        line.contains("FAIL") && line.contains("facet system matches reference table"),
        "{line}"
    );
    assert!(line.contains("z12 + z13 + z23 - 2 z123 <= 1"), "{line}");
}

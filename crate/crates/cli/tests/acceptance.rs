//! One test per acceptance criterion. Each prints a single
//! `criterion N: PASS|FAIL ...` line (run with `--nocapture` to see them
//! interleaved with the harness output).

use bargmann::claims::{self, ClaimsConfig, Outcome};

fn report(f: claims::Criterion) {
    let outcome: Outcome = f(&ClaimsConfig::default());
    println!("{}", outcome.line());
    for c in &outcome.checks {
        println!(
            "    [{}] {}: {}",
            if c.passed { "ok" } else { "FAIL" },
            c.name,
            c.detail
        );
    }
    assert!(outcome.passed(), "{}", outcome.line());
}

#[test]
fn criterion_1_facet_reproduction() {
    report(claims::facet_reproduction);
}

#[test]
fn criterion_2_two_word_polytope() {
    report(claims::two_word_polytope);
}

#[test]
fn criterion_3_witness_value() {
    report(claims::witness_value);
}

#[test]
fn criterion_4_two_word_containment() {
    report(claims::two_word_containment);
}

#[test]
fn criterion_5_combinator_identities() {
    report(claims::combinator_identities);
}

#[test]
fn criterion_6_polytope_soundness() {
    report(claims::polytope_soundness);
}

#[test]
fn criterion_7_algebraic_invariants() {
    report(claims::algebraic_invariants);
}

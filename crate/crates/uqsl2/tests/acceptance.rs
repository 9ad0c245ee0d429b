//! Acceptance suite: every release gate runs here, one test per criterion,
//! each printing a single PASS/FAIL line (visible with `--nocapture`).
//!
//! Scales and tolerances are fixed in this file; everything is exact
//! arithmetic, so "tolerance" always means literal equality.

use uqsl2::coproduct::delta_closed;
use uqsl2::expr::parse_eval;
use uqsl2::morphisms::{delta_recursive, DeltaFamily};
use uqsl2::pbw::PbwMonomial;
use uqsl2::scalar::ScalarQ;
use uqsl2::tensor::TensorElement;
use uqsl2::verify::{
    verify_corollary7, verify_drinrel, verify_engine, verify_hopf, verify_lemma4, verify_lemma7,
    verify_lemma9, verify_morphisms, verify_theorem5, verify_theorem6, CaseGen, Families,
    VerificationReport,
};

fn gate(criterion: &str, reports: &[VerificationReport]) {
    let pass = reports.iter().all(|r| r.pass());
    let cases: usize = reports.iter().map(|r| r.cases).sum();
    println!(
        "criterion {criterion}: {} ({cases} cases)",
        if pass { "PASS" } else { "FAIL" }
    );
    for r in reports {
        assert!(r.pass(), "criterion {criterion} failed:\n{r}");
    }
}

#[test]
fn c01_straightening_coefficients_closed_equals_recursive() {
    // All tuples with length <= 5 and entries <= 5, plus the shift identity.
    gate("1 (lemma9)", &[verify_lemma9(5, 5)]);
}

#[test]
fn c02_closed_coefficients_are_laurent() {
    // The closed form divides exactly and the recursion never leaves a
    // denominator; both are asserted inside the suite for every tuple.
    let r = verify_lemma9(5, 5);
    let integrality_cases = r.cases;
    gate("2 (integrality)", &[r]);
    assert!(integrality_cases > 900, "expected the full tuple range");
}

#[test]
fn c03_power_expansion_equals_brute_force() {
    gate("3 (theorem6)", &[verify_theorem6(4, 6)]);
}

#[test]
fn c04_explicit_coproducts_equal_oracle() {
    // Families x, y at indices -3..3 and psi/phi up to |3|.
    let report = verify_corollary7(3);
    // The hand-derived value at index 1, reached on two independent routes.
    let qm = ScalarQ::q_minus_qinv();
    let mut expect = TensorElement::term(
        ScalarQ::one(),
        PbwMonomial::c_half_pow(2),
        PbwMonomial::x(1),
    );
    expect = &expect
        + &TensorElement::term(
            ScalarQ::one(),
            PbwMonomial::x(1),
            PbwMonomial::new(1, 4, vec![], vec![], vec![]),
        );
    expect = &expect
        + &TensorElement::term(
            qm.clone(),
            PbwMonomial::new(0, 2, vec![0], vec![], vec![]),
            PbwMonomial::new(1, 1, vec![], vec![1], vec![]),
        );
    expect = &expect
        - &TensorElement::term(
            &(&ScalarQ::q_pow(-1) * &qm) * &qm,
            PbwMonomial::new(0, 2, vec![0, 0], vec![], vec![]),
            PbwMonomial::new(1, 2, vec![], vec![], vec![1]),
        );
    assert_eq!(delta_closed(DeltaFamily::X, 1), expect);
    assert_eq!(delta_recursive(DeltaFamily::X, 1), expect);
    gate("4 (corollary7)", &[report]);
}

#[test]
fn c05_generating_function_identities() {
    let mut reports: Vec<_> = (1..=11).map(|id| verify_lemma4(id, 3, 5)).collect();
    reports.push(verify_drinrel(4));
    gate("5 (lemma4 + drinrel)", &reports);
}

#[test]
fn c06_coproduct_series_identities() {
    let reports: Vec<_> = (1..=6).map(|eq| verify_theorem5(eq, 3)).collect();
    gate("6 (theorem5)", &reports);
}

#[test]
fn c07_shift_action_on_powers() {
    gate("7 (lemma7)", &[verify_lemma7(4, 6)]);
}

#[test]
fn c08_coproduct_respects_relations_and_coassociativity() {
    gate("8 (hopf)", &[verify_hopf(2)]);
}

#[test]
fn c09_morphism_structure() {
    gate("9 (morphisms)", &[verify_morphisms(1)]);
}

#[test]
fn c10_engine_health_and_parser_round_trip() {
    let engine = verify_engine(1, 500);
    let mut round_trip_failures = 0usize;
    let mut gen = CaseGen::new(99);
    for _ in 0..200 {
        let e = gen.element(-4, 4, 3, Families::all());
        let text = e.to_string();
        match parse_eval(&text) {
            Ok(back) if back == e => {}
            _ => round_trip_failures += 1,
        }
    }
    // A handful of fixed fraction-coefficient elements round-trip too.
    for src in [
        "(q^2+1)/(q^4+2)*x[0]*y[-3] + Kinv",
        "psi[3] - phi[-2]*c2[5]",
    ] {
        let e = parse_eval(src).unwrap();
        assert_eq!(parse_eval(&e.to_string()).unwrap(), e, "through `{src}`");
    }
    println!(
        "criterion 10 (engine + parser): {} ({} engine cases, 200 round trips)",
        if engine.pass() && round_trip_failures == 0 {
            "PASS"
        } else {
            "FAIL"
        },
        engine.cases
    );
    assert_eq!(round_trip_failures, 0, "parser round-trip failures");
    assert!(engine.pass(), "{engine}");
}

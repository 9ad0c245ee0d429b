//! Executable-theorem suites.
//!
//! Every identity the library's closed forms rest on becomes a pass/fail
//! check against an independently computed side: brute-force normal-ordered
//! products, the recursive coproduct oracle, or direct relation instances.
//! Each suite is deterministic given its parameters and seed, reports the
//! first differing monomial of any failing case, and never masks failures in
//! other cases.

mod corollary7;
mod drinrel;
mod engine_health;
mod hopf;
mod lemma4;
mod lemma9;
mod morphism_suite;
mod random;
mod theorem5;
mod theorem6;

pub use corollary7::verify_corollary7;
pub use drinrel::verify_drinrel;
pub use engine_health::verify_engine;
pub use hopf::verify_hopf;
pub use lemma4::verify_lemma4;
pub use lemma9::verify_lemma9;
pub use morphism_suite::verify_morphisms;
pub use random::{CaseGen, Families};
pub use theorem5::verify_theorem5;
pub use theorem6::{verify_lemma7, verify_theorem6};

use std::fmt;

/// One failing case: a description plus both sides and the first point where
/// they differ.
#[derive(Clone, Debug)]
pub struct CaseFailure {
    pub case: String,
    pub lhs: String,
    pub rhs: String,
    pub first_diff: String,
}

/// Outcome of one suite run.
#[derive(Clone, Debug, Default)]
pub struct VerificationReport {
    pub suite: String,
    pub params: Vec<(String, i64)>,
    pub cases: usize,
    pub failures: Vec<CaseFailure>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn new(suite: &str, params: &[(&str, i64)]) -> Self {
        VerificationReport {
            suite: suite.to_string(),
            params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            ..Default::default()
        }
    }

    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }

    /// Record an equality check between two displayable values.
    pub fn check<T: PartialEq + fmt::Display>(&mut self, case: &str, lhs: &T, rhs: &T) {
        self.check_with_diff(case, lhs, rhs, String::new());
    }

    pub fn check_with_diff<T: PartialEq + fmt::Display>(
        &mut self,
        case: &str,
        lhs: &T,
        rhs: &T,
        first_diff: String,
    ) {
        self.cases += 1;
        if lhs != rhs {
            self.failures.push(CaseFailure {
                case: case.to_string(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
                first_diff,
            });
        }
    }

    /// Record a bare boolean condition.
    pub fn check_true(&mut self, case: &str, ok: bool, detail: &str) {
        self.cases += 1;
        if !ok {
            self.failures.push(CaseFailure {
                case: case.to_string(),
                lhs: String::new(),
                rhs: String::new(),
                first_diff: detail.to_string(),
            });
        }
    }

    pub fn note(&mut self, text: String) {
        self.notes.push(text);
    }

    /// Record coefficientwise comparison of two series over `[lo, hi]`.
    pub fn check_series<C>(
        &mut self,
        case: &str,
        lhs: &crate::series::TruncatedSeries<C>,
        rhs: &crate::series::TruncatedSeries<C>,
        lo: i64,
        hi: i64,
    ) where
        C: crate::series::SeriesCoeff + fmt::Display,
    {
        self.cases += 1;
        match lhs.diff_on(rhs, lo, hi) {
            Err(e) => self.failures.push(CaseFailure {
                case: case.to_string(),
                lhs: String::new(),
                rhs: String::new(),
                first_diff: format!("window error: {e}"),
            }),
            Ok(diffs) => {
                if let Some((e, a, b)) = diffs.first() {
                    self.failures.push(CaseFailure {
                        case: case.to_string(),
                        lhs: a.to_string(),
                        rhs: b.to_string(),
                        first_diff: format!("coefficient of z^{e}"),
                    });
                }
            }
        }
    }

    /// Record comparison of two elements, localizing the first differing
    /// monomial.
    pub fn check_element(
        &mut self,
        case: &str,
        lhs: &crate::pbw::Element,
        rhs: &crate::pbw::Element,
    ) {
        self.cases += 1;
        if lhs != rhs {
            let diff = lhs
                .first_difference(rhs)
                .map(|m| m.to_string())
                .unwrap_or_default();
            self.failures.push(CaseFailure {
                case: case.to_string(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
                first_diff: diff,
            });
        }
    }

    /// Record comparison of two tensor elements, localizing the first
    /// differing tensor monomial.
    pub fn check_tensor(
        &mut self,
        case: &str,
        lhs: &crate::tensor::TensorElement,
        rhs: &crate::tensor::TensorElement,
    ) {
        self.cases += 1;
        if lhs != rhs {
            let diff = lhs
                .first_difference(rhs)
                .map(|(l, r)| format!("{l} (x) {r}"))
                .unwrap_or_default();
            self.failures.push(CaseFailure {
                case: case.to_string(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
                first_diff: diff,
            });
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "suite": self.suite,
            "params": self.params.iter()
                .map(|(k, v)| (k.clone(), serde_json::Value::from(*v)))
                .collect::<serde_json::Map<_, _>>(),
            "cases": self.cases,
            "pass": self.pass(),
            "failures": self.failures.iter().map(|f| serde_json::json!({
                "case": f.case,
                "lhs": f.lhs,
                "rhs": f.rhs,
                "first_diff": f.first_diff,
            })).collect::<Vec<_>>(),
            "notes": self.notes,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_are_deterministic() {
        let a = verify_morphisms(3);
        let b = verify_morphisms(3);
        assert_eq!(format!("{a:?}"), format!("{b:?}"));
        let a = verify_lemma9(2, 2).to_json();
        let b = verify_lemma9(2, 2).to_json();
        assert_eq!(a, b);
    }

    #[test]
    fn failures_localize_the_first_difference() {
        let mut r = VerificationReport::new("demo", &[("max_index", 1)]);
        let lhs = crate::tensor::TensorElement::term(
            crate::scalar::ScalarQ::one(),
            crate::pbw::PbwMonomial::x(0),
            crate::pbw::PbwMonomial::one(),
        );
        r.check_tensor(
            "intentional mismatch",
            &lhs,
            &crate::tensor::TensorElement::zero(),
        );
        assert!(!r.pass());
        assert!(r.failures[0].first_diff.contains("x[0]"));
        assert_eq!(r.to_json()["pass"], serde_json::Value::Bool(false));
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(", ");
        writeln!(
            f,
            "suite {} [{}]: {} of {} cases pass{}",
            self.suite,
            params,
            self.cases - self.failures.len(),
            self.cases,
            if self.pass() { "" } else { " -- FAIL" }
        )?;
        for fail in &self.failures {
            writeln!(f, "  FAIL {}", fail.case)?;
            if !fail.first_diff.is_empty() {
                writeln!(f, "    at {}", fail.first_diff)?;
            }
            if !fail.lhs.is_empty() {
                writeln!(f, "    lhs: {}", fail.lhs)?;
                writeln!(f, "    rhs: {}", fail.rhs)?;
            }
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}

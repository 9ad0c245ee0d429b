//! Randomized health checks of the multiplication engine: associativity
//! (the empirical confluence surrogate for the rewriting system), bigrading
//! preservation, and normal-form idempotence.

use crate::pbw::{mono_mul, Element};

use super::random::{CaseGen, Families};
use super::VerificationReport;

/// Run `cases` associativity triples (indices in `[-3, 3]`) and as many
/// bigrading pairs (indices in `[-4, 4]`).
pub fn verify_engine(seed: u64, cases: usize) -> VerificationReport {
    let mut report = VerificationReport::new(
        "engine",
        &[("seed", seed as i64), ("max_index", cases as i64)],
    );
    let mut gen = CaseGen::new(seed);
    for i in 0..cases {
        let a = gen.monomial(-3, 3, 3, Families::all());
        let b = gen.monomial(-3, 3, 3, Families::all());
        let c = gen.monomial(-3, 3, 3, Families::all());
        let ab = mono_mul(&a, &b);
        let bc = mono_mul(&b, &c);
        let lhs = &ab * &Element::from_monomial(c.clone());
        let rhs = &Element::from_monomial(a.clone()) * &bc;
        report.check_element(
            &format!("associativity, case {i} ({a})({b})({c})"),
            &lhs,
            &rhs,
        );
    }
    for i in 0..cases {
        let a = gen.monomial(-4, 4, 3, Families::all());
        let b = gen.monomial(-4, 4, 3, Families::all());
        let prod = mono_mul(&a, &b);
        let expect = (a.degree() + b.degree(), a.weight() + b.weight());
        let ok = prod.is_zero() || prod.bigrading() == Some(expect);
        report.check_true(
            &format!("bigrading, case {i} ({a})({b})"),
            ok,
            &format!(
                "product grading {:?}, expected {:?}",
                prod.bigrading(),
                expect
            ),
        );
        if i % 10 == 0 {
            report.check_true(
                &format!("normal-form idempotence, case {i}"),
                prod.renormalized() == prod,
                "re-running normal ordering changed the element",
            );
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn short_run_passes() {
        let r = verify_engine(11, 40);
        assert!(r.pass(), "{r}");
    }
}

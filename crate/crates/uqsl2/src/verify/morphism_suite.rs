//! Randomized structural checks of the algebra maps, the flip-alpha
//! intertwining of the coproduct, and the alternating q-binomial identity.

use num_bigint::BigInt;

use crate::morphisms::{
    alpha, alpha_tensor_flip, beta, delta_recursive, shift_s, shift_t, DeltaFamily,
};
use crate::scalar::{q_binom, LaurentPoly};

use super::random::{CaseGen, Families};
use super::VerificationReport;

const RANDOM_CASES: usize = 100;

pub fn verify_morphisms(seed: u64) -> VerificationReport {
    let mut report = VerificationReport::new("morphisms", &[("seed", seed as i64)]);
    let mut gen = CaseGen::new(seed);

    for i in 0..RANDOM_CASES {
        let e = gen.element(-4, 4, 3, Families::all());
        report.check_element(
            &format!("alpha involution, case {i}"),
            &alpha(&alpha(&e)),
            &e,
        );
        report.check_element(&format!("beta involution, case {i}"), &beta(&beta(&e)), &e);
    }
    for i in 0..RANDOM_CASES {
        let a = gen.element(-4, 4, 2, Families::all());
        let b = gen.element(-4, 4, 2, Families::all());
        report.check_element(
            &format!("alpha antihomomorphism, case {i}"),
            &alpha(&(&a * &b)),
            &(&alpha(&b) * &alpha(&a)),
        );
        report.check_element(
            &format!("beta antihomomorphism, case {i}"),
            &beta(&(&a * &b)),
            &(&beta(&b) * &beta(&a)),
        );
    }
    for i in 0..RANDOM_CASES {
        let a = gen.element(-4, 4, 2, Families::x_side());
        let b = gen.element(-4, 4, 2, Families::x_side());
        report.check_element(
            &format!("shift S homomorphism, case {i}"),
            &shift_s(&(&a * &b), 1).unwrap(),
            &(&shift_s(&a, 1).unwrap() * &shift_s(&b, 1).unwrap()),
        );
        let a = gen.element(-4, 4, 2, Families::y_side());
        let b = gen.element(-4, 4, 2, Families::y_side());
        report.check_element(
            &format!("shift T homomorphism, case {i}"),
            &shift_t(&(&a * &b), 1).unwrap(),
            &(&shift_t(&a, 1).unwrap() * &shift_t(&b, 1).unwrap()),
        );
    }
    // Flip-alpha intertwines the coproduct with alpha on the generators.
    for n in -2..=2i64 {
        report.check_tensor(
            &format!("flip-alpha on x at {n}"),
            &alpha_tensor_flip(&delta_recursive(DeltaFamily::X, n)),
            &delta_recursive(DeltaFamily::Y, -n),
        );
        report.check_tensor(
            &format!("flip-alpha on y at {n}"),
            &alpha_tensor_flip(&delta_recursive(DeltaFamily::Y, n)),
            &delta_recursive(DeltaFamily::X, -n),
        );
    }
    for n in 0..=2i64 {
        report.check_tensor(
            &format!("flip-alpha on psi at {n}"),
            &alpha_tensor_flip(&delta_recursive(DeltaFamily::Psi, n)),
            &delta_recursive(DeltaFamily::Phi, -n),
        );
        report.check_tensor(
            &format!("flip-alpha on phi at {}", -n),
            &alpha_tensor_flip(&delta_recursive(DeltaFamily::Phi, -n)),
            &delta_recursive(DeltaFamily::Psi, n),
        );
    }
    // sum_{k=0}^{n} (-1)^{n+k} [n choose k] q^{(n-k)(n-1)} = 0 for n >= 1.
    for n in 1..=12i64 {
        let mut acc = LaurentPoly::zero();
        for k in 0..=n {
            let sign = if (n + k) % 2 == 0 { 1 } else { -1 };
            acc = &acc + &q_binom(n, k).mul_monomial(&BigInt::from(sign), (n - k) * (n - 1));
        }
        report.check_true(
            &format!("alternating binomial sum at n={n}"),
            acc.is_zero(),
            "sum is nonzero",
        );
    }
    // Whether alpha and beta commute is recorded, not asserted.
    let mut commute = true;
    for _ in 0..20 {
        let e = gen.element(-3, 3, 2, Families::all());
        if alpha(&beta(&e)) != beta(&alpha(&e)) {
            commute = false;
            break;
        }
    }
    report.note(format!(
        "alpha and beta {} on sampled elements",
        if commute { "commute" } else { "do not commute" }
    ));
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_run_passes() {
        let r = verify_morphisms(7);
        assert!(r.pass(), "{r}");
        assert!(r.notes.iter().any(|n| n.contains("commute")));
    }
}

//! The exchange relation between `X(w)` and `Psi(z)`: the rational
//! prefactor `(z c^{1/2} - q^2 w) / (q^2 z c^{1/2} - w)`, expanded into
//! nonnegative powers of `w`, intertwines the two series.
//!
//! Both sides are bivariate; each coefficient of `w^{-n} z^{-m}` is a finite
//! exact element, so the check runs as a direct double loop with no series
//! truncation at all.

use crate::pbw::{psi_element, Element};
use crate::scalar::ScalarQ;

use super::VerificationReport;

/// Compare `X(w) Psi(z)` with the prefactor expansion of `Psi(z) X(w)`
/// coefficient-wise for `|n| <= order` (in `w`) and `0 <= m <= order` (in
/// `z`).
pub fn verify_drinrel(order: i64) -> VerificationReport {
    let mut report = VerificationReport::new("drinrel", &[("order", order)]);
    for n in -order..=order {
        for m in 0..=order {
            // LHS: coefficient of w^{-n} z^{-m} in X(w) Psi(z).
            let lhs = &Element::x(n) * &psi_element(m);
            // RHS: the prefactor expansion contributes
            //   sum_{k=0}^{m}   q^{-2k-2} c^{-k/2}   psi_{m-k}   x_{n+k}
            // - sum_{k=0}^{m-1} q^{-2k}   c^{-(k+1)/2} psi_{m-1-k} x_{n+k+1}
            let mut rhs = Element::zero();
            for k in 0..=m {
                let term = (&psi_element(m - k) * &Element::x(n + k))
                    .mul_central(&ScalarQ::q_pow(-2 * k - 2), -k);
                rhs = &rhs + &term;
            }
            for k in 0..m {
                let term = (&psi_element(m - 1 - k) * &Element::x(n + k + 1))
                    .mul_central(&ScalarQ::q_pow(-2 * k), -(k + 1));
                rhs = &rhs - &term;
            }
            report.check_element(&format!("coefficient of w^{}, z^{}", -n, -m), &lhs, &rhs);
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_window_passes() {
        let r = verify_drinrel(2);
        assert!(r.pass(), "{r}");
    }

    #[test]
    fn degenerate_window_reduces_to_k_conjugation() {
        // At order 0 the only case is x_n K = q^{-2} K x_n.
        let r = verify_drinrel(0);
        assert!(r.pass(), "{r}");
    }
}

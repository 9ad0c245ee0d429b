//! The coproduct as an algebra map: it must annihilate every defining
//! relation, and it must be coassociative.

use crate::morphisms::{
    delta_h, delta_recursive, delta_tensor_left, delta_tensor_right, DeltaFamily,
};
use crate::pbw::PbwMonomial;
use crate::scalar::{q_int, LaurentPoly, ScalarQ};
use crate::tensor::TensorElement;

use super::VerificationReport;

fn delta_c_pow(c_half: i64) -> TensorElement {
    TensorElement::term(
        ScalarQ::one(),
        PbwMonomial::c_half_pow(c_half),
        PbwMonomial::c_half_pow(c_half),
    )
}

fn delta_k_pow(k: i64) -> TensorElement {
    TensorElement::term(ScalarQ::one(), PbwMonomial::k_pow(k), PbwMonomial::k_pow(k))
}

/// `[2m]/m`
fn h_scalar(m: i64) -> ScalarQ {
    ScalarQ::new(q_int(2 * m), LaurentPoly::from_int(m))
}

/// Apply the coproduct to every defining relation with indices in
/// `[-n_max, n_max]`, and check coassociativity on `x_N`, `y_N` for
/// `|N| <= min(n_max, 2)`.
pub fn verify_hopf(n_max: i64) -> VerificationReport {
    let mut report = VerificationReport::new("hopf", &[("max_index", n_max)]);
    let idx: Vec<i64> = (-n_max..=n_max).collect();
    let nonzero: Vec<i64> = idx.iter().copied().filter(|&m| m != 0).collect();
    let inv = ScalarQ::q_minus_qinv().inv();

    let dx = |n: i64| delta_recursive(DeltaFamily::X, n);
    let dy = |n: i64| delta_recursive(DeltaFamily::Y, n);

    // [h_m, h_n] = delta_{m,-n} ([2m]/m) (c^m - c^{-m}) / (q - q^{-1})
    for &m in &nonzero {
        for &n in &nonzero {
            let lhs = delta_h(m).commutator(&delta_h(n));
            let rhs = if m == -n {
                (&delta_c_pow(2 * m) - &delta_c_pow(-2 * m)).scale(&(&h_scalar(m) * &inv))
            } else {
                TensorElement::zero()
            };
            report.check_tensor(&format!("h-h relation at ({m},{n})"), &lhs, &rhs);
        }
    }
    // K commutes with h_m
    for &m in &nonzero {
        report.check_tensor(
            &format!("K-h relation at {m}"),
            &delta_k_pow(1).commutator(&delta_h(m)),
            &TensorElement::zero(),
        );
    }
    // K x_m K^{-1} = q^2 x_m and K y_m K^{-1} = q^{-2} y_m
    for &m in &idx {
        let lhs = &(&delta_k_pow(1) * &dx(m)) * &delta_k_pow(-1);
        report.check_tensor(
            &format!("K-conjugation on x at {m}"),
            &lhs,
            &dx(m).scale(&ScalarQ::q_pow(2)),
        );
        let lhs = &(&delta_k_pow(1) * &dy(m)) * &delta_k_pow(-1);
        report.check_tensor(
            &format!("K-conjugation on y at {m}"),
            &lhs,
            &dy(m).scale(&ScalarQ::q_pow(-2)),
        );
    }
    // [h_m, x_n] = ([2m]/m) c^{-|m|/2} x_{m+n}
    for &m in &nonzero {
        for &n in &idx {
            let lhs = delta_h(m).commutator(&dx(n));
            let rhs = (&delta_c_pow(-m.abs()) * &dx(m + n)).scale(&h_scalar(m));
            report.check_tensor(&format!("h-x relation at ({m},{n})"), &lhs, &rhs);
        }
    }
    // [h_m, y_n] = -([2m]/m) c^{|m|/2} y_{m+n}
    for &m in &nonzero {
        for &n in &idx {
            let lhs = delta_h(m).commutator(&dy(n));
            let rhs = (&delta_c_pow(m.abs()) * &dy(m + n)).scale(&-&h_scalar(m));
            report.check_tensor(&format!("h-y relation at ({m},{n})"), &lhs, &rhs);
        }
    }
    // x_{m+1} x_n - q^2 x_n x_{m+1} = q^2 x_m x_{n+1} - x_{n+1} x_m
    let q2 = ScalarQ::q_pow(2);
    for &m in &idx {
        for &n in &idx {
            let lhs = &(&dx(m + 1) * &dx(n)) - &(&dx(n) * &dx(m + 1)).scale(&q2);
            let rhs = &(&dx(m) * &dx(n + 1)).scale(&q2) - &(&dx(n + 1) * &dx(m));
            report.check_tensor(&format!("x-x relation at ({m},{n})"), &lhs, &rhs);
        }
    }
    // y_{m+1} y_n - q^{-2} y_n y_{m+1} = q^{-2} y_m y_{n+1} - y_{n+1} y_m
    let qm2 = ScalarQ::q_pow(-2);
    for &m in &idx {
        for &n in &idx {
            let lhs = &(&dy(m + 1) * &dy(n)) - &(&dy(n) * &dy(m + 1)).scale(&qm2);
            let rhs = &(&dy(m) * &dy(n + 1)).scale(&qm2) - &(&dy(n + 1) * &dy(m));
            report.check_tensor(&format!("y-y relation at ({m},{n})"), &lhs, &rhs);
        }
    }
    // [x_m, y_n] = (c^{(m-n)/2} psi_{m+n} - c^{-(m-n)/2} phi_{m+n}) / (q - q^{-1})
    for &m in &idx {
        for &n in &idx {
            let lhs = dx(m).commutator(&dy(n));
            let s = m + n;
            let psi_part = if s >= 0 {
                &delta_c_pow(m - n) * &delta_recursive(DeltaFamily::Psi, s)
            } else {
                TensorElement::zero()
            };
            let phi_part = if s <= 0 {
                &delta_c_pow(n - m) * &delta_recursive(DeltaFamily::Phi, s)
            } else {
                TensorElement::zero()
            };
            let rhs = (&psi_part - &phi_part).scale(&inv);
            report.check_tensor(&format!("x-y relation at ({m},{n})"), &lhs, &rhs);
        }
    }
    // Coassociativity on the loop generators.
    let coassoc_bound = n_max.min(2);
    for n in -coassoc_bound..=coassoc_bound {
        for (family, label) in [(DeltaFamily::X, "x"), (DeltaFamily::Y, "y")] {
            let d = delta_recursive(family, n);
            let left = delta_tensor_left(&d);
            let right = delta_tensor_right(&d);
            report.cases += 1;
            if left != right {
                let diff = left
                    .first_difference(&right)
                    .map(|(a, b, c)| format!("{a} (x) {b} (x) {c}"))
                    .unwrap_or_default();
                report.failures.push(super::CaseFailure {
                    case: format!("coassociativity on {label} at {n}"),
                    lhs: left.to_string(),
                    rhs: right.to_string(),
                    first_diff: diff,
                });
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations_at_one_pass() {
        let r = verify_hopf(1);
        assert!(r.pass(), "{r}");
    }
}

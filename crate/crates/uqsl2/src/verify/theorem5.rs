//! The six coproduct generating-function identities: the coproducts of all
//! generators, packaged as series with tensor coefficients, against their
//! product expansions.

use crate::morphisms::{delta_recursive, DeltaFamily};
use crate::pbw::Element;
use crate::scalar::{q_int, ScalarQ};
use crate::series::{gen_series, tensor_series, CentralScale, GenSeries, TruncatedSeries};
use crate::tensor::TensorElement;

use super::VerificationReport;

type TSer = TruncatedSeries<TensorElement>;
type ESer = TruncatedSeries<Element>;

fn qc(k: i64, c2: i64) -> CentralScale {
    CentralScale::q_c(k, c2)
}

/// LHS generating function: coefficients `Delta(g_k)` times a central tensor
/// factor, one-sided in `z`.
fn delta_series(
    family: DeltaFamily,
    from: i64,
    order: i64,
    index_sign: i64,
    z_sign: i64,
    central: impl Fn(i64) -> (i64, i64),
) -> TSer {
    let coeffs = (from..=order).map(|k| {
        let (l2, r2) = central(k);
        let v = delta_recursive(family, index_sign * k).scale_central(&ScalarQ::one(), l2, r2);
        (z_sign * k, v)
    });
    if z_sign < 0 {
        TruncatedSeries::from_parts(coeffs, Some(-order), None, None, Some(-from))
    } else {
        TruncatedSeries::from_parts(coeffs, None, Some(order), Some(from), None)
    }
}

fn epow(s: &ESer, n: i64) -> ESer {
    s.pow(n as u32).expect("series power window")
}

/// `(-q^{e} (q - q^{-1})^2)^n`
fn sign_pref(e: i64, n: i64) -> ScalarQ {
    (-&(&ScalarQ::q_pow(e) * &ScalarQ::q_minus_qinv().pow(2))).pow(n)
}

/// Check identity `eq` (1..=6) on a `z`-window of size `order`.
pub fn verify_theorem5(eq: u32, order: i64) -> VerificationReport {
    assert!((1..=6).contains(&eq), "identity id must be 1..=6");
    let mut report = VerificationReport::new(&format!("theorem5.{eq}"), &[("order", order)]);
    let d = order;
    match eq {
        1 => {
            // sum_k Delta(x_k) (zc (x) c^2)^{-k}
            //   = 1 (x) X_0^+(c^2 z)
            //   + sum_n (-q(q-q^{-1})^2)^n X_0^+(cz)^{n+1} (x) Y^+(q^2cz)^n Psi(c^{3/2}z)
            let lhs = delta_series(DeltaFamily::X, 0, d, 1, -1, |k| (-2 * k, -4 * k));
            let x0cz = gen_series(GenSeries::X0Plus, d).scale_argument(&qc(0, 2));
            let ypcz = gen_series(GenSeries::YPlus, d).scale_argument(&qc(2, 2));
            let psi = gen_series(GenSeries::Psi, d).scale_argument(&qc(0, 3));
            let mut rhs = tensor_series(
                &ESer::constant(Element::one()),
                &gen_series(GenSeries::X0Plus, d).scale_argument(&qc(0, 4)),
            )
            .unwrap();
            for n in 0..=d {
                let left = epow(&x0cz, n + 1);
                let right = epow(&ypcz, n).mul(&psi).unwrap();
                let term = tensor_series(&left, &right)
                    .unwrap()
                    .scale(&sign_pref(1, n));
                rhs = rhs.add(&term).unwrap();
            }
            report.check_series("coefficients", &lhs, &rhs, -d, 0);
        }
        2 => {
            // sum_{k>=1} Delta(x_{-k}) (zc (x) 1)^k
            //   = 1 (x) X^-(z)
            //   + sum_n (-q(q-q^{-1})^2)^n X^-(cz)^{n+1} (x) Y_0^-(q^2cz)^n Phi(c^{1/2}z)
            let lhs = delta_series(DeltaFamily::X, 1, d, -1, 1, |k| (2 * k, 0));
            let xmcz = gen_series(GenSeries::XMinus, d).scale_argument(&qc(0, 2));
            let y0m = gen_series(GenSeries::Y0Minus, d).scale_argument(&qc(2, 2));
            let phi = gen_series(GenSeries::Phi, d).scale_argument(&qc(0, 1));
            let mut rhs = tensor_series(
                &ESer::constant(Element::one()),
                &gen_series(GenSeries::XMinus, d),
            )
            .unwrap();
            for n in 0..d.max(1) {
                let left = epow(&xmcz, n + 1);
                let right = epow(&y0m, n).mul(&phi).unwrap();
                let term = tensor_series(&left, &right)
                    .unwrap()
                    .scale(&sign_pref(1, n));
                rhs = rhs.add(&term).unwrap();
            }
            report.check_series("coefficients", &lhs, &rhs, 0, d);
        }
        3 => {
            // sum_{k>=1} Delta(y_k) (z (x) c)^{-k}
            //   = Y^+(z) (x) 1
            //   + sum_n (-q^{-1}(q-q^{-1})^2)^n Psi(c^{1/2}z) X_0^+(q^2cz)^n (x) Y^+(cz)^{n+1}
            let lhs = delta_series(DeltaFamily::Y, 1, d, 1, -1, |k| (0, -2 * k));
            let psi = gen_series(GenSeries::Psi, d).scale_argument(&qc(0, 1));
            let x0q = gen_series(GenSeries::X0Plus, d).scale_argument(&qc(2, 2));
            let ypcz = gen_series(GenSeries::YPlus, d).scale_argument(&qc(0, 2));
            let mut rhs = tensor_series(
                &gen_series(GenSeries::YPlus, d),
                &ESer::constant(Element::one()),
            )
            .unwrap();
            for n in 0..=d {
                let left = psi.mul(&epow(&x0q, n)).unwrap();
                let right = epow(&ypcz, n + 1);
                let term = tensor_series(&left, &right)
                    .unwrap()
                    .scale(&sign_pref(-1, n));
                rhs = rhs.add(&term).unwrap();
            }
            report.check_series("coefficients", &lhs, &rhs, -d, 0);
        }
        4 => {
            // sum_{k>=0} Delta(y_{-k}) (zc^2 (x) c)^k
            //   = Y_0^-(c^2 z) (x) 1
            //   + sum_n (-q^{-1}(q-q^{-1})^2)^n Phi(c^{3/2}z) X^-(q^2cz)^n (x) Y_0^-(cz)^{n+1}
            let lhs = delta_series(DeltaFamily::Y, 0, d, -1, 1, |k| (4 * k, 2 * k));
            let phi = gen_series(GenSeries::Phi, d).scale_argument(&qc(0, 3));
            let xmq = gen_series(GenSeries::XMinus, d).scale_argument(&qc(2, 2));
            let y0m = gen_series(GenSeries::Y0Minus, d).scale_argument(&qc(0, 2));
            let mut rhs = tensor_series(
                &gen_series(GenSeries::Y0Minus, d).scale_argument(&qc(0, 4)),
                &ESer::constant(Element::one()),
            )
            .unwrap();
            for n in 0..=d {
                let left = phi.mul(&epow(&xmq, n)).unwrap();
                let right = epow(&y0m, n + 1);
                let term = tensor_series(&left, &right)
                    .unwrap()
                    .scale(&sign_pref(-1, n));
                rhs = rhs.add(&term).unwrap();
            }
            report.check_series("coefficients", &lhs, &rhs, 0, d);
        }
        5 => {
            // sum_k Delta(psi_k) (zc^{1/2} (x) c^{3/2})^{-k}
            //   = sum_n (-1)^n (q-q^{-1})^{2n} [n+1]
            //       Psi(c^{1/2}z) X_0^+(q^2cz)^n (x) Y^+(q^2cz)^n Psi(c^{3/2}z)
            let lhs = delta_series(DeltaFamily::Psi, 0, d, 1, -1, |k| (-k, -3 * k));
            let psi_l = gen_series(GenSeries::Psi, d).scale_argument(&qc(0, 1));
            let x0q = gen_series(GenSeries::X0Plus, d).scale_argument(&qc(2, 2));
            let ypq = gen_series(GenSeries::YPlus, d).scale_argument(&qc(2, 2));
            let psi_r = gen_series(GenSeries::Psi, d).scale_argument(&qc(0, 3));
            let mut rhs = TSer::zero();
            for n in 0..=d {
                let mut pref =
                    &ScalarQ::q_minus_qinv().pow(2 * n) * &ScalarQ::from_laurent(q_int(n + 1));
                if n % 2 == 1 {
                    pref = -&pref;
                }
                let left = psi_l.mul(&epow(&x0q, n)).unwrap();
                let right = epow(&ypq, n).mul(&psi_r).unwrap();
                let term = tensor_series(&left, &right).unwrap().scale(&pref);
                rhs = rhs.add(&term).unwrap();
            }
            report.check_series("coefficients", &lhs, &rhs, -d, 0);
        }
        6 => {
            // sum_k Delta(phi_{-k}) (zc^{3/2} (x) c^{1/2})^{k}
            //   = sum_n (-1)^n (q-q^{-1})^{2n} [n+1]
            //       Phi(c^{3/2}z) X^-(q^2cz)^n (x) Y_0^-(q^2cz)^n Phi(c^{1/2}z)
            let lhs = delta_series(DeltaFamily::Phi, 0, d, -1, 1, |k| (3 * k, k));
            let phi_l = gen_series(GenSeries::Phi, d).scale_argument(&qc(0, 3));
            let xmq = gen_series(GenSeries::XMinus, d).scale_argument(&qc(2, 2));
            let y0q = gen_series(GenSeries::Y0Minus, d).scale_argument(&qc(2, 2));
            let phi_r = gen_series(GenSeries::Phi, d).scale_argument(&qc(0, 1));
            let mut rhs = TSer::zero();
            for n in 0..=d {
                let mut pref =
                    &ScalarQ::q_minus_qinv().pow(2 * n) * &ScalarQ::from_laurent(q_int(n + 1));
                if n % 2 == 1 {
                    pref = -&pref;
                }
                let left = phi_l.mul(&epow(&xmq, n)).unwrap();
                let right = epow(&y0q, n).mul(&phi_r).unwrap();
                let term = tensor_series(&left, &right).unwrap().scale(&pref);
                rhs = rhs.add(&term).unwrap();
            }
            report.check_series("coefficients", &lhs, &rhs, 0, d);
        }
        _ => unreachable!(),
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_six_pass_small() {
        for eq in 1..=6 {
            let r = verify_theorem5(eq, 2);
            assert!(r.pass(), "identity {eq} failed:\n{r}");
        }
    }
}

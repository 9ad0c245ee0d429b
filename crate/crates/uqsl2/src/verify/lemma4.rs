//! The eleven auxiliary commutation identities between the generating
//! functions, checked coefficient-wise on provably exact windows.

use crate::pbw::Element;
use crate::scalar::{q_int, ScalarQ};
use crate::series::{gen_series, CentralScale, GenSeries, TruncatedSeries};

use super::VerificationReport;

type Ser = TruncatedSeries<Element>;

fn constant(e: Element) -> Ser {
    Ser::constant(e)
}

fn z_shift(s: &Ser, by: i64) -> Ser {
    crate::series::mul_with(&Ser::z_power(by, Element::one()), s, |a, b| a * b)
        .expect("z-shift never empties a window")
}

fn mul(a: &Ser, b: &Ser) -> Ser {
    a.mul(b).expect("series product window")
}

fn commutator(a: &Ser, b: &Ser) -> Ser {
    mul(a, b).sub(&mul(b, a)).expect("series window")
}

/// `sum_{k=0}^{n-1} q^{-2k}`
fn geo_sum(n: i64) -> ScalarQ {
    let mut acc = ScalarQ::zero();
    for k in 0..n {
        acc = &acc + &ScalarQ::q_pow(-2 * k);
    }
    acc
}

fn qc(k: i64, c2: i64) -> CentralScale {
    CentralScale::q_c(k, c2)
}

/// Check one of the eleven identities, with powers up to `n_max` for the
/// `n`-indexed ones, comparing coefficients on a window of size `order`.
pub fn verify_lemma4(id: u32, n_max: i64, order: i64) -> VerificationReport {
    assert!((1..=11).contains(&id), "identity id must be 1..=11");
    let mut report = VerificationReport::new(
        &format!("lemma4.{id}"),
        &[("max_index", n_max), ("order", order)],
    );
    let d = order;
    // Internal truncation: one extra exponent absorbs the explicit z-factors.
    let dd = d + 1;
    let two = ScalarQ::from_laurent(q_int(2));
    let qm = ScalarQ::q_minus_qinv();
    match id {
        1 => {
            // [h_1, X_0^+(z)^n]
            //   = [2](sum q^{-2k}) z c^{-1/2} (X_0^+(z)^n - x_0 X_0^+(z)^{n-1})
            let x0p = gen_series(GenSeries::X0Plus, dd);
            for n in 0..=n_max {
                let xn = x0p.pow(n as u32).unwrap();
                let lhs = commutator(&constant(Element::h(1)), &xn);
                let rhs = if n == 0 {
                    Ser::zero()
                } else {
                    let tail = mul(&constant(Element::x(0)), &x0p.pow(n as u32 - 1).unwrap());
                    let diff = xn.sub(&tail).unwrap();
                    z_shift(&diff, 1)
                        .scale(&(&two * &geo_sum(n)))
                        .map_coeffs(|c| c.mul_central(&ScalarQ::one(), -1))
                };
                report.check_series(&format!("n={n}"), &lhs, &rhs, -d, 0);
            }
        }
        2 => {
            // [h_1, Y^+(z)^n]
            //   = -[2](sum q^{-2k}) c^{1/2} (z Y^+(z)^n - Y^+(z)^{n-1} y_1)
            let yp = gen_series(GenSeries::YPlus, dd);
            for n in 0..=n_max {
                let yn = yp.pow(n as u32).unwrap();
                let lhs = commutator(&constant(Element::h(1)), &yn);
                let rhs = if n == 0 {
                    Ser::zero()
                } else {
                    let tail = mul(&yp.pow(n as u32 - 1).unwrap(), &constant(Element::y(1)));
                    let diff = z_shift(&yn, 1).sub(&tail).unwrap();
                    diff.scale(&-&(&two * &geo_sum(n)))
                        .map_coeffs(|c| c.mul_central(&ScalarQ::one(), 1))
                };
                report.check_series(&format!("n={n}"), &lhs, &rhs, -d, 0);
            }
        }
        3 => {
            // X_0^+(z)^n x_0 = q^{-2n} x_0 X_0^+(z)^n + (1 - q^{-2n}) X_0^+(z)^{n+1}
            let x0p = gen_series(GenSeries::X0Plus, dd);
            for n in 0..=n_max {
                let xn = x0p.pow(n as u32).unwrap();
                let lhs = mul(&xn, &constant(Element::x(0)));
                let rhs = mul(&constant(Element::x(0)), &xn)
                    .scale(&ScalarQ::q_pow(-2 * n))
                    .add(
                        &x0p.pow(n as u32 + 1)
                            .unwrap()
                            .scale(&(&ScalarQ::one() - &ScalarQ::q_pow(-2 * n))),
                    )
                    .unwrap();
                report.check_series(&format!("n={n}"), &lhs, &rhs, -d, 0);
            }
        }
        4 => {
            // X^+(z)^n x_0 = q^{2n} x_0 X^+(z)^n - (1 - q^{2n}) X^+(z)^{n+1}
            let xp = gen_series(GenSeries::XPlus, dd);
            for n in 0..=n_max {
                let xn = xp.pow(n as u32).unwrap();
                let lhs = mul(&xn, &constant(Element::x(0)));
                let rhs = mul(&constant(Element::x(0)), &xn)
                    .scale(&ScalarQ::q_pow(2 * n))
                    .sub(
                        &xp.pow(n as u32 + 1)
                            .unwrap()
                            .scale(&(&ScalarQ::one() - &ScalarQ::q_pow(2 * n))),
                    )
                    .unwrap();
                report.check_series(&format!("n={n}"), &lhs, &rhs, -d, 0);
            }
        }
        5 => {
            // y_1 Y^+(z)^n = q^{-2n} Y^+(z)^n y_1 + (1 - q^{-2n}) z Y^+(z)^{n+1}
            let yp = gen_series(GenSeries::YPlus, dd);
            for n in 0..=n_max {
                let yn = yp.pow(n as u32).unwrap();
                let lhs = mul(&constant(Element::y(1)), &yn);
                let rhs = mul(&yn, &constant(Element::y(1)))
                    .scale(&ScalarQ::q_pow(-2 * n))
                    .add(
                        &z_shift(&yp.pow(n as u32 + 1).unwrap(), 1)
                            .scale(&(&ScalarQ::one() - &ScalarQ::q_pow(-2 * n))),
                    )
                    .unwrap();
                report.check_series(&format!("n={n}"), &lhs, &rhs, -d, 0);
            }
        }
        6 => {
            // y_0 Y^+(z)^n = q^{2n} Y^+(z)^n y_0 - (1 - q^{2n}) Y^+(z)^{n+1}
            let yp = gen_series(GenSeries::YPlus, dd);
            for n in 0..=n_max {
                let yn = yp.pow(n as u32).unwrap();
                let lhs = mul(&constant(Element::y(0)), &yn);
                let rhs = mul(&yn, &constant(Element::y(0)))
                    .scale(&ScalarQ::q_pow(2 * n))
                    .sub(
                        &yp.pow(n as u32 + 1)
                            .unwrap()
                            .scale(&(&ScalarQ::one() - &ScalarQ::q_pow(2 * n))),
                    )
                    .unwrap();
                report.check_series(&format!("n={n}"), &lhs, &rhs, -d, 0);
            }
        }
        7 => {
            // x_0 Psi(z) = q^2 Psi(z) x_0 - (q^2 - q^{-2}) Psi(z) X_0^+(q^2 c^{1/2} z)
            let psi = gen_series(GenSeries::Psi, dd);
            let x0sub = gen_series(GenSeries::X0Plus, dd).scale_argument(&qc(2, 1));
            let lhs = mul(&constant(Element::x(0)), &psi);
            let rhs = mul(&psi, &constant(Element::x(0)))
                .scale(&ScalarQ::q_pow(2))
                .sub(&mul(&psi, &x0sub).scale(&(&ScalarQ::q_pow(2) - &ScalarQ::q_pow(-2))))
                .unwrap();
            report.check_series("all orders", &lhs, &rhs, -d, 0);
        }
        8 => {
            // Psi(z) y_1 = q^2 y_1 Psi(z) + (1 - q^4) z c^{-1/2} Y^+(q^2 c^{-1/2} z) Psi(z)
            let psi = gen_series(GenSeries::Psi, dd);
            let ysub = gen_series(GenSeries::YPlus, dd).scale_argument(&qc(2, -1));
            let lhs = mul(&psi, &constant(Element::y(1)));
            let rhs = mul(&constant(Element::y(1)), &psi)
                .scale(&ScalarQ::q_pow(2))
                .add(
                    &z_shift(&mul(&ysub, &psi), 1)
                        .scale(&(&ScalarQ::one() - &ScalarQ::q_pow(4)))
                        .map_coeffs(|c| c.mul_central(&ScalarQ::one(), -1)),
                )
                .unwrap();
            report.check_series("all orders", &lhs, &rhs, -d, 0);
        }
        9 => {
            // [X_0^+(z)^n, y_0] = (q - q^{-1})^{-1} q^{n-1} [n]
            //   (q^{-2n+2} Psi(c^{-1/2} z) X_0^+(q^2 z)^{n-1} - K^{-1} X_0^+(z)^{n-1})
            let x0p = gen_series(GenSeries::X0Plus, dd);
            let psi = gen_series(GenSeries::Psi, dd).scale_argument(&qc(0, -1));
            let xq2 = gen_series(GenSeries::X0Plus, dd).scale_argument(&qc(2, 0));
            for n in 0..=n_max {
                let lhs = commutator(&x0p.pow(n as u32).unwrap(), &constant(Element::y(0)));
                let rhs = if n == 0 {
                    Ser::zero()
                } else {
                    let head = mul(&psi, &xq2.pow(n as u32 - 1).unwrap())
                        .scale(&ScalarQ::q_pow(-2 * n + 2));
                    let tail = mul(
                        &constant(Element::k_pow(-1)),
                        &x0p.pow(n as u32 - 1).unwrap(),
                    );
                    let factor =
                        &(&qm.inv() * &ScalarQ::q_pow(n - 1)) * &ScalarQ::from_laurent(q_int(n));
                    head.sub(&tail).unwrap().scale(&factor)
                };
                report.check_series(&format!("n={n}"), &lhs, &rhs, -d, 0);
            }
        }
        10 => {
            // [Y^+(z), x_0] = -(q - q^{-1})^{-1} (Psi(c^{1/2} z) - K)
            let yp = gen_series(GenSeries::YPlus, dd);
            let lhs = commutator(&yp, &constant(Element::x(0)));
            let rhs = gen_series(GenSeries::Psi, dd)
                .scale_argument(&qc(0, 1))
                .sub(&constant(Element::k_pow(1)))
                .unwrap()
                .scale(&-&qm.inv());
            report.check_series("all orders", &lhs, &rhs, -d, 0);
        }
        11 => {
            // [X_0^+(z), y_1] = (q - q^{-1})^{-1} z c^{-1} (Psi(c^{-1/2} z) - K)
            let x0p = gen_series(GenSeries::X0Plus, dd);
            let lhs = commutator(&x0p, &constant(Element::y(1)));
            let inner = gen_series(GenSeries::Psi, dd)
                .scale_argument(&qc(0, -1))
                .sub(&constant(Element::k_pow(1)))
                .unwrap();
            let rhs = z_shift(&inner, 1)
                .scale(&qm.inv())
                .map_coeffs(|c| c.mul_central(&ScalarQ::one(), -2));
            report.check_series("all orders", &lhs, &rhs, -d, 0);
        }
        _ => unreachable!(),
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_eleven_pass_small() {
        for id in 1..=11 {
            let r = verify_lemma4(id, 2, 3);
            assert!(r.pass(), "identity {id} failed:\n{r}");
        }
    }
}

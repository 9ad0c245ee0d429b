//! Closed-form powers of the degree-zero generating functions against the
//! brute-force products, and the action of the index shift `S` on those
//! powers.

use crate::coproduct::{power_brute, power_closed, PowerKind};
use crate::morphisms::shift_s;
use crate::pbw::Element;
use crate::scalar::{q_binom, ScalarQ};
use crate::series::{gen_series, GenSeries, TruncatedSeries};

use super::VerificationReport;

type Ser = TruncatedSeries<Element>;

/// `power_closed` vs the brute-force `n`-fold normal-ordered product, for
/// both the `x`- and `y`-variants.
pub fn verify_theorem6(n_max: i64, order: i64) -> VerificationReport {
    let mut report = VerificationReport::new("theorem6", &[("max_index", n_max), ("order", order)]);
    for n in 1..=n_max {
        for (kind, label) in [(PowerKind::X0Plus, "x"), (PowerKind::Y0Plus, "y")] {
            let closed = power_closed(kind, n, order);
            let brute = power_brute(kind, n, order);
            report.check_series(&format!("{label}-power n={n}"), &closed, &brute, -order, 0);
        }
    }
    report
}

/// The two binomial expansions of `S(X_0^+(z)^n)`:
///
/// ```text
/// S(X_0^+(z)^n) = z^n sum_k (-1)^k     [n k] q^{-(n-k)(n-1)} x_0^k     X_0^+(z)^{n-k}
///               = z^n sum_k (-1)^{n-k} [n k] q^{-k(n-1)}     x_0^{n-k} X_0^+(z)^{k}
/// ```
pub fn verify_lemma7(n_max: i64, order: i64) -> VerificationReport {
    let mut report = VerificationReport::new("lemma7", &[("max_index", n_max), ("order", order)]);
    let dd = order + n_max;
    let x0p = gen_series(GenSeries::X0Plus, dd);
    for n in 0..=n_max {
        let lhs = x0p
            .pow(n as u32)
            .unwrap()
            .map_coeffs(|c| shift_s(c, 1).expect("x-side element"));
        let mut rhs1 = Ser::zero();
        let mut rhs2 = Ser::zero();
        for k in 0..=n {
            let binom = ScalarQ::from_laurent(q_binom(n, k));
            let x0k = Ser::constant(Element::x(0).pow(k as u32));
            let x0nk = Ser::constant(Element::x(0).pow((n - k) as u32));

            let mut c1 = &binom * &ScalarQ::q_pow(-(n - k) * (n - 1));
            if k % 2 == 1 {
                c1 = -&c1;
            }
            let t1 = crate::series::mul_with(&x0k, &x0p.pow((n - k) as u32).unwrap(), |a, b| a * b)
                .unwrap()
                .scale(&c1);
            rhs1 = rhs1.add(&t1).unwrap();

            let mut c2 = &binom * &ScalarQ::q_pow(-k * (n - 1));
            if (n - k) % 2 == 1 {
                c2 = -&c2;
            }
            let t2 = crate::series::mul_with(&x0nk, &x0p.pow(k as u32).unwrap(), |a, b| a * b)
                .unwrap()
                .scale(&c2);
            rhs2 = rhs2.add(&t2).unwrap();
        }
        let shift = Ser::z_power(n, Element::one());
        let rhs1 = crate::series::mul_with(&shift, &rhs1, |a, b| a * b).unwrap();
        let rhs2 = crate::series::mul_with(&shift, &rhs2, |a, b| a * b).unwrap();
        report.check_series(&format!("first form, n={n}"), &lhs, &rhs1, -order, n);
        report.check_series(&format!("reversed form, n={n}"), &rhs1, &rhs2, -order, n);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theorem6_small() {
        let r = verify_theorem6(3, 3);
        assert!(r.pass(), "{r}");
    }

    #[test]
    fn lemma7_small() {
        let r = verify_lemma7(2, 3);
        assert!(r.pass(), "{r}");
    }

    #[test]
    fn lemma7_base_case_shift() {
        // S(X_0^+(z)) = z (X_0^+(z) - x_0)
        let d = 4;
        let lhs = gen_series(GenSeries::X0Plus, d).map_coeffs(|c| shift_s(c, 1).unwrap());
        let diff = gen_series(GenSeries::X0Plus, d)
            .sub(&Ser::constant(Element::x(0)))
            .unwrap();
        let rhs =
            crate::series::mul_with(&Ser::z_power(1, Element::one()), &diff, |a, b| a * b).unwrap();
        assert!(lhs.diff_on(&rhs, -(d - 1), 1).unwrap().is_empty());
    }
}

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::Signed;

use super::LaurentPoly;

/// An exact rational function in `q` with integer coefficients, stored as a
/// reduced fraction of Laurent polynomials.
///
/// Canonical form: gcd(num, den) is a unit, the denominator is an ordinary
/// polynomial with nonzero constant term and positive leading coefficient.
/// Equality is therefore structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ScalarQ {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl ScalarQ {
    /// Build `num / den` in canonical form.
    ///
    /// Panics if `den` is zero.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "ScalarQ: zero denominator");
        let mut s = ScalarQ { num, den };
        s.reduce();
        s
    }

    pub fn zero() -> Self {
        ScalarQ {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        ScalarQ {
            num: LaurentPoly::one(),
            den: LaurentPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        ScalarQ {
            num: LaurentPoly::from_int(n),
            den: LaurentPoly::one(),
        }
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        ScalarQ {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    /// The unit `q^k`.
    pub fn q_pow(k: i64) -> Self {
        ScalarQ {
            num: LaurentPoly::q_pow(k),
            den: LaurentPoly::one(),
        }
    }

    /// `q - q^{-1}`, the ubiquitous deformation factor.
    pub fn q_minus_qinv() -> Self {
        Self::from_laurent(&LaurentPoly::q() - &LaurentPoly::q_pow(-1))
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the reduced denominator is 1, i.e. the value lies in
    /// `Z[q, q^{-1}]`.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = LaurentPoly::one();
            return;
        }
        if !self.den.is_one() {
            let g = self.num.gcd(&self.den);
            if !g.is_one() {
                self.num = self.num.divexact(&g).expect("gcd divides numerator");
                self.den = self.den.divexact(&g).expect("gcd divides denominator");
            }
            // Pull the unit q^k out of the denominator.
            let shift = self.den.min_exp().unwrap();
            if shift != 0 {
                self.den = self.den.mul_monomial(&num_bigint::BigInt::from(1), -shift);
                self.num = self.num.mul_monomial(&num_bigint::BigInt::from(1), -shift);
            }
            if self.den.leading_coeff().is_negative() {
                self.num = -&self.num;
                self.den = -&self.den;
            }
        }
    }

    /// Multiplicative inverse.
    ///
    /// Panics on zero.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "ScalarQ::inv: division by zero");
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Integer power, with negative exponents via the inverse.
    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inv() } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    /// The bar involution `q -> q^{-1}`.
    pub fn bar(&self) -> Self {
        Self::new(self.num.bar(), self.den.bar())
    }

    /// Multiply by the unit `q^k`; canonical form is preserved without any
    /// reduction work.
    pub fn mul_q_pow(&self, k: i64) -> Self {
        if k == 0 {
            return self.clone();
        }
        ScalarQ {
            num: self.num.mul_monomial(&num_bigint::BigInt::from(1), k),
            den: self.den.clone(),
        }
    }
}

impl Add for &ScalarQ {
    type Output = ScalarQ;
    fn add(self, rhs: &ScalarQ) -> ScalarQ {
        if self.den == rhs.den {
            return ScalarQ::new(&self.num + &rhs.num, self.den.clone());
        }
        ScalarQ::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &ScalarQ {
    type Output = ScalarQ;
    fn sub(self, rhs: &ScalarQ) -> ScalarQ {
        if self.den == rhs.den {
            return ScalarQ::new(&self.num - &rhs.num, self.den.clone());
        }
        ScalarQ::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &ScalarQ {
    type Output = ScalarQ;
    fn mul(self, rhs: &ScalarQ) -> ScalarQ {
        if self.den.is_one() && rhs.den.is_one() {
            return ScalarQ {
                num: &self.num * &rhs.num,
                den: LaurentPoly::one(),
            };
        }
        ScalarQ::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &ScalarQ {
    type Output = ScalarQ;
    fn div(self, rhs: &ScalarQ) -> ScalarQ {
        assert!(!rhs.is_zero(), "ScalarQ: division by zero");
        ScalarQ::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &ScalarQ {
    type Output = ScalarQ;
    fn neg(self) -> ScalarQ {
        ScalarQ {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for ScalarQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

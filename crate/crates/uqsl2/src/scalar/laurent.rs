use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A Laurent polynomial in `q` with integer coefficients.
///
/// Stored as a map from exponent to nonzero coefficient, so two equal
/// polynomials always have identical term maps.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    /// The monomial `coeff * q^exp` (zero if `coeff` is zero).
    pub fn monomial(coeff: BigInt, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        LaurentPoly { terms }
    }

    pub fn from_int(n: i64) -> Self {
        Self::monomial(BigInt::from(n), 0)
    }

    /// The generator `q`.
    pub fn q() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i64) -> Self {
        Self::monomial(BigInt::one(), k)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// True when the polynomial is `c * q^k` for some integer `c` and exponent `k`.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() <= 1
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Coefficient of the highest power of `q`; zero for the zero polynomial.
    pub fn leading_coeff(&self) -> BigInt {
        self.terms.values().next_back().cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> std::collections::btree_map::Iter<'_, i64, BigInt> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn insert_add(&mut self, exp: i64, coeff: &BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// Multiply by the monomial `coeff * q^exp` in place.
    pub fn mul_monomial(&self, coeff: &BigInt, exp: i64) -> Self {
        if coeff.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e + exp, c * coeff))
                .collect(),
        }
    }

    /// Substitute `q -> q^{-1}` (the bar involution on coefficients).
    pub fn bar(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division; `None` when `self` is not a multiple of `d`.
    ///
    /// Panics if `d` is zero.
    pub fn divexact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        assert!(!d.is_zero(), "LaurentPoly::divexact: division by zero");
        if self.is_zero() {
            return Some(Self::zero());
        }
        // Shift both to ordinary polynomials with nonzero constant term; the
        // quotient, when it exists, picks up the exponent difference.
        let shift = self.min_exp().unwrap() - d.min_exp().unwrap();
        let mut rem: BTreeMap<i64, BigInt> = self
            .terms
            .iter()
            .map(|(e, c)| (e - self.min_exp().unwrap(), c.clone()))
            .collect();
        let div: BTreeMap<i64, BigInt> = d
            .terms
            .iter()
            .map(|(e, c)| (e - d.min_exp().unwrap(), c.clone()))
            .collect();
        let d_deg = *div.keys().next_back().unwrap();
        let d_lead = div.get(&d_deg).unwrap().clone();
        let mut quot: BTreeMap<i64, BigInt> = BTreeMap::new();
        while let Some((&r_deg, r_lead)) = rem.iter().next_back() {
            if r_deg < d_deg {
                return None;
            }
            let (qc, qr) = r_lead.div_rem(&d_lead);
            if !qr.is_zero() {
                return None;
            }
            let qe = r_deg - d_deg;
            for (e, c) in &div {
                let sub = c * &qc;
                let entry = rem.entry(e + qe).or_insert_with(BigInt::zero);
                *entry -= sub;
                if entry.is_zero() {
                    rem.remove(&(e + qe));
                }
            }
            quot.insert(qe, qc);
        }
        Some(LaurentPoly {
            terms: quot.into_iter().map(|(e, c)| (e + shift, c)).collect(),
        })
    }

    /// Positive gcd of all coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
        }
        g
    }

    /// Greatest common divisor in `Z[q, q^{-1}]`, normalized to an ordinary
    /// polynomial with nonzero constant term and positive leading coefficient.
    pub fn gcd(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return normalize_gcd(other);
        }
        if other.is_zero() {
            return normalize_gcd(self);
        }
        let ca = self.content();
        let cb = other.content();
        let cg = ca.gcd(&cb);
        let a = to_dense(self);
        let b = to_dense(other);
        let g = dense_gcd(primitive(a), primitive(b));
        from_dense(&g).mul_monomial(&cg, 0)
    }
}

fn normalize_gcd(p: &LaurentPoly) -> LaurentPoly {
    if p.is_zero() {
        return LaurentPoly::zero();
    }
    let shifted = p.mul_monomial(&BigInt::one(), -p.min_exp().unwrap());
    if shifted.leading_coeff().is_negative() {
        -&shifted
    } else {
        shifted
    }
}

// Dense ascending coefficient vector of the unit-normalized polynomial
// (minimum exponent shifted to zero).
fn to_dense(p: &LaurentPoly) -> Vec<BigInt> {
    let lo = p.min_exp().unwrap();
    let hi = p.max_exp().unwrap();
    let mut v = vec![BigInt::zero(); (hi - lo + 1) as usize];
    for (e, c) in p.iter() {
        v[(e - lo) as usize] = c.clone();
    }
    v
}

fn from_dense(v: &[BigInt]) -> LaurentPoly {
    let mut terms = BTreeMap::new();
    for (i, c) in v.iter().enumerate() {
        if !c.is_zero() {
            terms.insert(i as i64, c.clone());
        }
    }
    LaurentPoly { terms }
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    trim(&mut v);
    let mut g = BigInt::zero();
    for c in &v {
        g = g.gcd(c);
    }
    if g.is_zero() || g.is_one() {
        return v;
    }
    for c in &mut v {
        *c = &*c / &g;
    }
    v
}

// Primitive pseudo-remainder sequence on dense vectors.
fn dense_gcd(mut a: Vec<BigInt>, mut b: Vec<BigInt>) -> Vec<BigInt> {
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = pseudo_rem(&a, &b);
        a = b;
        b = primitive(r);
    }
    if a.last().is_some_and(|c| c.is_negative()) {
        for c in &mut a {
            *c = -&*c;
        }
    }
    a
}

// lc(b)^(deg a - deg b + 1) * a  mod  b, for deg a >= deg b >= 0.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = b.last().unwrap().clone();
    while r.len() > db {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        for c in &mut r {
            *c = &*c * &lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= bc * &lr;
        }
        trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    r
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.iter() {
            out.insert_add(*e, c);
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.iter() {
            out.insert_add(*e, &(-c));
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in self.iter() {
            for (eb, cb) in rhs.iter() {
                out.insert_add(ea + eb, &(ca * cb));
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        // Highest power first.
        for (e, c) in self.terms.iter().rev() {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (*e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{mag}*q^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> LaurentPoly {
        LaurentPoly::q()
    }
    fn qi() -> LaurentPoly {
        LaurentPoly::q_pow(-1)
    }

    #[test]
    fn add_cancels_inverse_powers() {
        // (q + q^-1) + (q - q^-1) = 2q
        let a = &q() + &qi();
        let b = &q() - &qi();
        assert_eq!(&a + &b, LaurentPoly::monomial(BigInt::from(2), 1));
    }

    #[test]
    fn mul_by_zero_absorbs() {
        let a = &q() + &LaurentPoly::from_int(7);
        assert_eq!(&a * &LaurentPoly::zero(), LaurentPoly::zero());
    }

    #[test]
    fn schoolbook_product() {
        // (q - q^-1)(q + q^-1) = q^2 - q^-2
        let a = &q() - &qi();
        let b = &q() + &qi();
        let expect = &LaurentPoly::q_pow(2) - &LaurentPoly::q_pow(-2);
        assert_eq!(&a * &b, expect);
    }

    #[test]
    fn divexact_roundtrip() {
        let a = &(&q() + &qi()) * &(&LaurentPoly::q_pow(2) - &LaurentPoly::from_int(3));
        let d = &q() + &qi();
        assert_eq!(a.divexact(&d).unwrap(), {
            &LaurentPoly::q_pow(2) - &LaurentPoly::from_int(3)
        });
        // Inexact division is detected.
        let b = &a + &LaurentPoly::one();
        assert!(b.divexact(&d).is_none());
    }

    #[test]
    fn gcd_extracts_common_factor() {
        let f = &q() - &qi();
        let g = &q() + &qi();
        let a = &f * &g;
        let b = &f * &(&q() + &LaurentPoly::from_int(2));
        let d = a.gcd(&b);
        // gcd is f up to a unit, normalized to constant term at q^0 and
        // positive leading coefficient: q^2 - 1.
        let expect = &LaurentPoly::q_pow(2) - &LaurentPoly::one();
        assert_eq!(d, expect);
    }

    #[test]
    fn gcd_includes_integer_content() {
        let a = LaurentPoly::from_int(6);
        let b = &LaurentPoly::from_int(4) * &q();
        assert_eq!(a.gcd(&b), LaurentPoly::from_int(2));
    }

    #[test]
    fn bar_negates_exponents() {
        let a = &LaurentPoly::q_pow(2) - &LaurentPoly::q_pow(-1);
        let expect = &LaurentPoly::q_pow(-2) - &LaurentPoly::q_pow(1);
        assert_eq!(a.bar(), expect);
        assert_eq!(a.bar().bar(), a);
    }

    #[test]
    fn display_is_descending() {
        let a = &(&LaurentPoly::q_pow(2) + &LaurentPoly::from_int(1)) - &LaurentPoly::q_pow(-2);
        assert_eq!(a.to_string(), "q^2 + 1 - q^-2");
    }

    mod ring_axioms {
        use super::*;
        use proptest::prelude::*;

        fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
            proptest::collection::vec((-6i64..=6, -9i64..=9), 0..5).prop_map(|terms| {
                terms.into_iter().fold(LaurentPoly::zero(), |acc, (e, c)| {
                    &acc + &LaurentPoly::monomial(BigInt::from(c), e)
                })
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(200))]

            #[test]
            fn mul_associative(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
                prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            }

            #[test]
            fn mul_distributes_over_add(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
                prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            }

            #[test]
            fn add_commutes_and_cancels(a in arb_poly(), b in arb_poly()) {
                prop_assert_eq!(&a + &b, &b + &a);
                prop_assert_eq!(&(&a + &b) - &b, a);
            }
        }
    }
}

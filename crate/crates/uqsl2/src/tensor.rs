//! The two- and three-fold tensor algebras, hosting coproduct values.
//!
//! Multiplication is componentwise with no sign rule; each factor is kept in
//! PBW normal form.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::pbw::{mono_mul, Element, PbwMonomial};
use crate::scalar::ScalarQ;

/// A finite linear combination of monomial pairs: an element of the twofold
/// tensor product.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TensorElement {
    terms: BTreeMap<(PbwMonomial, PbwMonomial), ScalarQ>,
}

impl TensorElement {
    pub fn zero() -> Self {
        TensorElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::term(ScalarQ::one(), PbwMonomial::one(), PbwMonomial::one())
    }

    pub fn term(coeff: ScalarQ, left: PbwMonomial, right: PbwMonomial) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((left, right), coeff);
        }
        TensorElement { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(PbwMonomial, PbwMonomial), &ScalarQ)> {
        self.terms.iter()
    }

    pub(crate) fn insert_add(&mut self, key: (PbwMonomial, PbwMonomial), c: &ScalarQ) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                let sum = &*o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, s: &ScalarQ) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        TensorElement {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c * s)).collect(),
        }
    }

    /// Multiply by the central factor `s * (c^{l2/2} (x) c^{r2/2})`.
    pub fn scale_central(&self, s: &ScalarQ, l2: i64, r2: i64) -> Self {
        let central = Self::term(
            s.clone(),
            PbwMonomial::c_half_pow(l2),
            PbwMonomial::c_half_pow(r2),
        );
        self * &central
    }

    /// `a b - b a` in the tensor algebra.
    pub fn commutator(&self, rhs: &TensorElement) -> TensorElement {
        &(self * rhs) - &(rhs * self)
    }

    pub fn pow(&self, n: u32) -> TensorElement {
        let mut acc = TensorElement::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// The common componentwise bigrading `((deg_l, wt_l), (deg_r, wt_r))`,
    /// or `None` when the terms disagree. Zero reports the trivial grading.
    pub fn bigrading(&self) -> Option<((i64, i64), (i64, i64))> {
        let mut it = self.terms.keys();
        let first = match it.next() {
            None => return Some(((0, 0), (0, 0))),
            Some((l, r)) => ((l.degree(), l.weight()), (r.degree(), r.weight())),
        };
        for (l, r) in it {
            if ((l.degree(), l.weight()), (r.degree(), r.weight())) != first {
                return None;
            }
        }
        Some(first)
    }

    /// First key at which two tensor elements differ, in canonical order.
    pub fn first_difference(&self, other: &TensorElement) -> Option<(PbwMonomial, PbwMonomial)> {
        let keys = self.terms.keys().chain(other.terms.keys());
        let mut all: Vec<_> = keys.collect();
        all.sort();
        all.dedup();
        for k in all {
            if self.terms.get(k) != other.terms.get(k) {
                return Some(k.clone());
            }
        }
        None
    }
}

/// The bilinear pairing `(a, b) -> a (x) b`.
pub fn tensor_of(a: &Element, b: &Element) -> TensorElement {
    let mut out = TensorElement::zero();
    for (ma, ca) in a.terms() {
        for (mb, cb) in b.terms() {
            out.insert_add((ma.clone(), mb.clone()), &(ca * cb));
        }
    }
    out
}

impl Add for &TensorElement {
    type Output = TensorElement;
    fn add(self, rhs: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.insert_add(k.clone(), c);
        }
        out
    }
}

impl Sub for &TensorElement {
    type Output = TensorElement;
    fn sub(self, rhs: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.insert_add(k.clone(), &-c);
        }
        out
    }
}

impl Neg for &TensorElement {
    type Output = TensorElement;
    fn neg(self) -> TensorElement {
        TensorElement {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }
}

impl Mul for &TensorElement {
    type Output = TensorElement;
    fn mul(self, rhs: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero();
        for ((la, ra), ca) in &self.terms {
            for ((lb, rb), cb) in &rhs.terms {
                let left = mono_mul(la, lb);
                let right = mono_mul(ra, rb);
                let scale = ca * cb;
                for (ml, cl) in left.terms() {
                    for (mr, cr) in right.terms() {
                        out.insert_add((ml.clone(), mr.clone()), &(&(cl * cr) * &scale));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((l, r), c) in &self.terms {
            let (neg, c) = crate::pbw::display_sign_split(c);
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff = crate::pbw::render_coeff(&c);
            if coeff != "1" {
                write!(f, "{coeff}*")?;
            }
            write!(f, "{l} (x) {r}")?;
        }
        Ok(())
    }
}

/// An element of the threefold tensor product; only what the coassociativity
/// check needs.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Tensor3Element {
    terms: BTreeMap<(PbwMonomial, PbwMonomial, PbwMonomial), ScalarQ>,
}

impl Tensor3Element {
    pub fn zero() -> Self {
        Tensor3Element {
            terms: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn insert_add(&mut self, key: (PbwMonomial, PbwMonomial, PbwMonomial), c: &ScalarQ) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                let sum = &*o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Embed `t (x) m` where `t` lands in the first two slots.
    pub fn from_tensor_left(t: &TensorElement, m: &PbwMonomial, coeff: &ScalarQ) -> Self {
        let mut out = Self::zero();
        for ((l, r), c) in t.terms() {
            out.insert_add((l.clone(), r.clone(), m.clone()), &(c * coeff));
        }
        out
    }

    /// Embed `m (x) t` where `t` lands in the last two slots.
    pub fn from_tensor_right(m: &PbwMonomial, t: &TensorElement, coeff: &ScalarQ) -> Self {
        let mut out = Self::zero();
        for ((l, r), c) in t.terms() {
            out.insert_add((m.clone(), l.clone(), r.clone()), &(c * coeff));
        }
        out
    }

    pub fn first_difference(
        &self,
        other: &Tensor3Element,
    ) -> Option<(PbwMonomial, PbwMonomial, PbwMonomial)> {
        let keys = self.terms.keys().chain(other.terms.keys());
        let mut all: Vec<_> = keys.collect();
        all.sort();
        all.dedup();
        for k in all {
            if self.terms.get(k) != other.terms.get(k) {
                return Some(k.clone());
            }
        }
        None
    }
}

impl Add for &Tensor3Element {
    type Output = Tensor3Element;
    fn add(self, rhs: &Tensor3Element) -> Tensor3Element {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.insert_add(k.clone(), c);
        }
        out
    }
}

impl Sub for &Tensor3Element {
    type Output = Tensor3Element;
    fn sub(self, rhs: &Tensor3Element) -> Tensor3Element {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.insert_add(k.clone(), &-c);
        }
        out
    }
}

impl fmt::Display for Tensor3Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((a, b, c), s) in &self.terms {
            let (neg, s) = crate::pbw::display_sign_split(s);
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff = crate::pbw::render_coeff(&s);
            if coeff != "1" {
                write!(f, "{coeff}*")?;
            }
            write!(f, "{a} (x) {b} (x) {c}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairing_is_bilinear() {
        let t = tensor_of(&Element::x(0), &Element::k_pow(1));
        assert_eq!(
            t,
            TensorElement::term(ScalarQ::one(), PbwMonomial::x(0), PbwMonomial::k_pow(1))
        );
        assert_eq!(
            tensor_of(&Element::zero(), &Element::x(5)),
            TensorElement::zero()
        );
        let sum = tensor_of(&(&Element::x(0) + &Element::x(1)), &Element::k_pow(1));
        let expect = &tensor_of(&Element::x(0), &Element::k_pow(1))
            + &tensor_of(&Element::x(1), &Element::k_pow(1));
        assert_eq!(sum, expect);
    }

    #[test]
    fn unit_acts_trivially() {
        let t = tensor_of(&Element::x(0), &(&Element::y(2) + &Element::h(1)));
        assert_eq!(&TensorElement::one() * &t, t);
    }

    #[test]
    fn componentwise_k_conjugation() {
        // (x_0 (x) K) (1 (x) x_0) = x_0 (x) K x_0 = q^2 * x_0 (x) (x_0 K)
        let a = tensor_of(&Element::x(0), &Element::k_pow(1));
        let b = tensor_of(&Element::one(), &Element::x(0));
        let prod = &a * &b;
        let expect = TensorElement::term(
            ScalarQ::q_pow(2),
            PbwMonomial::x(0),
            PbwMonomial::new(1, 0, vec![0], vec![], vec![]),
        );
        assert_eq!(prod, expect);
    }

    #[test]
    fn factorwise_commutator() {
        // [1 (x) h_1, 1 (x) x_0] = [2] * 1 (x) c^{-1/2} x_1
        let a = tensor_of(&Element::one(), &Element::h(1));
        let b = tensor_of(&Element::one(), &Element::x(0));
        let got = a.commutator(&b);
        let expect = TensorElement::term(
            ScalarQ::from_laurent(crate::scalar::q_int(2)),
            PbwMonomial::one(),
            PbwMonomial::new(0, -1, vec![1], vec![], vec![]),
        );
        assert_eq!(got, expect);
        assert_eq!(a.commutator(&a), TensorElement::zero());
    }

    #[test]
    fn componentwise_bigrading_preserved() {
        let a = tensor_of(&Element::x(2), &Element::y(1));
        let b = tensor_of(&Element::h(-1), &Element::x(0));
        let prod = &a * &b;
        assert_eq!(prod.bigrading(), Some(((1, 2), (1, 0))));
    }

    #[test]
    fn mul_associative_on_random_triples() {
        use crate::verify::{CaseGen, Families};
        let mut gen = CaseGen::new(23);
        for i in 0..200 {
            let mut draw = || {
                TensorElement::term(
                    gen.scalar(),
                    gen.monomial(-2, 2, 2, Families::all()),
                    gen.monomial(-2, 2, 2, Families::all()),
                )
            };
            let (a, b, c) = (draw(), draw(), draw());
            assert_eq!(&(&a * &b) * &c, &a * &(&b * &c), "case {i}");
        }
    }
}

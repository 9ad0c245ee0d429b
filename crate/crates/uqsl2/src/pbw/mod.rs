//! The algebra: PBW monomials, finite linear combinations, and exact
//! multiplication by normal ordering under the defining relations.
//!
//! A [`PbwMonomial`] denotes the product
//!
//! ```text
//! x_{i_1} ... x_{i_m} . h_{j_1} ... h_{j_l} . y_{p_1} ... y_{p_r} . K^k . c^{c2/2}
//! ```
//!
//! with the x-indices weakly increasing, the h-indices weakly increasing and
//! nonzero, and the y-indices weakly decreasing. `K`-powers and `c`-powers are
//! collected at the right; moving `K` across a letter costs `q^{+-2}` per
//! crossed `x` or `y`, and `c^{1/2}` is central.
//!
//! The group-like series coefficients `psi_m` and `phi_{-m}` are never
//! generators here: [`psi_element`] and [`phi_element`] expand them eagerly
//! into `K^{+-1}` and `h`-monomials, which keeps the basis minimal and makes
//! equality of elements decidable.

mod engine;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::ScalarQ;

pub(crate) use engine::{normal_order_word, Letter};

/// An ordered basis monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PbwMonomial {
    /// Power of `K`.
    k_exp: i64,
    /// Power of `c^{1/2}`, so `c^m` has `c_half = 2m`.
    c_half: i64,
    /// Weakly increasing `x`-indices.
    x_block: Vec<i64>,
    /// Weakly increasing, nonzero `h`-indices.
    h_block: Vec<i64>,
    /// Weakly decreasing `y`-indices.
    y_block: Vec<i64>,
}

impl PbwMonomial {
    pub fn new(
        k_exp: i64,
        c_half: i64,
        x_block: Vec<i64>,
        h_block: Vec<i64>,
        y_block: Vec<i64>,
    ) -> Self {
        assert!(
            x_block.windows(2).all(|w| w[0] <= w[1]),
            "x-block must be weakly increasing"
        );
        assert!(
            h_block.windows(2).all(|w| w[0] <= w[1]),
            "h-block must be weakly increasing"
        );
        assert!(h_block.iter().all(|&k| k != 0), "h-index must be nonzero");
        assert!(
            y_block.windows(2).all(|w| w[0] >= w[1]),
            "y-block must be weakly decreasing"
        );
        PbwMonomial {
            k_exp,
            c_half,
            x_block,
            h_block,
            y_block,
        }
    }

    pub fn one() -> Self {
        Self::new(0, 0, vec![], vec![], vec![])
    }

    pub fn x(n: i64) -> Self {
        Self::new(0, 0, vec![n], vec![], vec![])
    }

    pub fn y(n: i64) -> Self {
        Self::new(0, 0, vec![], vec![], vec![n])
    }

    pub fn h(k: i64) -> Self {
        Self::new(0, 0, vec![], vec![k], vec![])
    }

    pub fn k_pow(a: i64) -> Self {
        Self::new(a, 0, vec![], vec![], vec![])
    }

    /// `c^{b/2}`.
    pub fn c_half_pow(b: i64) -> Self {
        Self::new(0, b, vec![], vec![], vec![])
    }

    pub fn k_exp(&self) -> i64 {
        self.k_exp
    }

    pub fn c_half(&self) -> i64 {
        self.c_half
    }

    pub fn x_block(&self) -> &[i64] {
        &self.x_block
    }

    pub fn h_block(&self) -> &[i64] {
        &self.h_block
    }

    pub fn y_block(&self) -> &[i64] {
        &self.y_block
    }

    pub fn is_one(&self) -> bool {
        self.k_exp == 0 && self.c_half == 0 && self.letters_len() == 0
    }

    /// True when the monomial is a product of `K`- and `c`-powers only.
    pub fn is_k_central(&self) -> bool {
        self.letters_len() == 0
    }

    /// True when the monomial commutes with everything (`c`-powers only).
    pub fn is_central(&self) -> bool {
        self.letters_len() == 0 && self.k_exp == 0
    }

    fn letters_len(&self) -> usize {
        self.x_block.len() + self.h_block.len() + self.y_block.len()
    }

    /// Sum of all `x`-, `h`- and `y`-indices.
    pub fn degree(&self) -> i64 {
        self.x_block.iter().sum::<i64>()
            + self.h_block.iter().sum::<i64>()
            + self.y_block.iter().sum::<i64>()
    }

    /// `2 (#x) - 2 (#y)`.
    pub fn weight(&self) -> i64 {
        2 * (self.x_block.len() as i64) - 2 * (self.y_block.len() as i64)
    }

    pub(crate) fn letters(&self) -> Vec<Letter> {
        let mut w = Vec::with_capacity(self.letters_len());
        w.extend(self.x_block.iter().map(|&n| Letter::X(n)));
        w.extend(self.h_block.iter().map(|&k| Letter::H(k)));
        w.extend(self.y_block.iter().map(|&n| Letter::Y(n)));
        w
    }
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut parts: Vec<String> = Vec::new();
        parts.extend(self.x_block.iter().map(|n| format!("x[{n}]")));
        parts.extend(self.h_block.iter().map(|k| format!("h[{k}]")));
        parts.extend(self.y_block.iter().map(|n| format!("y[{n}]")));
        match self.k_exp {
            0 => {}
            1 => parts.push("K".into()),
            -1 => parts.push("Kinv".into()),
            a if a > 0 => parts.push(format!("K^{a}")),
            a => parts.push(format!("Kinv^{}", -a)),
        }
        if self.c_half != 0 {
            parts.push(format!("c2[{}]", self.c_half));
        }
        write!(f, "{}", parts.join("*"))
    }
}

/// A finite linear combination of PBW monomials in normal form.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Element {
    terms: BTreeMap<PbwMonomial, ScalarQ>,
}

impl Element {
    pub fn zero() -> Self {
        Element {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::from_monomial(PbwMonomial::one())
    }

    pub fn from_monomial(m: PbwMonomial) -> Self {
        Self::term(ScalarQ::one(), m)
    }

    pub fn term(coeff: ScalarQ, m: PbwMonomial) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(m, coeff);
        }
        Element { terms }
    }

    pub fn from_scalar(s: ScalarQ) -> Self {
        Self::term(s, PbwMonomial::one())
    }

    pub fn x(n: i64) -> Self {
        Self::from_monomial(PbwMonomial::x(n))
    }

    pub fn y(n: i64) -> Self {
        Self::from_monomial(PbwMonomial::y(n))
    }

    pub fn h(k: i64) -> Self {
        Self::from_monomial(PbwMonomial::h(k))
    }

    pub fn k_pow(a: i64) -> Self {
        Self::from_monomial(PbwMonomial::k_pow(a))
    }

    pub fn c_half_pow(b: i64) -> Self {
        Self::from_monomial(PbwMonomial::c_half_pow(b))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &ScalarQ)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &PbwMonomial) -> ScalarQ {
        self.terms.get(m).cloned().unwrap_or_else(ScalarQ::zero)
    }

    pub(crate) fn insert_add(&mut self, m: PbwMonomial, c: &ScalarQ) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
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
        Element {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect(),
        }
    }

    /// Multiply by the central factor `s * c^{c2/2}`; no reordering needed.
    pub fn mul_central(&self, s: &ScalarQ, c2: i64) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Element {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut m = m.clone();
                    m.c_half += c2;
                    (m, c * s)
                })
                .collect(),
        }
    }

    /// `a b - b a`.
    pub fn commutator(&self, rhs: &Element) -> Element {
        &(self * rhs) - &(rhs * self)
    }

    pub fn pow(&self, n: u32) -> Element {
        let mut acc = Element::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// The common `(degree, weight)` of all monomials, or `None` when the
    /// element is not homogeneous. The zero element reports `(0, 0)`.
    pub fn bigrading(&self) -> Option<(i64, i64)> {
        let mut it = self.terms.keys();
        let first = match it.next() {
            None => return Some((0, 0)),
            Some(m) => (m.degree(), m.weight()),
        };
        for m in it {
            if (m.degree(), m.weight()) != first {
                return None;
            }
        }
        Some(first)
    }

    /// Re-run every monomial through the normal-ordering engine. The result
    /// always equals `self`; used to test idempotence of the normal form.
    pub fn renormalized(&self) -> Element {
        let mut out = Element::zero();
        for (m, c) in &self.terms {
            let part = normal_order_word(c.clone(), m.k_exp, m.c_half, m.letters());
            out = &out + &part;
        }
        out
    }

    /// First monomial at which two elements differ, in canonical order.
    pub fn first_difference(&self, other: &Element) -> Option<PbwMonomial> {
        let mut keys: Vec<_> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        for k in keys {
            if self.terms.get(k) != other.terms.get(k) {
                return Some(k.clone());
            }
        }
        None
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_add(m.clone(), c);
        }
        out
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_add(m.clone(), &-c);
        }
        out
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        let mut out = Element::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let prod = mono_mul(ma, mb);
                let scale = ca * cb;
                for (m, c) in &prod.terms {
                    out.insert_add(m.clone(), &(c * &scale));
                }
            }
        }
        out
    }
}

/// Product of two basis monomials, straightened into normal form.
pub fn mono_mul(a: &PbwMonomial, b: &PbwMonomial) -> Element {
    engine::mono_mul_cached(a, b)
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let (neg, c) = display_sign_split(c);
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
            write_term(f, &c, m)?;
        }
        Ok(())
    }
}

/// Pull a leading minus sign out of a coefficient for display.
pub(crate) fn display_sign_split(c: &ScalarQ) -> (bool, ScalarQ) {
    use num_traits::Signed;
    if c.num().leading_coeff().is_negative() {
        (true, -c)
    } else {
        (false, c.clone())
    }
}

pub(crate) fn write_term(f: &mut fmt::Formatter<'_>, c: &ScalarQ, m: &PbwMonomial) -> fmt::Result {
    let coeff = render_coeff(c);
    match (coeff.as_str(), m.is_one()) {
        ("1", true) => write!(f, "1"),
        ("1", false) => write!(f, "{m}"),
        (_, true) => write!(f, "{coeff}"),
        (_, false) => write!(f, "{coeff}*{m}"),
    }
}

/// Render a coefficient so it can stand as a factor in an expression:
/// multi-term numerators are parenthesized and fractions render as
/// `(num)/(den)`.
pub(crate) fn render_coeff(c: &ScalarQ) -> String {
    if c.is_laurent() {
        let n = c.num();
        if n.num_terms() > 1 {
            format!("({n})")
        } else {
            format!("{n}")
        }
    } else {
        format!("({})/({})", c.num(), c.den())
    }
}

/// Coefficient of `z^{-m}` in `K exp((q - q^{-1}) sum_{k>=1} h_k z^{-k})`.
///
/// The coefficient of an `h`-partition `lambda = (1^{a_1} 2^{a_2} ...)` of `m`
/// is `(q - q^{-1})^{len(lambda)} / prod_k a_k!`.
///
/// Panics for negative `m`.
pub fn psi_element(m: i64) -> Element {
    assert!(m >= 0, "psi_element: negative index {m}");
    exp_like_element(m, 1, false)
}

/// Coefficient of `z^{m}` in `K^{-1} exp(-(q - q^{-1}) sum_{k>=1} h_{-k} z^k)`,
/// for `m <= 0`.
///
/// Panics for positive `m`.
pub fn phi_element(m: i64) -> Element {
    assert!(m <= 0, "phi_element: positive index {m}");
    exp_like_element(-m, -1, true)
}

fn exp_like_element(m: i64, k_exp: i64, negative: bool) -> Element {
    let mut out = Element::zero();
    for parts in partitions(m) {
        let coeff = engine::psi_phi_weight(&parts, negative);
        let h_block: Vec<i64> = if negative {
            // Parts descend, so their negatives ascend.
            parts.iter().map(|&p| -p).collect()
        } else {
            let mut asc = parts.clone();
            asc.reverse();
            asc
        };
        out.insert_add(PbwMonomial::new(k_exp, 0, vec![], h_block, vec![]), &coeff);
    }
    out
}

/// All partitions of `n` as weakly decreasing part lists; `[[]]` for `n = 0`.
pub(crate) fn partitions(n: i64) -> Vec<Vec<i64>> {
    fn rec(n: i64, max: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for p in (1..=max.min(n)).rev() {
            prefix.push(p);
            rec(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

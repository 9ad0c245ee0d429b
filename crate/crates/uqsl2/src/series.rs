//! Truncated formal series in `z` with element- or tensor-valued
//! coefficients.
//!
//! Every series carries two interval annotations:
//!
//! - a *support* bound: the set of exponents where the underlying formal
//!   series can be nonzero at all (e.g. `X^+(z)` is supported on `z^{-1},
//!   z^{-2}, ...`);
//! - an *exactness window*: the interval of exponents where the stored
//!   coefficients provably equal the true ones.
//!
//! Arithmetic propagates both, so a product of truncations is never read
//! beyond where it is exact: [`TruncatedSeries::coefficient`] rejects
//! out-of-window access instead of silently returning truncated garbage.

use std::collections::BTreeMap;
use std::fmt;

use crate::pbw::{phi_element, psi_element, Element};
use crate::scalar::ScalarQ;
use crate::tensor::TensorElement;

const NEG_INF: i128 = i128::MIN / 4;
const POS_INF: i128 = i128::MAX / 4;

/// Coefficient rings a series can take values in.
pub trait SeriesCoeff: Clone + PartialEq {
    fn coeff_zero() -> Self;
    fn coeff_is_zero(&self) -> bool;
    fn coeff_add(&self, rhs: &Self) -> Self;
    fn coeff_neg(&self) -> Self;
}

impl SeriesCoeff for Element {
    fn coeff_zero() -> Self {
        Element::zero()
    }
    fn coeff_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn coeff_add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn coeff_neg(&self) -> Self {
        -self
    }
}

impl SeriesCoeff for TensorElement {
    fn coeff_zero() -> Self {
        TensorElement::zero()
    }
    fn coeff_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn coeff_add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn coeff_neg(&self) -> Self {
        -self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeriesError {
    /// A coefficient was requested outside the provably exact window.
    OutOfWindow { exp: i64 },
    /// An operation produced a series with no exact coefficients at all.
    EmptyWindow,
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::OutOfWindow { exp } => {
                write!(f, "coefficient of z^{exp} lies outside the exact window")
            }
            SeriesError::EmptyWindow => write!(f, "operation left no provably exact window"),
        }
    }
}

impl std::error::Error for SeriesError {}

/// A central scaling factor `coeff * c^{c_half/2}` used as a series argument,
/// as in `X_0^+(q^2 c z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralScale {
    coeff: ScalarQ,
    c_half: i64,
}

impl CentralScale {
    pub fn new(coeff: ScalarQ, c_half: i64) -> Self {
        assert!(!coeff.is_zero(), "central scale must be invertible");
        CentralScale { coeff, c_half }
    }

    pub fn one() -> Self {
        Self::new(ScalarQ::one(), 0)
    }

    pub fn q_pow(k: i64) -> Self {
        Self::new(ScalarQ::q_pow(k), 0)
    }

    /// `q^k * c^{b/2}`.
    pub fn q_c(k: i64, c_half: i64) -> Self {
        Self::new(ScalarQ::q_pow(k), c_half)
    }

    pub fn compose(&self, other: &CentralScale) -> CentralScale {
        CentralScale {
            coeff: &self.coeff * &other.coeff,
            c_half: self.c_half + other.c_half,
        }
    }

    fn pow(&self, k: i64) -> (ScalarQ, i64) {
        (self.coeff.pow(k), self.c_half * k)
    }
}

/// A formal series truncation with exactness bookkeeping.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<C: SeriesCoeff> {
    coeffs: BTreeMap<i64, C>,
    win_lo: i128,
    win_hi: i128,
    sup_lo: i128,
    sup_hi: i128,
}

pub type ElementSeries = TruncatedSeries<Element>;
pub type TensorSeries = TruncatedSeries<TensorElement>;

impl<C: SeriesCoeff> TruncatedSeries<C> {
    /// A single coefficient at `z^exp`, exact everywhere.
    pub fn z_power(exp: i64, value: C) -> Self {
        let mut coeffs = BTreeMap::new();
        if !value.coeff_is_zero() {
            coeffs.insert(exp, value);
        }
        TruncatedSeries {
            coeffs,
            win_lo: NEG_INF,
            win_hi: POS_INF,
            sup_lo: exp as i128,
            sup_hi: exp as i128,
        }
    }

    /// A constant series, exact everywhere.
    pub fn constant(value: C) -> Self {
        Self::z_power(0, value)
    }

    pub fn zero() -> Self {
        Self::constant(C::coeff_zero())
    }

    /// Assemble a series from `(exponent, coefficient)` pairs with explicit
    /// window `[win_lo, win_hi]` and support bounds (`None` = unbounded).
    pub fn from_parts(
        coeffs: impl IntoIterator<Item = (i64, C)>,
        win_lo: Option<i64>,
        win_hi: Option<i64>,
        sup_lo: Option<i64>,
        sup_hi: Option<i64>,
    ) -> Self {
        let win_lo = win_lo.map_or(NEG_INF, |v| v as i128);
        let win_hi = win_hi.map_or(POS_INF, |v| v as i128);
        let sup_lo = sup_lo.map_or(NEG_INF, |v| v as i128);
        let sup_hi = sup_hi.map_or(POS_INF, |v| v as i128);
        let coeffs = coeffs
            .into_iter()
            .filter(|(e, c)| {
                let e = *e as i128;
                assert!(
                    e >= win_lo && e <= win_hi && e >= sup_lo && e <= sup_hi,
                    "stored exponent outside window or support"
                );
                !c.coeff_is_zero()
            })
            .collect();
        TruncatedSeries {
            coeffs,
            win_lo,
            win_hi,
            sup_lo,
            sup_hi,
        }
    }

    pub fn window(&self) -> (Option<i64>, Option<i64>) {
        (
            (self.win_lo != NEG_INF).then_some(self.win_lo as i64),
            (self.win_hi != POS_INF).then_some(self.win_hi as i64),
        )
    }

    pub fn window_contains(&self, exp: i64) -> bool {
        let e = exp as i128;
        e >= self.win_lo && e <= self.win_hi
    }

    pub fn window_covers(&self, lo: i64, hi: i64) -> bool {
        self.win_lo <= lo as i128 && hi as i128 <= self.win_hi
    }

    /// Exact coefficient of `z^exp`, or an error outside the window.
    pub fn coefficient(&self, exp: i64) -> Result<C, SeriesError> {
        if !self.window_contains(exp) {
            return Err(SeriesError::OutOfWindow { exp });
        }
        Ok(self.coeffs.get(&exp).cloned().unwrap_or_else(C::coeff_zero))
    }

    pub fn stored(&self) -> impl Iterator<Item = (&i64, &C)> {
        self.coeffs.iter()
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, SeriesError> {
        let win_lo = self.win_lo.max(rhs.win_lo);
        let win_hi = self.win_hi.min(rhs.win_hi);
        if win_lo > win_hi {
            return Err(SeriesError::EmptyWindow);
        }
        let mut coeffs: BTreeMap<i64, C> = BTreeMap::new();
        for (e, c) in self.coeffs.iter().chain(rhs.coeffs.iter()) {
            if (*e as i128) < win_lo || (*e as i128) > win_hi {
                continue;
            }
            let entry = coeffs.remove(e);
            let sum = match entry {
                None => c.clone(),
                Some(prev) => prev.coeff_add(c),
            };
            if !sum.coeff_is_zero() {
                coeffs.insert(*e, sum);
            }
        }
        Ok(TruncatedSeries {
            coeffs,
            win_lo,
            win_hi,
            sup_lo: self.sup_lo.min(rhs.sup_lo),
            sup_hi: self.sup_hi.max(rhs.sup_hi),
        })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, SeriesError> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (*e, c.coeff_neg()))
                .collect(),
            ..self.clone()
        }
    }

    /// Map every coefficient through a zero-preserving linear map; exactness
    /// annotations carry over unchanged.
    pub fn map_coeffs<D: SeriesCoeff>(&self, f: impl Fn(&C) -> D) -> TruncatedSeries<D> {
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .filter_map(|(e, c)| {
                    let v = f(c);
                    (!v.coeff_is_zero()).then_some((*e, v))
                })
                .collect(),
            win_lo: self.win_lo,
            win_hi: self.win_hi,
            sup_lo: self.sup_lo,
            sup_hi: self.sup_hi,
        }
    }

    /// Substitute `z -> z^{-1}`.
    pub fn invert_z(&self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|(e, c)| (-*e, c.clone())).collect(),
            win_lo: -self.win_hi,
            win_hi: -self.win_lo,
            sup_lo: -self.sup_hi,
            sup_hi: -self.sup_lo,
        }
    }

    /// Mismatching coefficients of two series over `[lo, hi]`, which must lie
    /// inside both exact windows.
    pub fn diff_on(&self, rhs: &Self, lo: i64, hi: i64) -> Result<Vec<(i64, C, C)>, SeriesError> {
        if !self.window_covers(lo, hi) || !rhs.window_covers(lo, hi) {
            return Err(SeriesError::OutOfWindow {
                exp: if !self.window_covers(lo, hi) { lo } else { hi },
            });
        }
        let mut out = Vec::new();
        for e in lo..=hi {
            let a = self.coefficient(e)?;
            let b = rhs.coefficient(e)?;
            if a != b {
                out.push((e, a, b));
            }
        }
        Ok(out)
    }
}

/// Generic truncated Cauchy product: the combiner multiplies coefficients.
///
/// The result window is the interval of exponents whose every contributing
/// split lands inside both input windows, given the input support bounds.
pub fn mul_with<A, B, C>(
    a: &TruncatedSeries<A>,
    b: &TruncatedSeries<B>,
    combine: impl Fn(&A, &B) -> C,
) -> Result<TruncatedSeries<C>, SeriesError>
where
    A: SeriesCoeff,
    B: SeriesCoeff,
    C: SeriesCoeff,
{
    let mut win_lo = NEG_INF;
    let mut win_hi = POS_INF;
    // Splits i + j = e draw i from [max(a.sup_lo, e - b.sup_hi),
    // min(a.sup_hi, e - b.sup_lo)] and must stay inside a's window, and
    // symmetrically for j in b.
    if a.sup_lo < a.win_lo {
        if b.sup_hi >= POS_INF {
            return Err(SeriesError::EmptyWindow);
        }
        win_lo = win_lo.max(a.win_lo + b.sup_hi);
    }
    if a.sup_hi > a.win_hi {
        if b.sup_lo <= NEG_INF {
            return Err(SeriesError::EmptyWindow);
        }
        win_hi = win_hi.min(a.win_hi + b.sup_lo);
    }
    if b.sup_lo < b.win_lo {
        if a.sup_hi >= POS_INF {
            return Err(SeriesError::EmptyWindow);
        }
        win_lo = win_lo.max(b.win_lo + a.sup_hi);
    }
    if b.sup_hi > b.win_hi {
        if a.sup_lo <= NEG_INF {
            return Err(SeriesError::EmptyWindow);
        }
        win_hi = win_hi.min(b.win_hi + a.sup_lo);
    }
    if win_lo > win_hi {
        return Err(SeriesError::EmptyWindow);
    }
    let mut coeffs: BTreeMap<i64, C> = BTreeMap::new();
    for (ea, ca) in &a.coeffs {
        for (eb, cb) in &b.coeffs {
            let e = ea + eb;
            if (e as i128) < win_lo || (e as i128) > win_hi {
                continue;
            }
            let v = combine(ca, cb);
            if v.coeff_is_zero() {
                continue;
            }
            let entry = coeffs.remove(&e);
            let sum = match entry {
                None => v,
                Some(prev) => prev.coeff_add(&v),
            };
            if !sum.coeff_is_zero() {
                coeffs.insert(e, sum);
            }
        }
    }
    Ok(TruncatedSeries {
        coeffs,
        win_lo,
        win_hi,
        sup_lo: sat_add(a.sup_lo, b.sup_lo),
        sup_hi: sat_add(a.sup_hi, b.sup_hi),
    })
}

fn sat_add(a: i128, b: i128) -> i128 {
    if a <= NEG_INF || b <= NEG_INF {
        NEG_INF
    } else if a >= POS_INF || b >= POS_INF {
        POS_INF
    } else {
        a + b
    }
}

impl TruncatedSeries<Element> {
    pub fn mul(&self, rhs: &Self) -> Result<Self, SeriesError> {
        mul_with(self, rhs, |a, b| a * b)
    }

    pub fn pow(&self, n: u32) -> Result<Self, SeriesError> {
        let mut acc = Self::constant(Element::one());
        for _ in 0..n {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Coefficientwise scalar multiple.
    pub fn scale(&self, s: &ScalarQ) -> Self {
        self.map_coeffs(|c| c.scale(s))
    }

    /// Argument rescaling by a central factor.
    ///
    /// With `power = 1` the coefficient of `z^e` is multiplied by
    /// `scale^{-e}` (i.e. `z -> z / scale`); with `power = -1` by `scale^{e}`
    /// (i.e. `z -> scale * z`). The window is unchanged.
    pub fn substitute(&self, scale: &CentralScale, power: i64) -> Self {
        assert!(power == 1 || power == -1, "substitute: power must be +-1");
        self.map_coeffs_indexed(|e, c| {
            let (s, c2) = scale.pow(-power * e);
            c.mul_central(&s, c2)
        })
    }

    /// Shorthand for the argument `scale * z`.
    pub fn scale_argument(&self, scale: &CentralScale) -> Self {
        self.substitute(scale, -1)
    }

    fn map_coeffs_indexed(&self, f: impl Fn(i64, &Element) -> Element) -> Self {
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .filter_map(|(e, c)| {
                    let v = f(*e, c);
                    (!v.is_zero()).then_some((*e, v))
                })
                .collect(),
            win_lo: self.win_lo,
            win_hi: self.win_hi,
            sup_lo: self.sup_lo,
            sup_hi: self.sup_hi,
        }
    }
}

impl TruncatedSeries<TensorElement> {
    pub fn mul(&self, rhs: &Self) -> Result<Self, SeriesError> {
        mul_with(self, rhs, |a, b| a * b)
    }

    pub fn scale(&self, s: &ScalarQ) -> Self {
        self.map_coeffs(|c| c.scale(s))
    }
}

/// Tensor pairing of two element-valued series, as a tensor-valued series.
pub fn tensor_series(
    a: &TruncatedSeries<Element>,
    b: &TruncatedSeries<Element>,
) -> Result<TruncatedSeries<TensorElement>, SeriesError> {
    mul_with(a, b, crate::tensor::tensor_of)
}

/// The named generating functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenSeries {
    /// `sum_{k>=1} x_k z^{-k}`
    XPlus,
    /// `x_0 + XPlus`
    X0Plus,
    /// `sum_{k>=1} x_{-k} z^{k}`
    XMinus,
    /// `x_0 + XMinus`
    X0Minus,
    /// `sum_{k>=1} y_k z^{-k}`
    YPlus,
    /// `y_0 + YPlus`
    Y0Plus,
    /// `sum_{k>=1} y_{-k} z^{k}`
    YMinus,
    /// `y_0 + YMinus`
    Y0Minus,
    /// `sum_{k>=0} psi_k z^{-k}`
    Psi,
    /// `sum_{k>=0} phi_{-k} z^{k}`
    Phi,
    /// `X0Plus + XMinus`, two-sided
    XFull,
    /// `Y0Plus + YMinus`, two-sided
    YFull,
}

/// Build a named generating function truncated at order `D`.
pub fn gen_series(name: GenSeries, order: i64) -> TruncatedSeries<Element> {
    assert!(order >= 0, "gen_series: negative order");
    use GenSeries::*;
    let d = order;
    let neg = |from: i64, gen: &dyn Fn(i64) -> Element| {
        TruncatedSeries::from_parts(
            (from..=d).map(|k| (-k, gen(k))),
            Some(-d),
            None,
            None,
            Some(-from),
        )
    };
    let pos = |from: i64, gen: &dyn Fn(i64) -> Element| {
        TruncatedSeries::from_parts(
            (from..=d).map(|k| (k, gen(-k))),
            None,
            Some(d),
            Some(from),
            None,
        )
    };
    match name {
        XPlus => neg(1, &Element::x),
        X0Plus => neg(0, &Element::x),
        XMinus => pos(1, &Element::x),
        X0Minus => pos(0, &Element::x),
        YPlus => neg(1, &Element::y),
        Y0Plus => neg(0, &Element::y),
        YMinus => pos(1, &Element::y),
        Y0Minus => pos(0, &Element::y),
        Psi => neg(0, &psi_element),
        Phi => TruncatedSeries::from_parts(
            (0..=d).map(|k| (k, phi_element(-k))),
            None,
            Some(d),
            Some(0),
            None,
        ),
        XFull => TruncatedSeries::from_parts(
            (-d..=d).map(|n| (n, Element::x(-n))),
            Some(-d),
            Some(d),
            None,
            None,
        ),
        YFull => TruncatedSeries::from_parts(
            (-d..=d).map(|n| (n, Element::y(-n))),
            Some(-d),
            Some(d),
            None,
            None,
        ),
    }
}

impl<C: SeriesCoeff + fmt::Display> fmt::Display for TruncatedSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "({c})")?,
                _ => write!(f, "({c})*z^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pbw::PbwMonomial;

    #[test]
    fn generator_series_coefficients() {
        let s = gen_series(GenSeries::X0Plus, 2);
        assert_eq!(s.coefficient(0).unwrap(), Element::x(0));
        assert_eq!(s.coefficient(-1).unwrap(), Element::x(1));
        assert_eq!(s.coefficient(-2).unwrap(), Element::x(2));
        // Above the support everything is exactly zero...
        assert_eq!(s.coefficient(5).unwrap(), Element::zero());
        // ...below the truncation nothing is known.
        assert_eq!(s.coefficient(-3), Err(SeriesError::OutOfWindow { exp: -3 }));

        let m = gen_series(GenSeries::XMinus, 2);
        assert_eq!(m.coefficient(1).unwrap(), Element::x(-1));
        assert_eq!(m.coefficient(2).unwrap(), Element::x(-2));
        assert_eq!(m.coefficient(0).unwrap(), Element::zero());

        let p = gen_series(GenSeries::Psi, 1);
        assert_eq!(p.coefficient(0).unwrap(), Element::k_pow(1));
        assert_eq!(p.coefficient(-1).unwrap(), psi_element(1));

        let phi = gen_series(GenSeries::Phi, 2);
        assert_eq!(phi.coefficient(2).unwrap(), phi_element(-2));
    }

    #[test]
    fn addition_identity() {
        let s = gen_series(GenSeries::X0Plus, 3);
        let sum = s.add(&TruncatedSeries::zero()).unwrap();
        assert_eq!(sum.coefficient(-2), s.coefficient(-2));
        assert_eq!(sum.window(), s.window());
    }

    #[test]
    fn square_matches_hand_expansion() {
        // Coefficient of z^{-2} in X_0^+(z)^2 is (1 + q^2) x_0 x_2 + q^2 x_1 x_1.
        let s = gen_series(GenSeries::X0Plus, 2);
        let sq = s.pow(2).unwrap();
        let got = sq.coefficient(-2).unwrap();
        let expect = &Element::term(
            ScalarQ::from_laurent(
                &crate::scalar::LaurentPoly::one() + &crate::scalar::LaurentPoly::q_pow(2),
            ),
            PbwMonomial::new(0, 0, vec![0, 2], vec![], vec![]),
        ) + &Element::term(
            ScalarQ::q_pow(2),
            PbwMonomial::new(0, 0, vec![1, 1], vec![], vec![]),
        );
        assert_eq!(got, expect);
    }

    #[test]
    fn mul_window_law() {
        // A product of two order-D z^{-1}-truncations stays exact to z^{-D}.
        let a = gen_series(GenSeries::X0Plus, 4);
        let b = gen_series(GenSeries::X0Plus, 4);
        let prod = a.mul(&b).unwrap();
        assert!(prod.window_covers(-4, 0));
        assert!(!prod.window_contains(-5));
        // Pure z^{+1}-series mirror; the support starting at z^1 buys one
        // extra exact exponent.
        let c = gen_series(GenSeries::XMinus, 3);
        let prod2 = c.mul(&c).unwrap();
        assert!(prod2.window_covers(0, 4));
        assert!(!prod2.window_contains(5));
    }

    #[test]
    fn two_sided_same_variable_product_is_rejected() {
        let a = gen_series(GenSeries::XFull, 2);
        let b = gen_series(GenSeries::YFull, 2);
        assert_eq!(a.mul(&b), Err(SeriesError::EmptyWindow));
    }

    #[test]
    fn disjoint_windows_cannot_be_added() {
        let a: TruncatedSeries<Element> =
            TruncatedSeries::from_parts([(0, Element::x(0))], Some(0), Some(1), None, None);
        let b: TruncatedSeries<Element> =
            TruncatedSeries::from_parts([(5, Element::x(1))], Some(5), Some(6), None, None);
        assert_eq!(a.add(&b), Err(SeriesError::EmptyWindow));
    }

    #[test]
    fn substitution_examples() {
        // X_0^+ with argument scaled by q^2 c: coefficient of z^{-1} becomes
        // q^2 * c x_1.
        let s = gen_series(GenSeries::X0Plus, 2);
        let t = s.substitute(&CentralScale::q_c(2, 2), 1);
        assert_eq!(
            t.coefficient(-1).unwrap(),
            Element::term(
                ScalarQ::q_pow(2),
                PbwMonomial::new(0, 2, vec![1], vec![], vec![])
            )
        );
        // The identity scale is the identity.
        assert_eq!(s.substitute(&CentralScale::one(), 1), s);
        // Psi rescaled by c^{3/2} with positive power: coefficient of z^{-1}
        // picks up c^{3/2}.
        let p = gen_series(GenSeries::Psi, 1).substitute(&CentralScale::q_c(0, 3), 1);
        assert_eq!(
            p.coefficient(-1).unwrap(),
            Element::term(
                ScalarQ::q_minus_qinv(),
                PbwMonomial::new(1, 3, vec![], vec![1], vec![])
            )
        );
        // The argument rescaling Psi(c^{3/2} z) is the power -1 direction.
        let p2 = gen_series(GenSeries::Psi, 1).scale_argument(&CentralScale::q_c(0, 3));
        assert_eq!(
            p2.coefficient(-1).unwrap(),
            Element::term(
                ScalarQ::q_minus_qinv(),
                PbwMonomial::new(1, -3, vec![], vec![1], vec![])
            )
        );
    }

    #[test]
    fn substitution_composes() {
        let s = gen_series(GenSeries::Y0Plus, 3);
        let a = CentralScale::q_c(2, 2);
        let b = CentralScale::q_c(-1, 1);
        let lhs = s.substitute(&a, 1).substitute(&b, 1);
        let rhs = s.substitute(&a.compose(&b), 1);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn degree_tracks_exponent_for_generating_functions() {
        // Every coefficient of X_0^+(z)^n at z^{-k} is homogeneous of degree k
        // and weight 2n.
        for n in 1..=3u32 {
            let s = gen_series(GenSeries::X0Plus, 4).pow(n).unwrap();
            for (e, c) in s.stored() {
                assert_eq!(c.bigrading(), Some((-e, 2 * n as i64)));
            }
        }
    }
}

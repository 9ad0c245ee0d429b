//! Algebra maps: the shift automorphisms `S`, `T`, the antiautomorphisms
//! `alpha` and `beta`, the seed coproducts, and the recursive coproduct
//! oracle.
//!
//! `alpha` sends `q -> q^{-1}`, `c^{1/2} -> c^{-1/2}`, `x_n -> y_{-n}`,
//! `y_n -> x_{-n}`, `h_k -> h_{-k}` and reverses products; `K -> K^{-1}`
//! (forced by `psi_0 -> phi_0`). `beta` fixes scalars and `h`'s, swaps
//! `x_n <-> y_n`, inverts `c^{1/2}` and reverses products. Both go through
//! the normal-ordering engine since reversal un-sorts the blocks.
//!
//! The coproduct oracle [`delta_recursive`] generates every `Delta(x_n)`,
//! `Delta(y_n)`, `Delta(psi_n)`, `Delta(phi_{-n})` from the seed values using
//! only the index-shift commutators with `h_{+-1}` and the mixed relation at
//! `n = 0`. It is the reference the closed forms are tested against.

use std::fmt;

use crate::pbw::{normal_order_word, phi_element, psi_element, Element, Letter, PbwMonomial};
use crate::scalar::{q_int, ScalarQ};
use crate::series::TruncatedSeries;
use crate::tensor::{tensor_of, Tensor3Element, TensorElement};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MorphismError {
    /// `S` is only defined on the subalgebra without `y`-generators.
    ContainsY,
    /// `T` is only defined on the subalgebra without `x`-generators.
    ContainsX,
}

impl fmt::Display for MorphismError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MorphismError::ContainsY => write!(f, "shift S rejects elements containing y's"),
            MorphismError::ContainsX => write!(f, "shift T rejects elements containing x's"),
        }
    }
}

impl std::error::Error for MorphismError {}

/// The automorphism `S^{steps}: x_n -> x_{n+steps}` on the subalgebra
/// generated by the `x`'s, `h`'s, `K` and `c^{1/2}`.
pub fn shift_s(a: &Element, steps: i64) -> Result<Element, MorphismError> {
    let mut out = Element::zero();
    for (m, c) in a.terms() {
        if !m.y_block().is_empty() {
            return Err(MorphismError::ContainsY);
        }
        let x: Vec<i64> = m.x_block().iter().map(|i| i + steps).collect();
        out.insert_add(
            PbwMonomial::new(m.k_exp(), m.c_half(), x, m.h_block().to_vec(), vec![]),
            c,
        );
    }
    Ok(out)
}

/// The automorphism `T^{steps}: y_n -> y_{n+steps}` on the subalgebra
/// generated by the `y`'s, `h`'s, `K` and `c^{1/2}`.
pub fn shift_t(a: &Element, steps: i64) -> Result<Element, MorphismError> {
    let mut out = Element::zero();
    for (m, c) in a.terms() {
        if !m.x_block().is_empty() {
            return Err(MorphismError::ContainsX);
        }
        let y: Vec<i64> = m.y_block().iter().map(|i| i + steps).collect();
        out.insert_add(
            PbwMonomial::new(m.k_exp(), m.c_half(), vec![], m.h_block().to_vec(), y),
            c,
        );
    }
    Ok(out)
}

/// Image of a single monomial under `alpha`, as an element.
fn alpha_monomial(m: &PbwMonomial, coeff: &ScalarQ) -> Element {
    // alpha(X H Y K^k c^{b/2}) = c^{-b/2} K^{-k} alpha(Y)^rev alpha(H)^rev
    // alpha(X)^rev; moving K^{-k} to the right across the image letters
    // costs q^{k * weight(m)}.
    let mut word: Vec<Letter> = Vec::new();
    word.extend(m.y_block().iter().rev().map(|&p| Letter::X(-p)));
    word.extend(m.h_block().iter().rev().map(|&j| Letter::H(-j)));
    word.extend(m.x_block().iter().rev().map(|&i| Letter::Y(-i)));
    let cross = ScalarQ::q_pow(m.k_exp() * m.weight());
    normal_order_word(&coeff.bar() * &cross, -m.k_exp(), -m.c_half(), word)
}

/// The bar-twisted antiautomorphism `alpha`.
pub fn alpha(a: &Element) -> Element {
    let mut out = Element::zero();
    for (m, c) in a.terms() {
        out = &out + &alpha_monomial(m, c);
    }
    out
}

/// The scalar-fixing antiautomorphism `beta`.
pub fn beta(a: &Element) -> Element {
    let mut out = Element::zero();
    for (m, c) in a.terms() {
        let mut word: Vec<Letter> = Vec::new();
        word.extend(m.y_block().iter().rev().map(|&p| Letter::X(p)));
        word.extend(m.h_block().iter().rev().map(|&j| Letter::H(j)));
        word.extend(m.x_block().iter().rev().map(|&i| Letter::Y(i)));
        // K^k starts in front of the image letters; weight of the image word
        // is the negative of the original weight.
        let cross = ScalarQ::q_pow(-m.k_exp() * m.weight());
        out = &out + &normal_order_word(c * &cross, m.k_exp(), -m.c_half(), word);
    }
    out
}

/// `(alpha (x) alpha) . tau` on the tensor algebra, with `tau` the flip.
pub fn alpha_tensor_flip(t: &TensorElement) -> TensorElement {
    let mut out = TensorElement::zero();
    for ((l, r), c) in t.terms() {
        let part = tensor_of(
            &alpha_monomial(r, &ScalarQ::one()),
            &alpha_monomial(l, &ScalarQ::one()),
        )
        .scale(&c.bar());
        out = &out + &part;
    }
    out
}

/// Coefficientwise extension of `alpha` to series.
///
/// The `z`-exponents are untouched: identities like
/// `alpha(Y^+(q^2 c z^{-1})) = X^-(q^2 c z)` come out with the inverted
/// argument supplied via [`TruncatedSeries::invert_z`].
pub fn alpha_series(s: &TruncatedSeries<Element>) -> TruncatedSeries<Element> {
    s.map_coeffs(alpha)
}

/// Coefficientwise extension of `beta` to series.
pub fn beta_series(s: &TruncatedSeries<Element>) -> TruncatedSeries<Element> {
    s.map_coeffs(beta)
}

/// The generators whose coproduct is a seed of the recursion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeedGenerator {
    X0,
    Y0,
    XMinus1,
    Y1,
    K,
    Kinv,
    CHalf,
    CMinusHalf,
    H1,
    HMinus1,
}

fn t2(c: ScalarQ, l: PbwMonomial, r: PbwMonomial) -> TensorElement {
    TensorElement::term(c, l, r)
}

/// Seed coproduct values.
///
/// `Delta(h_{-1})` is not an axiom: it is derived by applying
/// `(alpha (x) alpha) . tau` to `Delta(h_1)`; an independent derivation via
/// `phi_{-1}` is checked in the morphism suite.
pub fn delta_seed(g: SeedGenerator) -> TensorElement {
    use SeedGenerator::*;
    let one = ScalarQ::one;
    match g {
        X0 => {
            &t2(one(), PbwMonomial::x(0), PbwMonomial::k_pow(1))
                + &t2(one(), PbwMonomial::one(), PbwMonomial::x(0))
        }
        Y0 => {
            &t2(one(), PbwMonomial::y(0), PbwMonomial::one())
                + &t2(one(), PbwMonomial::k_pow(-1), PbwMonomial::y(0))
        }
        XMinus1 => {
            &t2(one(), PbwMonomial::x(-1), PbwMonomial::k_pow(-1))
                + &t2(one(), PbwMonomial::c_half_pow(-2), PbwMonomial::x(-1))
        }
        Y1 => {
            &t2(one(), PbwMonomial::y(1), PbwMonomial::c_half_pow(2))
                + &t2(one(), PbwMonomial::k_pow(1), PbwMonomial::y(1))
        }
        K => t2(one(), PbwMonomial::k_pow(1), PbwMonomial::k_pow(1)),
        Kinv => t2(one(), PbwMonomial::k_pow(-1), PbwMonomial::k_pow(-1)),
        CHalf => t2(
            one(),
            PbwMonomial::c_half_pow(1),
            PbwMonomial::c_half_pow(1),
        ),
        CMinusHalf => t2(
            one(),
            PbwMonomial::c_half_pow(-1),
            PbwMonomial::c_half_pow(-1),
        ),
        H1 => {
            let q2m2 = &ScalarQ::q_pow(2) - &ScalarQ::q_pow(-2);
            let mut t = t2(one(), PbwMonomial::h(1), PbwMonomial::c_half_pow(3));
            t = &t + &t2(one(), PbwMonomial::c_half_pow(1), PbwMonomial::h(1));
            &t - &t2(
                q2m2,
                PbwMonomial::new(0, 1, vec![0], vec![], vec![]),
                PbwMonomial::new(0, 1, vec![], vec![], vec![1]),
            )
        }
        HMinus1 => alpha_tensor_flip(&delta_seed(H1)),
    }
}

/// The four generator families the coproduct oracle produces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DeltaFamily {
    X,
    Y,
    Psi,
    Phi,
}

impl DeltaFamily {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "x" => Some(DeltaFamily::X),
            "y" => Some(DeltaFamily::Y),
            "psi" => Some(DeltaFamily::Psi),
            "phi" => Some(DeltaFamily::Phi),
            _ => None,
        }
    }
}

impl fmt::Display for DeltaFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DeltaFamily::X => write!(f, "x"),
            DeltaFamily::Y => write!(f, "y"),
            DeltaFamily::Psi => write!(f, "psi"),
            DeltaFamily::Phi => write!(f, "phi"),
        }
    }
}

/// Coproduct of a generator computed by iterated tensor commutators from the
/// seeds; the oracle for the closed forms.
///
/// Families `psi`/`phi` require `index >= 0` / `index <= 0`.
pub fn delta_recursive(family: DeltaFamily, index: i64) -> TensorElement {
    match family {
        DeltaFamily::X => delta_x(index),
        DeltaFamily::Y => delta_y(index),
        DeltaFamily::Psi => {
            assert!(index >= 0, "psi index must be nonnegative");
            if index == 0 {
                return delta_seed(SeedGenerator::K);
            }
            // psi_N = (q - q^{-1}) c^{-N/2} [x_N, y_0]
            delta_x(index)
                .commutator(&delta_seed(SeedGenerator::Y0))
                .scale_central(&ScalarQ::q_minus_qinv(), -index, -index)
        }
        DeltaFamily::Phi => {
            assert!(index <= 0, "phi index must be nonpositive");
            if index == 0 {
                return delta_seed(SeedGenerator::Kinv);
            }
            // phi_{-M} = -(q - q^{-1}) c^{-M/2} [x_{-M}, y_0]
            let m = -index;
            delta_x(index)
                .commutator(&delta_seed(SeedGenerator::Y0))
                .scale_central(&-&ScalarQ::q_minus_qinv(), -m, -m)
        }
    }
}

fn delta_x(n: i64) -> TensorElement {
    // x_{n+1} = [2]^{-1} c^{1/2} [h_1, x_n] and
    // x_{n-1} = [2]^{-1} c^{1/2} [h_{-1}, x_n].
    let inv2 = ScalarQ::from_laurent(q_int(2)).inv();
    let mut acc = delta_seed(SeedGenerator::X0);
    if n >= 0 {
        let dh = delta_seed(SeedGenerator::H1);
        for _ in 0..n {
            acc = dh.commutator(&acc).scale_central(&inv2, 1, 1);
        }
    } else {
        let dh = delta_seed(SeedGenerator::HMinus1);
        for _ in 0..-n {
            acc = dh.commutator(&acc).scale_central(&inv2, 1, 1);
        }
    }
    acc
}

fn delta_y(n: i64) -> TensorElement {
    // y_{n+1} = -[2]^{-1} c^{-1/2} [h_1, y_n] and
    // y_{n-1} = -[2]^{-1} c^{-1/2} [h_{-1}, y_n].
    let minus_inv2 = -&ScalarQ::from_laurent(q_int(2)).inv();
    let mut acc = delta_seed(SeedGenerator::Y0);
    if n >= 0 {
        let dh = delta_seed(SeedGenerator::H1);
        for _ in 0..n {
            acc = dh.commutator(&acc).scale_central(&minus_inv2, -1, -1);
        }
    } else {
        let dh = delta_seed(SeedGenerator::HMinus1);
        for _ in 0..-n {
            acc = dh.commutator(&acc).scale_central(&minus_inv2, -1, -1);
        }
    }
    acc
}

/// `Delta(h_m)` for nonzero `m`, peeled off the expanded `psi`/`phi`
/// coproducts by induction on `|m|`.
pub fn delta_h(m: i64) -> TensorElement {
    assert!(m != 0, "h-index must be nonzero");
    match m {
        1 => return delta_seed(SeedGenerator::H1),
        -1 => return delta_seed(SeedGenerator::HMinus1),
        _ => {}
    }
    let inv = ScalarQ::q_minus_qinv().inv();
    if m > 0 {
        // psi_m = (q - q^{-1}) K h_m + K R with R supported on shorter
        // partitions, so Delta(h_m) = (q-q^{-1})^{-1} (K^{-1} (x) K^{-1})
        // Delta(psi_m) - (q-q^{-1})^{-1} Delta(R).
        let mut acc = delta_recursive(DeltaFamily::Psi, m).scale(&inv);
        acc = &delta_seed(SeedGenerator::Kinv) * &acc;
        for (mono, coeff) in psi_element(m).terms() {
            if mono.h_block() == [m] {
                continue;
            }
            let mut prod = TensorElement::one();
            for &j in mono.h_block() {
                prod = &prod * &delta_h(j);
            }
            acc = &acc - &prod.scale(&(coeff * &inv));
        }
        acc
    } else {
        // phi_{-M} = -(q - q^{-1}) K^{-1} h_{-M} + K^{-1} R.
        let mut acc = delta_recursive(DeltaFamily::Phi, m).scale(&-&inv);
        acc = &delta_seed(SeedGenerator::K) * &acc;
        for (mono, coeff) in phi_element(m).terms() {
            if mono.h_block() == [m] {
                continue;
            }
            let mut prod = TensorElement::one();
            for &j in mono.h_block() {
                prod = &prod * &delta_h(j);
            }
            acc = &acc - &prod.scale(&(coeff * &-&inv));
        }
        acc
    }
}

/// `Delta` of a basis monomial, multiplying the generator coproducts in the
/// monomial's own order.
pub fn delta_of_monomial(m: &PbwMonomial) -> TensorElement {
    let mut acc = TensorElement::one();
    for &i in m.x_block() {
        acc = &acc * &delta_recursive(DeltaFamily::X, i);
    }
    for &j in m.h_block() {
        acc = &acc * &delta_h(j);
    }
    for &p in m.y_block() {
        acc = &acc * &delta_recursive(DeltaFamily::Y, p);
    }
    let central = TensorElement::term(
        ScalarQ::one(),
        PbwMonomial::new(m.k_exp(), m.c_half(), vec![], vec![], vec![]),
        PbwMonomial::new(m.k_exp(), m.c_half(), vec![], vec![], vec![]),
    );
    &acc * &central
}

/// `Delta` extended linearly to any element.
pub fn delta_of_element(a: &Element) -> TensorElement {
    let mut out = TensorElement::zero();
    for (m, c) in a.terms() {
        out = &out + &delta_of_monomial(m).scale(c);
    }
    out
}

/// `(Delta (x) id)` applied to a tensor element.
pub fn delta_tensor_left(t: &TensorElement) -> Tensor3Element {
    let mut out = Tensor3Element::zero();
    for ((l, r), c) in t.terms() {
        out = &out + &Tensor3Element::from_tensor_left(&delta_of_monomial(l), r, c);
    }
    out
}

/// `(id (x) Delta)` applied to a tensor element.
pub fn delta_tensor_right(t: &TensorElement) -> Tensor3Element {
    let mut out = Tensor3Element::zero();
    for ((l, r), c) in t.terms() {
        out = &out + &Tensor3Element::from_tensor_right(l, &delta_of_monomial(r), c);
    }
    out
}

#[cfg(test)]
mod tests;

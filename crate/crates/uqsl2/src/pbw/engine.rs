//! The normal-ordering engine.
//!
//! A word is a sequence of `x`/`h`/`y` letters with a trailing `K`-power and
//! `c^{1/2}`-power. The engine repeatedly rewrites the first out-of-order
//! adjacent pair until every state is a basis monomial:
//!
//! - `x_k x_l` with `k > l` and `y_a y_b` with `a < b` straighten by the
//!   quadratic exchange rules (the gap shrinks by two per correction, so the
//!   recursion terminates);
//! - `h_m` moves right across `x_n` (left across `y_n`) at the cost of a
//!   single shifted letter `x_{m+n}` (`y_{m+n}`) with the `[2m]/m` scalar and
//!   a central `c`-shift;
//! - `y_n x_m` swaps against the `psi`/`phi` correction of the mixed
//!   commutation relation, spliced in as expanded `h`-words;
//! - `h_m h_{-m}` contributes the central `(c^m - c^{-m})` correction.
//!
//! Products are folded in one letter at a time, re-canonicalizing between
//! appends so equal intermediate monomials merge. Straightened words and
//! monomial products are memoized per thread; both caches are pure.
//!
//! Termination of the full mixed rewriting is exercised empirically by the
//! associativity suite; a step bound guards against runaway recursion.

use std::cell::RefCell;
use std::collections::HashMap;

use num_bigint::BigInt;

use super::{partitions, Element, PbwMonomial};
use crate::scalar::{q_int, LaurentPoly, ScalarQ};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) enum Letter {
    X(i64),
    H(i64),
    Y(i64),
}

struct State {
    coeff: ScalarQ,
    k_exp: i64,
    c_half: i64,
    word: Vec<Letter>,
}

const MAX_STEPS: u64 = 50_000_000;

thread_local! {
    static WORD_CACHE: RefCell<HashMap<Vec<Letter>, Element>> = RefCell::new(HashMap::new());
    static PAIR_CACHE: RefCell<HashMap<(PbwMonomial, PbwMonomial), Element>> =
        RefCell::new(HashMap::new());
    static H_SCALARS: RefCell<HashMap<i64, ScalarQ>> = RefCell::new(HashMap::new());
    static SPLICE_TERMS: RefCell<HashMap<(i64, bool), Vec<(Vec<i64>, ScalarQ)>>> =
        RefCell::new(HashMap::new());
}

fn letter_weight(l: Letter) -> i64 {
    match l {
        Letter::X(_) => 2,
        Letter::Y(_) => -2,
        Letter::H(_) => 0,
    }
}

fn weight_of(word: &[Letter]) -> i64 {
    word.iter().map(|&l| letter_weight(l)).sum()
}

fn first_violation(word: &[Letter]) -> Option<usize> {
    use Letter::*;
    word.windows(2).position(|w| match (w[0], w[1]) {
        (X(a), X(b)) => a > b,
        (H(a), H(b)) => a > b,
        (Y(a), Y(b)) => a < b,
        (H(_), X(_)) | (Y(_), X(_)) | (Y(_), H(_)) => true,
        _ => false,
    })
}

/// `[2m]/m` from the `h`-commutation relations.
fn h_scalar(m: i64) -> ScalarQ {
    H_SCALARS.with(|c| {
        c.borrow_mut()
            .entry(m)
            .or_insert_with(|| ScalarQ::new(q_int(2 * m), LaurentPoly::from_int(m)))
            .clone()
    })
}

/// Expanded `psi_{s}` (or `phi_{-s}`) correction terms: partitions of `s`
/// paired with `psi_phi_weight / (q - q^{-1})`, memoized.
fn splice_terms(s: i64, negative: bool) -> Vec<(Vec<i64>, ScalarQ)> {
    SPLICE_TERMS.with(|c| {
        c.borrow_mut()
            .entry((s, negative))
            .or_insert_with(|| {
                partitions(s)
                    .into_iter()
                    .map(|parts| {
                        let w = &psi_phi_weight(&parts, negative) / &ScalarQ::q_minus_qinv();
                        (parts, w)
                    })
                    .collect()
            })
            .clone()
    })
}

/// Straighten `coeff * word * K^{k_exp} * c^{c_half/2}` into normal form.
pub(crate) fn normal_order_word(
    coeff: ScalarQ,
    k_exp: i64,
    c_half: i64,
    word: Vec<Letter>,
) -> Element {
    let mut acc = Element::term(coeff, PbwMonomial::one());
    for l in word {
        acc = append_letter(&acc, l).0;
    }
    shift_central(&acc, k_exp, c_half)
}

/// Product of two basis monomials; memoized.
pub(crate) fn mono_mul_cached(a: &PbwMonomial, b: &PbwMonomial) -> Element {
    let key = (a.clone(), b.clone());
    if let Some(e) = PAIR_CACHE.with(|c| c.borrow().get(&key).cloned()) {
        return e;
    }
    let e = mono_mul_with_stats(a, b).0;
    PAIR_CACHE.with(|c| c.borrow_mut().insert(key, e.clone()));
    e
}

pub(crate) fn mono_mul_with_stats(a: &PbwMonomial, b: &PbwMonomial) -> (Element, u64) {
    let mut acc = Element::from_monomial(a.clone());
    let mut steps = 0;
    for l in b.letters() {
        let (next, s) = append_letter(&acc, l);
        acc = next;
        steps += s;
    }
    (shift_central(&acc, b.k_exp(), b.c_half()), steps)
}

/// Multiply every monomial by the trailing central factor `K^k c^{c2/2}`.
fn shift_central(e: &Element, k_exp: i64, c_half: i64) -> Element {
    if k_exp == 0 && c_half == 0 {
        return e.clone();
    }
    let mut out = Element::zero();
    for (m, c) in e.terms() {
        out.insert_add(
            PbwMonomial::new(
                m.k_exp() + k_exp,
                m.c_half() + c_half,
                m.x_block().to_vec(),
                m.h_block().to_vec(),
                m.y_block().to_vec(),
            ),
            c,
        );
    }
    out
}

/// Multiply an element by a single trailing letter and straighten.
fn append_letter(e: &Element, l: Letter) -> (Element, u64) {
    let mut out = Element::zero();
    let mut steps = 0;
    for (m, c) in e.terms() {
        // The monomial's K-power crosses the new letter on its way right.
        let coeff = c.mul_q_pow(m.k_exp() * letter_weight(l));
        let mut word = m.letters();
        word.push(l);
        let (part, s) = straighten_word(&word);
        steps += s;
        for (mono, cf) in part.terms() {
            out.insert_add(
                PbwMonomial::new(
                    mono.k_exp() + m.k_exp(),
                    mono.c_half() + m.c_half(),
                    mono.x_block().to_vec(),
                    mono.h_block().to_vec(),
                    mono.y_block().to_vec(),
                ),
                &(cf * &coeff),
            );
        }
    }
    (out, steps)
}

/// Memoized straightening of a bare word (no coefficient, no trailing
/// central factor). The result for a general state follows by scaling and a
/// central shift, since spliced `K`-powers commute with the trailing ones.
fn straighten_word(word: &[Letter]) -> (Element, u64) {
    if first_violation(word).is_none() {
        let mut out = Element::zero();
        emit(
            &mut out,
            State {
                coeff: ScalarQ::one(),
                k_exp: 0,
                c_half: 0,
                word: word.to_vec(),
            },
        );
        return (out, 0);
    }
    if let Some(e) = WORD_CACHE.with(|c| c.borrow().get(word).cloned()) {
        return (e, 0);
    }
    let (e, steps) = straighten(ScalarQ::one(), 0, 0, word.to_vec());
    WORD_CACHE.with(|c| c.borrow_mut().insert(word.to_vec(), e.clone()));
    (e, steps)
}

fn straighten(coeff: ScalarQ, k_exp: i64, c_half: i64, word: Vec<Letter>) -> (Element, u64) {
    let mut out = Element::zero();
    if coeff.is_zero() {
        return (out, 0);
    }
    let mut steps: u64 = 0;
    let mut stack = vec![State {
        coeff,
        k_exp,
        c_half,
        word,
    }];
    while let Some(mut st) = stack.pop() {
        // Resolve plain swaps in place; fork only on corrections.
        loop {
            let i = match first_violation(&st.word) {
                None => {
                    emit(&mut out, st);
                    break;
                }
                Some(i) => i,
            };
            steps += 1;
            assert!(steps < MAX_STEPS, "normal ordering exceeded step budget");
            use Letter::*;
            match (st.word[i], st.word[i + 1]) {
                (X(a), X(b)) => {
                    // x_a x_b = q^2 x_b x_a + q^2 x_{a-1} x_{b+1} - x_{b+1} x_{a-1}
                    // for a > b, collapsing to a plain q^2-swap when a = b + 1.
                    if a > b + 1 {
                        let mut w2 = st.word.clone();
                        w2[i] = X(a - 1);
                        w2[i + 1] = X(b + 1);
                        stack.push(State {
                            coeff: st.coeff.mul_q_pow(2),
                            k_exp: st.k_exp,
                            c_half: st.c_half,
                            word: w2,
                        });
                        let mut w3 = st.word.clone();
                        w3[i] = X(b + 1);
                        w3[i + 1] = X(a - 1);
                        stack.push(State {
                            coeff: -&st.coeff,
                            k_exp: st.k_exp,
                            c_half: st.c_half,
                            word: w3,
                        });
                    }
                    st.word[i] = X(b);
                    st.word[i + 1] = X(a);
                    st.coeff = st.coeff.mul_q_pow(2);
                }
                (Y(a), Y(b)) => {
                    // y_a y_b = q^2 y_b y_a - y_{b-1} y_{a+1} + q^2 y_{a+1} y_{b-1}
                    // for a < b, the mirror image of the x-rule.
                    if b > a + 1 {
                        let mut w2 = st.word.clone();
                        w2[i] = Y(b - 1);
                        w2[i + 1] = Y(a + 1);
                        stack.push(State {
                            coeff: -&st.coeff,
                            k_exp: st.k_exp,
                            c_half: st.c_half,
                            word: w2,
                        });
                        let mut w3 = st.word.clone();
                        w3[i] = Y(a + 1);
                        w3[i + 1] = Y(b - 1);
                        stack.push(State {
                            coeff: st.coeff.mul_q_pow(2),
                            k_exp: st.k_exp,
                            c_half: st.c_half,
                            word: w3,
                        });
                    }
                    st.word[i] = Y(b);
                    st.word[i + 1] = Y(a);
                    st.coeff = st.coeff.mul_q_pow(2);
                }
                (H(a), H(b)) => {
                    if a == -b {
                        // [h_a, h_{-a}] = ([2a]/a)(c^a - c^{-a})/(q - q^{-1})
                        let s = &(&st.coeff * &h_scalar(a)) / &ScalarQ::q_minus_qinv();
                        let mut rest = st.word.clone();
                        rest.drain(i..=i + 1);
                        stack.push(State {
                            coeff: s.clone(),
                            k_exp: st.k_exp,
                            c_half: st.c_half + 2 * a,
                            word: rest.clone(),
                        });
                        stack.push(State {
                            coeff: -&s,
                            k_exp: st.k_exp,
                            c_half: st.c_half - 2 * a,
                            word: rest,
                        });
                    }
                    st.word[i] = H(b);
                    st.word[i + 1] = H(a);
                }
                (H(m), X(n)) => {
                    // h_m x_n = x_n h_m + ([2m]/m) c^{-|m|/2} x_{m+n}
                    let mut w2 = st.word.clone();
                    w2.remove(i + 1);
                    w2[i] = X(m + n);
                    stack.push(State {
                        coeff: &st.coeff * &h_scalar(m),
                        k_exp: st.k_exp,
                        c_half: st.c_half - m.abs(),
                        word: w2,
                    });
                    st.word[i] = X(n);
                    st.word[i + 1] = H(m);
                }
                (Y(n), H(m)) => {
                    // y_n h_m = h_m y_n + ([2m]/m) c^{|m|/2} y_{m+n}
                    let mut w2 = st.word.clone();
                    w2.remove(i + 1);
                    w2[i] = Y(m + n);
                    stack.push(State {
                        coeff: &st.coeff * &h_scalar(m),
                        k_exp: st.k_exp,
                        c_half: st.c_half + m.abs(),
                        word: w2,
                    });
                    st.word[i] = H(m);
                    st.word[i + 1] = Y(n);
                }
                (Y(n), X(m)) => {
                    // y_n x_m = x_m y_n - (c^{(m-n)/2} psi_{m+n}
                    //                      - c^{-(m-n)/2} phi_{m+n}) / (q - q^{-1})
                    // with psi/phi spliced in as expanded K h-words. The K-power
                    // picks up a q-factor crossing the suffix on its way right.
                    let suffix_wt = weight_of(&st.word[i + 2..]);
                    let s = m + n;
                    if s >= 0 {
                        for (parts, w) in splice_terms(s, false) {
                            let mut word = Vec::with_capacity(st.word.len() + parts.len());
                            word.extend_from_slice(&st.word[..i]);
                            word.extend(parts.iter().rev().map(|&p| Letter::H(p)));
                            word.extend_from_slice(&st.word[i + 2..]);
                            stack.push(State {
                                coeff: (-&(&st.coeff * &w)).mul_q_pow(suffix_wt),
                                k_exp: st.k_exp + 1,
                                c_half: st.c_half + (m - n),
                                word,
                            });
                        }
                    }
                    if s <= 0 {
                        for (parts, w) in splice_terms(-s, true) {
                            let mut word = Vec::with_capacity(st.word.len() + parts.len());
                            word.extend_from_slice(&st.word[..i]);
                            word.extend(parts.iter().map(|&p| Letter::H(-p)));
                            word.extend_from_slice(&st.word[i + 2..]);
                            stack.push(State {
                                coeff: (&st.coeff * &w).mul_q_pow(-suffix_wt),
                                k_exp: st.k_exp - 1,
                                c_half: st.c_half - (m - n),
                                word,
                            });
                        }
                    }
                    st.word[i] = X(m);
                    st.word[i + 1] = Y(n);
                }
                _ => unreachable!("violation scan returned an ordered pair"),
            }
        }
    }
    (out, steps)
}

/// `(+-(q - q^{-1}))^{len} / prod_k a_k!` for a partition with multiplicities
/// `a_k`, the coefficient of the corresponding `h`-word in `psi`/`phi`.
pub(crate) fn psi_phi_weight(parts: &[i64], negative: bool) -> ScalarQ {
    let len = parts.len() as i64;
    let mut num = ScalarQ::q_minus_qinv().pow(len);
    if negative && len % 2 == 1 {
        num = -&num;
    }
    let mut fact = BigInt::from(1);
    let mut run = 0u64;
    let mut prev = None;
    for &p in parts {
        if Some(p) == prev {
            run += 1;
        } else {
            run = 1;
            prev = Some(p);
        }
        fact *= BigInt::from(run);
    }
    &num / &ScalarQ::from_laurent(LaurentPoly::monomial(fact, 0))
}

fn emit(out: &mut Element, st: State) {
    let mut x_block = Vec::new();
    let mut h_block = Vec::new();
    let mut y_block = Vec::new();
    for l in st.word {
        match l {
            Letter::X(n) => x_block.push(n),
            Letter::H(k) => h_block.push(k),
            Letter::Y(n) => y_block.push(n),
        }
    }
    out.insert_add(
        PbwMonomial::new(st.k_exp, st.c_half, x_block, h_block, y_block),
        &st.coeff,
    );
}

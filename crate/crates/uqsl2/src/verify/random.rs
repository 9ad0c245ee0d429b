//! Seeded random case generation for the randomized suites.
//!
//! Bounds are deliberately small (indices within a few units of zero, short
//! blocks, coefficient height at most 2) so exact arithmetic stays fast while
//! every rewrite rule still fires.

use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::pbw::{Element, PbwMonomial};
use crate::scalar::{LaurentPoly, ScalarQ};

/// Deterministic case generator.
pub struct CaseGen {
    rng: ChaCha8Rng,
}

/// Which generator families a random monomial may draw on.
#[derive(Clone, Copy)]
pub struct Families {
    pub x: bool,
    pub h: bool,
    pub y: bool,
}

impl Families {
    pub fn all() -> Self {
        Families {
            x: true,
            h: true,
            y: true,
        }
    }

    /// The subalgebra without `y`-generators.
    pub fn x_side() -> Self {
        Families {
            x: true,
            h: true,
            y: false,
        }
    }

    /// The subalgebra without `x`-generators.
    pub fn y_side() -> Self {
        Families {
            x: false,
            h: true,
            y: true,
        }
    }
}

impl CaseGen {
    pub fn new(seed: u64) -> Self {
        CaseGen {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    fn index(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    fn block_len(&mut self, max: usize) -> usize {
        self.rng.gen_range(0..=max)
    }

    /// A random monomial with at most `max_len` letters in total, spread over
    /// the enabled families.
    pub fn monomial(&mut self, lo: i64, hi: i64, max_len: usize, fam: Families) -> PbwMonomial {
        let mut x: Vec<i64> = Vec::new();
        let mut h: Vec<i64> = Vec::new();
        let mut y: Vec<i64> = Vec::new();
        let mut kinds: Vec<u8> = Vec::new();
        if fam.x {
            kinds.push(0);
        }
        if fam.h {
            kinds.push(1);
        }
        if fam.y {
            kinds.push(2);
        }
        for _ in 0..self.block_len(max_len) {
            let kind = kinds[self.rng.gen_range(0..kinds.len())];
            match kind {
                0 => x.push(self.index(lo, hi)),
                1 => h.push(loop {
                    let k = self.index(lo, hi);
                    if k != 0 {
                        break k;
                    }
                }),
                _ => y.push(self.index(lo, hi)),
            }
        }
        x.sort();
        h.sort();
        y.sort();
        y.reverse();
        let k_exp = self.index(-1, 1);
        let c_half = self.index(-2, 2);
        PbwMonomial::new(k_exp, c_half, x, h, y)
    }

    /// A short random scalar of coefficient height at most 2.
    pub fn scalar(&mut self) -> ScalarQ {
        let mut p = LaurentPoly::zero();
        for _ in 0..self.rng.gen_range(1..=2) {
            let c = loop {
                let c = self.index(-2, 2);
                if c != 0 {
                    break c;
                }
            };
            p = &p + &LaurentPoly::monomial(BigInt::from(c), self.index(-2, 2));
        }
        if p.is_zero() {
            p = LaurentPoly::one();
        }
        ScalarQ::from_laurent(p)
    }

    /// A random element with one or two terms.
    pub fn element(&mut self, lo: i64, hi: i64, max_len: usize, fam: Families) -> Element {
        let mut e = Element::zero();
        for _ in 0..self.rng.gen_range(1..=2) {
            let m = self.monomial(lo, hi, max_len, fam);
            let s = self.scalar();
            e.insert_add(m, &s);
        }
        if e.is_zero() {
            e = Element::one();
        }
        e
    }
}

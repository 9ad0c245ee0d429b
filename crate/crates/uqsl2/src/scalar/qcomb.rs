use super::LaurentPoly;

/// The balanced q-integer `[n] = (q^n - q^{-n}) / (q - q^{-1})`, extended to
/// all integers by `[-n] = -[n]`.
///
/// For `n > 0` this is `q^{n-1} + q^{n-3} + ... + q^{1-n}`; `[0] = 0`.
pub fn q_int(n: i64) -> LaurentPoly {
    if n == 0 {
        return LaurentPoly::zero();
    }
    if n < 0 {
        return -&q_int(-n);
    }
    let mut acc = LaurentPoly::zero();
    let mut e = n - 1;
    while e >= 1 - n {
        acc = &acc + &LaurentPoly::q_pow(e);
        e -= 2;
    }
    acc
}

/// The q-factorial `[n]! = [n][n-1]...[1]`, with `[0]! = 1`.
///
/// Panics for negative `n`.
pub fn q_fact(n: i64) -> LaurentPoly {
    assert!(n >= 0, "q_fact: negative argument {n}");
    let mut acc = LaurentPoly::one();
    for k in 1..=n {
        acc = &acc * &q_int(k);
    }
    acc
}

/// The Gaussian binomial coefficient `[n]! / ([n-r]! [r]!)`.
///
/// The division is exact and the result is a Laurent polynomial.
/// Panics unless `0 <= r <= n`.
pub fn q_binom(n: i64, r: i64) -> LaurentPoly {
    assert!(
        0 <= r && r <= n,
        "q_binom: arguments out of range (n={n}, r={r})"
    );
    q_fact(n)
        .divexact(&(&q_fact(n - r) * &q_fact(r)))
        .expect("q_binom: exact division")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::Signed;

    #[test]
    fn small_q_integers() {
        assert_eq!(q_int(1), LaurentPoly::one());
        assert_eq!(q_int(2), &LaurentPoly::q() + &LaurentPoly::q_pow(-1));
        // [-3] = -(q^2 + 1 + q^-2), and the sign rule matches exact division
        // of (q^-3 - q^3) by (q - q^-1).
        let minus3 = q_int(-3);
        let expect = -&(&(&LaurentPoly::q_pow(2) + &LaurentPoly::one()) + &LaurentPoly::q_pow(-2));
        assert_eq!(minus3, expect);
        let num = &LaurentPoly::q_pow(-3) - &LaurentPoly::q_pow(3);
        let den = &LaurentPoly::q() - &LaurentPoly::q_pow(-1);
        assert_eq!(num.divexact(&den).unwrap(), minus3);
    }

    #[test]
    fn small_factorials() {
        assert_eq!(q_fact(0), LaurentPoly::one());
        assert_eq!(q_fact(2), q_int(2));
        // [3]! = (q + q^-1)(q^2 + 1 + q^-2) = q^3 + 2q + 2q^-1 + q^-3
        let expect = [(3, 1), (1, 2), (-1, 2), (-3, 1)]
            .into_iter()
            .fold(LaurentPoly::zero(), |acc, (e, c)| {
                &acc + &LaurentPoly::monomial(BigInt::from(c), e)
            });
        assert_eq!(q_fact(3), expect);
    }

    #[test]
    #[should_panic(expected = "negative")]
    fn factorial_rejects_negative() {
        q_fact(-1);
    }

    #[test]
    fn small_binomials() {
        assert_eq!(q_binom(5, 0), LaurentPoly::one());
        assert_eq!(q_binom(3, 1), q_int(3));
        // [4 choose 2] = q^4 + q^2 + 2 + q^-2 + q^-4
        let expect = [(4, 1), (2, 1), (0, 2), (-2, 1), (-4, 1)]
            .into_iter()
            .fold(LaurentPoly::zero(), |acc, (e, c)| {
                &acc + &LaurentPoly::monomial(BigInt::from(c), e)
            });
        assert_eq!(q_binom(4, 2), expect);
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn binomial_rejects_r_above_n() {
        q_binom(3, 4);
    }

    #[test]
    fn binomial_symmetry() {
        for n in 0..=12 {
            for r in 0..=n {
                assert_eq!(q_binom(n, r), q_binom(n, n - r));
            }
        }
    }

    #[test]
    fn binomials_bar_invariant_with_nonnegative_coeffs() {
        for n in 0..=12 {
            for r in 0..=n {
                let b = q_binom(n, r);
                assert_eq!(b.bar(), b, "bar invariance at ({n},{r})");
                assert!(
                    b.iter().all(|(_, c)| !c.is_negative()),
                    "negative coefficient in [{n} choose {r}]"
                );
            }
        }
    }

    #[test]
    fn alternating_binomial_sum_vanishes() {
        // sum_{k=0}^{n} (-1)^{n+k} [n choose k] q^{(n-k)(n-1)} = 0 for n >= 1.
        for n in 1..=12i64 {
            let mut acc = LaurentPoly::zero();
            for k in 0..=n {
                let sign = if (n + k) % 2 == 0 { 1 } else { -1 };
                let term = q_binom(n, k).mul_monomial(&BigInt::from(sign), (n - k) * (n - 1));
                acc = &acc + &term;
            }
            assert!(acc.is_zero(), "sum nonzero at n={n}: {acc}");
        }
    }
}

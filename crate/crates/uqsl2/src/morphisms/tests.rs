use super::*;
use crate::scalar::LaurentPoly;

#[test]
fn shift_examples() {
    assert_eq!(shift_s(&Element::x(0), 1).unwrap(), Element::x(1));
    let kc = Element::from_monomial(PbwMonomial::new(1, 1, vec![], vec![], vec![]));
    assert_eq!(shift_s(&kc, 1).unwrap(), kc);
    assert_eq!(shift_t(&Element::y(0), 1).unwrap(), Element::y(1));
    assert_eq!(shift_t(&Element::k_pow(1), 1).unwrap(), Element::k_pow(1));
    assert_eq!(shift_s(&Element::y(2), 1), Err(MorphismError::ContainsY));
    assert_eq!(shift_t(&Element::x(2), 1), Err(MorphismError::ContainsX));
}

#[test]
fn shifts_are_homomorphisms() {
    let a = &Element::x(2) * &Element::h(1);
    let b = &Element::x(0) * &Element::k_pow(1);
    let lhs = shift_s(&(&a * &b), 1).unwrap();
    let rhs = &shift_s(&a, 1).unwrap() * &shift_s(&b, 1).unwrap();
    assert_eq!(lhs, rhs);

    let a = &Element::y(1) * &Element::y(-1);
    let b = &Element::h(-2) * &Element::y(0);
    let lhs = shift_t(&(&a * &b), -1).unwrap();
    let rhs = &shift_t(&a, -1).unwrap() * &shift_t(&b, -1).unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn alpha_on_generators() {
    assert_eq!(alpha(&Element::x(3)), Element::y(-3));
    assert_eq!(alpha(&Element::y(2)), Element::x(-2));
    assert_eq!(alpha(&Element::h(1)), Element::h(-1));
    assert_eq!(alpha(&Element::k_pow(1)), Element::k_pow(-1));
    assert_eq!(alpha(&Element::c_half_pow(1)), Element::c_half_pow(-1));
    // Scalars are bar-involuted.
    assert_eq!(
        alpha(&Element::from_scalar(ScalarQ::q_pow(2))),
        Element::from_scalar(ScalarQ::q_pow(-2))
    );
}

#[test]
fn alpha_maps_psi_to_phi() {
    for n in 0..=4 {
        assert_eq!(alpha(&psi_element(n)), phi_element(-n), "at index {n}");
        assert_eq!(alpha(&phi_element(-n)), psi_element(n), "at index {n}");
    }
}

#[test]
fn alpha_is_an_involution() {
    let e = &(&Element::x(2) * &Element::y(-1)) * &psi_element(2);
    assert_eq!(alpha(&alpha(&e)), e);
}

#[test]
fn alpha_reverses_products() {
    let a = &Element::x(1) * &Element::h(-1);
    let b = &Element::y(0) * &Element::k_pow(1);
    assert_eq!(alpha(&(&a * &b)), &alpha(&b) * &alpha(&a));
}

#[test]
fn beta_on_generators() {
    assert_eq!(beta(&Element::x(2)), Element::y(2));
    assert_eq!(beta(&Element::y(-3)), Element::x(-3));
    assert_eq!(beta(&Element::h(1)), Element::h(1));
    assert_eq!(beta(&Element::k_pow(1)), Element::k_pow(1));
    assert_eq!(beta(&Element::c_half_pow(1)), Element::c_half_pow(-1));
    assert_eq!(
        beta(&Element::from_scalar(ScalarQ::q_pow(2))),
        Element::from_scalar(ScalarQ::q_pow(2))
    );
}

#[test]
fn beta_is_an_involutive_antihomomorphism() {
    let a = &Element::x(1) * &Element::x(-1);
    let b = &Element::h(2) * &Element::y(1);
    assert_eq!(beta(&(&a * &b)), &beta(&b) * &beta(&a));
    let e = &a * &b;
    assert_eq!(beta(&beta(&e)), e);
    assert_eq!(beta(&psi_element(2)), psi_element(2));
}

#[test]
fn seed_coproducts() {
    let dx0 = delta_seed(SeedGenerator::X0);
    let expect = &TensorElement::term(ScalarQ::one(), PbwMonomial::x(0), PbwMonomial::k_pow(1))
        + &TensorElement::term(ScalarQ::one(), PbwMonomial::one(), PbwMonomial::x(0));
    assert_eq!(dx0, expect);

    let dy1 = delta_seed(SeedGenerator::Y1);
    let expect = &TensorElement::term(
        ScalarQ::one(),
        PbwMonomial::y(1),
        PbwMonomial::c_half_pow(2),
    ) + &TensorElement::term(ScalarQ::one(), PbwMonomial::k_pow(1), PbwMonomial::y(1));
    assert_eq!(dy1, expect);
}

#[test]
fn derived_h_minus_one_coproduct() {
    // Two independent derivations must agree: the flip-alpha image of
    // Delta(h_1), and the phi_{-1} route
    // Delta(h_{-1}) = -(q - q^{-1})^{-1} Delta(K) Delta(phi_{-1}).
    let via_alpha = delta_seed(SeedGenerator::HMinus1);

    let expect = {
        let q2m2 = &ScalarQ::q_pow(2) - &ScalarQ::q_pow(-2);
        let mut t = TensorElement::term(
            ScalarQ::one(),
            PbwMonomial::h(-1),
            PbwMonomial::c_half_pow(-1),
        );
        t = &t
            + &TensorElement::term(
                ScalarQ::one(),
                PbwMonomial::c_half_pow(-3),
                PbwMonomial::h(-1),
            );
        &t + &TensorElement::term(
            q2m2,
            PbwMonomial::new(0, -1, vec![-1], vec![], vec![]),
            PbwMonomial::new(0, -1, vec![], vec![], vec![0]),
        )
    };
    assert_eq!(via_alpha, expect);

    let inv = ScalarQ::q_minus_qinv().inv();
    let via_phi =
        (&delta_seed(SeedGenerator::K) * &delta_recursive(DeltaFamily::Phi, -1)).scale(&-&inv);
    assert_eq!(via_alpha, via_phi);
}

#[test]
fn recursion_bases() {
    assert_eq!(
        delta_recursive(DeltaFamily::X, 0),
        delta_seed(SeedGenerator::X0)
    );
    assert_eq!(
        delta_recursive(DeltaFamily::Psi, 0),
        delta_seed(SeedGenerator::K)
    );
    assert_eq!(
        delta_recursive(DeltaFamily::Phi, 0),
        delta_seed(SeedGenerator::Kinv)
    );
}

#[test]
fn recursion_reproduces_the_other_seeds() {
    // Delta(x_{-1}) and Delta(y_1) are axioms, and the h_{+-1} recursion
    // starting from x_0 / y_0 must land on them.
    assert_eq!(
        delta_recursive(DeltaFamily::X, -1),
        delta_seed(SeedGenerator::XMinus1)
    );
    assert_eq!(
        delta_recursive(DeltaFamily::Y, 1),
        delta_seed(SeedGenerator::Y1)
    );
}

#[test]
fn delta_x1_hand_value() {
    // Delta(x_1) = c (x) x_1 + x_1 (x) c^2 K + c x_0 (x) c^{1/2} psi_1
    //              - q^{-1}(q - q^{-1})^2 c x_0^2 (x) c y_1 K
    let got = delta_recursive(DeltaFamily::X, 1);
    let qm = ScalarQ::q_minus_qinv();
    let mut expect = TensorElement::term(
        ScalarQ::one(),
        PbwMonomial::c_half_pow(2),
        PbwMonomial::x(1),
    );
    expect = &expect
        + &TensorElement::term(
            ScalarQ::one(),
            PbwMonomial::x(1),
            PbwMonomial::new(1, 4, vec![], vec![], vec![]),
        );
    expect = &expect
        + &TensorElement::term(
            qm.clone(),
            PbwMonomial::new(0, 2, vec![0], vec![], vec![]),
            PbwMonomial::new(1, 1, vec![], vec![1], vec![]),
        );
    let coeff = &(&ScalarQ::q_pow(-1) * &qm) * &qm;
    expect = &expect
        - &TensorElement::term(
            coeff,
            PbwMonomial::new(0, 2, vec![0, 0], vec![], vec![]),
            PbwMonomial::new(1, 2, vec![], vec![], vec![1]),
        );
    assert_eq!(got, expect);
}

#[test]
fn delta_is_multiplicative_on_the_mixed_relation() {
    // Delta([x_0, y_0]) = (Delta(K) - Delta(K^{-1})) / (q - q^{-1})
    let lhs = delta_seed(SeedGenerator::X0).commutator(&delta_seed(SeedGenerator::Y0));
    let inv = ScalarQ::q_minus_qinv().inv();
    let rhs = (&delta_seed(SeedGenerator::K) - &delta_seed(SeedGenerator::Kinv)).scale(&inv);
    assert_eq!(lhs, rhs);
}

#[test]
fn alpha_flip_intertwines_delta() {
    // (alpha (x) alpha) . tau . Delta = Delta . alpha on x_n (so the image is
    // Delta(y_{-n})), and on psi_n (image Delta(phi_{-n})).
    for n in -2..=2i64 {
        assert_eq!(
            alpha_tensor_flip(&delta_recursive(DeltaFamily::X, n)),
            delta_recursive(DeltaFamily::Y, -n),
            "x family at {n}"
        );
    }
    for n in 0..=2i64 {
        assert_eq!(
            alpha_tensor_flip(&delta_recursive(DeltaFamily::Psi, n)),
            delta_recursive(DeltaFamily::Phi, -n),
            "psi family at {n}"
        );
    }
}

#[test]
fn delta_h2_consistency() {
    // Multiplicativity on [h_2, x_0] = [4]/2 c^{-1} x_2.
    let lhs = delta_h(2).commutator(&delta_recursive(DeltaFamily::X, 0));
    let s = ScalarQ::new(crate::scalar::q_int(4), LaurentPoly::from_int(2));
    let rhs = delta_recursive(DeltaFamily::X, 2).scale_central(&s, -2, -2);
    assert_eq!(lhs, rhs);
}

#[test]
fn alpha_series_printed_examples() {
    use crate::series::{gen_series, CentralScale, GenSeries};
    // alpha(Y^+(q^2 c z^{-1})) = X^-(q^2 c z)
    let d = 4;
    let lhs = alpha_series(
        &gen_series(GenSeries::YPlus, d)
            .scale_argument(&CentralScale::q_c(2, 2))
            .invert_z(),
    );
    let rhs = gen_series(GenSeries::XMinus, d).scale_argument(&CentralScale::q_c(2, 2));
    assert!(lhs.diff_on(&rhs, 1, d).unwrap().is_empty());

    // alpha(Psi(c^{3/2} z^{-1})) = Phi(c^{3/2} z)
    let lhs = alpha_series(
        &gen_series(GenSeries::Psi, d)
            .scale_argument(&CentralScale::q_c(0, 3))
            .invert_z(),
    );
    let rhs = gen_series(GenSeries::Phi, d).scale_argument(&CentralScale::q_c(0, 3));
    assert!(lhs.diff_on(&rhs, 0, d).unwrap().is_empty());
}

use hopfcalc_core::bellcalc::{
    bell, bell_polynomial, egf_exp, egf_log, hadamard, hadamard_via_coefficients, specialize,
    stirling2, EgfSeries, Poly,
};
use hopfcalc_core::bases::{Monomial, SeriesVar};
use hopfcalc_core::linalg::LinComb;
use hopfcalc_core::scalar::{int, Rational};

#[test]
fn bell_numbers_from_three_sources() {
    let expected = [1u64, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975];
    for (n, &b) in expected.iter().enumerate() {
        assert_eq!(bell(n), b.into());
        let sum: num_bigint::BigUint = (0..=n).map(|k| stirling2(n, k)).sum();
        assert_eq!(sum, b.into());
    }
}

#[test]
fn exp_of_y_times_exp_minus_one() {
    let y = LinComb::basis(Monomial::var('y'));
    let inner = EgfSeries::from_fn(8, |n| if n == 0 { Poly::zero() } else { y.clone() });
    let f = egf_exp(&inner).unwrap();
    for n in 0..=8 {
        assert_eq!(f.coeff(n), &bell_polynomial(n));
    }
}

#[test]
fn two_mode_factorization() {
    // L = (λ, 0, 0, ...) and V = (μ, 0, 0, ...) give exp(λμz)
    let lambda = int(3);
    let mu = Rational::new(2.into(), 7.into());
    let value = |v: &SeriesVar| match v {
        SeriesVar::L(1) => lambda.clone(),
        SeriesVar::V(1) => mu.clone(),
        _ => int(0),
    };
    let h = specialize(&hadamard_via_coefficients(6), value);
    let lm = &lambda * &mu;
    let expected = egf_exp(&EgfSeries::from_fn(6, |n| if n == 1 { lm.clone() } else { int(0) })).unwrap();
    assert_eq!(h, expected);
    let f = egf_exp(&EgfSeries::from_fn(6, |n| if n == 1 { lambda.clone() } else { int(0) })).unwrap();
    let g = egf_exp(&EgfSeries::from_fn(6, |n| if n == 1 { mu.clone() } else { int(0) })).unwrap();
    assert_eq!(hadamard(&f, &g).unwrap(), expected);
    assert_eq!(egf_log(&expected).unwrap().coeff(1), &lm);
}

//! Truncated exponential generating functions `Σ cₙ zⁿ/n!`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::bases::{Monomial, Variable};
use crate::error::{Error, Result};
use crate::linalg::LinComb;
use crate::scalar::Rational;

/// Commutative coefficient rings containing ℚ.
pub trait Coeff: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, r: &Rational) -> Self;
}

impl Coeff for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
}

/// Polynomials with rational coefficients.
pub type Poly<V> = LinComb<Monomial<V>>;

pub fn poly_mul<V: Variable>(x: &Poly<V>, y: &Poly<V>) -> Poly<V> {
    let mut out = Poly::zero();
    for (m, a) in x {
        for (n, b) in y {
            out.add_term(m.mul(n), a * b);
        }
    }
    out
}

/// Substitutes a rational value for every variable.
pub fn poly_eval<V: Variable, F: Fn(&V) -> Rational>(p: &Poly<V>, value: F) -> Rational {
    let mut total = <Rational as Zero>::zero();
    for (m, c) in p {
        let mut t = c.clone();
        for (v, &e) in m.exponents() {
            t *= num_traits::pow(value(v), e as usize);
        }
        total += t;
    }
    total
}

impl<V: Variable> Coeff for Poly<V> {
    fn zero() -> Self {
        LinComb::zero()
    }
    fn one() -> Self {
        LinComb::basis(Monomial::one())
    }
    fn is_zero(&self) -> bool {
        LinComb::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        poly_mul(self, other)
    }
    fn scale(&self, r: &Rational) -> Self {
        LinComb::scale(self, r)
    }
}

/// `c₀ + c₁ z + c₂ z²/2! + … + c_N z^N/N!`.
#[derive(Clone, PartialEq, Debug)]
pub struct EgfSeries<C> {
    coeffs: Vec<C>,
}

impl<C: Coeff> EgfSeries<C> {
    /// Series of order `coeffs.len() - 1`. Panics on an empty vector.
    pub fn new(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a series has at least a constant term");
        EgfSeries { coeffs }
    }

    pub fn from_fn<F: FnMut(usize) -> C>(order: usize, f: F) -> Self {
        EgfSeries::new((0..=order).map(f).collect())
    }

    /// `e^z`: every coefficient is one.
    pub fn exp_z(order: usize) -> Self {
        Self::from_fn(order, |_| C::one())
    }

    pub fn one(order: usize) -> Self {
        Self::from_fn(order, |n| if n == 0 { C::one() } else { C::zero() })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `zⁿ/n!`.
    pub fn coeff(&self, n: usize) -> &C {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn map<D: Coeff, F: FnMut(&C) -> D>(&self, f: F) -> EgfSeries<D> {
        EgfSeries::new(self.coeffs.iter().map(f).collect())
    }
}

impl<C: Coeff + fmt::Display> fmt::Display for EgfSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, c) in self.coeffs.iter().enumerate() {
            writeln!(f, "{n}: {c}")?;
        }
        Ok(())
    }
}

fn binomials(n: usize) -> Vec<Rational> {
    let mut row = vec![<Rational as One>::one()];
    for k in 1..=n {
        let prev = row[k - 1].clone();
        row.push(prev * Rational::from_integer(BigInt::from(n + 1 - k)) / Rational::from_integer(BigInt::from(k)));
    }
    row
}

fn same_order<C: Coeff, D: Coeff>(f: &EgfSeries<C>, g: &EgfSeries<D>) -> Result<usize> {
    if f.order() != g.order() {
        return Err(Error::OrderMismatch(f.order(), g.order()));
    }
    Ok(f.order())
}

/// Product of EGFs: `hₙ = Σⱼ C(n,j) fⱼ g_{n−j}`.
pub fn egf_mul<C: Coeff>(f: &EgfSeries<C>, g: &EgfSeries<C>) -> Result<EgfSeries<C>> {
    let order = same_order(f, g)?;
    Ok(EgfSeries::from_fn(order, |n| {
        let binom = binomials(n);
        (0..=n).fold(C::zero(), |acc, j| {
            acc.add(&f.coeffs[j].mul(&g.coeffs[n - j]).scale(&binom[j]))
        })
    }))
}

/// `exp(F)` for `F(0) = 0`, via `Wₙ = Σ_{k=1}^{n} C(n−1,k−1) Fₖ W_{n−k}`.
pub fn egf_exp<C: Coeff>(f: &EgfSeries<C>) -> Result<EgfSeries<C>> {
    if !f.coeffs[0].is_zero() {
        return Err(Error::NonzeroConstantTerm);
    }
    let mut w: Vec<C> = vec![C::one()];
    for n in 1..=f.order() {
        let binom = binomials(n - 1);
        let wn = (1..=n).fold(C::zero(), |acc, k| {
            acc.add(&f.coeffs[k].mul(&w[n - k]).scale(&binom[k - 1]))
        });
        w.push(wn);
    }
    Ok(EgfSeries::new(w))
}

/// Inverse of [`egf_exp`] on series with constant term one.
pub fn egf_log<C: Coeff>(w: &EgfSeries<C>) -> Result<EgfSeries<C>> {
    if w.coeffs[0] != C::one() {
        return Err(Error::NotUnitConstantTerm);
    }
    let mut f: Vec<C> = vec![C::zero()];
    for n in 1..=w.order() {
        let binom = binomials(n - 1);
        let known = (1..n).fold(C::zero(), |acc, k| {
            acc.add(&f[k].mul(&w.coeffs[n - k]).scale(&binom[k - 1]))
        });
        f.push(w.coeffs[n].add(&known.scale(&-<Rational as One>::one())));
    }
    Ok(EgfSeries::new(f))
}

/// Hadamard exponential product `Σ aₙ bₙ zⁿ/n!`.
pub fn hadamard<C: Coeff>(f: &EgfSeries<C>, g: &EgfSeries<C>) -> Result<EgfSeries<C>> {
    let order = same_order(f, g)?;
    Ok(EgfSeries::from_fn(order, |n| f.coeffs[n].mul(&g.coeffs[n])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bellcalc::numbers::bell_polynomial;
    use crate::scalar::{int, rat};
    use proptest::prelude::*;

    fn factorial(n: usize) -> Rational {
        (1..=n as i64).map(int).product()
    }

    #[test]
    fn mul_examples() {
        let e = EgfSeries::<Rational>::exp_z(8);
        let e2 = egf_mul(&e, &e).unwrap();
        for n in 0..=8 {
            assert_eq!(e2.coeff(n), &int(1 << n));
        }
        assert_eq!(egf_mul(&e, &EgfSeries::one(8)).unwrap(), e);
        let z = EgfSeries::from_fn(4, |n| if n == 1 { int(1) } else { int(0) });
        assert_eq!(egf_mul(&z, &z).unwrap().coeff(2), &int(2));
        assert_eq!(egf_mul(&z, &e), Err(Error::OrderMismatch(4, 8)));
    }

    #[test]
    fn exp_examples() {
        let z = EgfSeries::from_fn(6, |n| if n == 1 { int(1) } else { int(0) });
        assert_eq!(egf_exp(&z).unwrap(), EgfSeries::exp_z(6));
        assert_eq!(egf_exp(&EgfSeries::<Rational>::exp_z(3)), Err(Error::NonzeroConstantTerm));
        assert_eq!(egf_log(&z), Err(Error::NotUnitConstantTerm));
    }

    #[test]
    fn exp_of_y_times_exp_minus_one_gives_bell_polynomials() {
        let y: Poly<char> = LinComb::basis(Monomial::var('y'));
        let f = EgfSeries::from_fn(8, |n| if n == 0 { Poly::zero() } else { y.clone() });
        let w = egf_exp(&f).unwrap();
        for n in 0..=8 {
            assert_eq!(w.coeff(n), &bell_polynomial(n), "n = {n}");
        }
    }

    #[test]
    fn hadamard_examples() {
        let e = EgfSeries::<Rational>::exp_z(6);
        assert_eq!(hadamard(&e, &e).unwrap(), e);
        let f = EgfSeries::from_fn(6, |n| rat(n as i64 - 2, 3));
        assert_eq!(hadamard(&f, &e).unwrap(), f);
        let fact = EgfSeries::from_fn(6, factorial);
        let sq = hadamard(&fact, &fact).unwrap();
        for n in 0..=6 {
            assert_eq!(sq.coeff(n), &(factorial(n) * factorial(n)));
        }
    }

    /// Ordinary power series view: zⁿ coefficient is cₙ/n!, and exp is
    /// checked through its defining ODE W' = F' W in ordinary coefficients.
    #[test]
    fn exp_satisfies_derivative_identity() {
        let f = EgfSeries::from_fn(7, |n| if n == 0 { int(0) } else { rat(n as i64 * 3 - 5, 2) });
        let w = egf_exp(&f).unwrap();
        // In EGF coefficients, derivative is a left shift: W' = F'·W.
        let shift = |s: &EgfSeries<Rational>| EgfSeries::from_fn(s.order() - 1, |n| s.coeff(n + 1).clone());
        let trunc = |s: &EgfSeries<Rational>| EgfSeries::from_fn(s.order() - 1, |n| s.coeff(n).clone());
        assert_eq!(shift(&w), egf_mul(&shift(&f), &trunc(&w)).unwrap());
    }

    proptest! {
        #[test]
        fn log_inverts_exp(v in prop::collection::vec((-6i64..6, 1i64..5), 8)) {
            let f = EgfSeries::new(
                std::iter::once(int(0)).chain(v.into_iter().map(|(n, d)| rat(n, d))).collect(),
            );
            prop_assert_eq!(egf_log(&egf_exp(&f).unwrap()).unwrap(), f);
        }
    }
}

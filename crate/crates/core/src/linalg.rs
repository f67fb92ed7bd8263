//! Finitely supported linear combinations over an ordered basis, tensor
//! products, the Kronecker pairing and the convolution of linear maps.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::hopf::Bialgebra;
use crate::scalar::{format_rational, Rational};

/// A basis kind: any totally ordered, cloneable label.
pub trait Basis: Clone + Ord + fmt::Debug {}

impl<T: Clone + Ord + fmt::Debug> Basis for T {}

/// A finitely supported map from basis elements to rationals.
///
/// Zero coefficients are never stored, so structural equality is
/// mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LinComb<B: Ord> {
    terms: BTreeMap<B, Rational>,
}

impl<B: Ord> Default for LinComb<B> {
    fn default() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }
}

impl<B: Basis> LinComb<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis element `b` with coefficient one.
    pub fn basis(b: B) -> Self {
        Self::term(b, Rational::one())
    }

    pub fn term(b: B, c: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(b, c);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (B, Rational)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (b, c) in terms {
            out.add_term(b, c);
        }
        out
    }

    /// Adds `c·b`, pruning the entry if it cancels.
    pub fn add_term(&mut self, b: B, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Adds `c·other` in place.
    pub fn add_scaled(&mut self, c: &Rational, other: &LinComb<B>) {
        if c.is_zero() {
            return;
        }
        for (b, x) in &other.terms {
            self.add_term(b.clone(), c * x);
        }
    }

    pub fn coeff(&self, b: &B) -> Rational {
        self.terms.get(b).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing basis order.
    pub fn iter(&self) -> btree_map::Iter<'_, B, Rational> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &B> {
        self.terms.keys()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LinComb {
            terms: self.terms.iter().map(|(b, x)| (b.clone(), c * x)).collect(),
        }
    }

    /// Linear extension of a basis-level map `B → LinComb<C>`.
    pub fn flat_map<C: Basis, F>(&self, mut f: F) -> LinComb<C>
    where
        F: FnMut(&B) -> LinComb<C>,
    {
        let mut out = LinComb::zero();
        for (b, x) in &self.terms {
            out.add_scaled(x, &f(b));
        }
        out
    }

    /// Linear extension of a basis-to-basis map (e.g. a quotient projection).
    pub fn map_basis<C: Basis, F>(&self, mut f: F) -> LinComb<C>
    where
        F: FnMut(&B) -> C,
    {
        LinComb::from_terms(self.terms.iter().map(|(b, x)| (f(b), x.clone())))
    }

    /// Same as [`LinComb::map_basis`] for a fallible map.
    pub fn try_map_basis<C: Basis, E, F>(&self, mut f: F) -> Result<LinComb<C>, E>
    where
        F: FnMut(&B) -> Result<C, E>,
    {
        let mut out = LinComb::zero();
        for (b, x) in &self.terms {
            out.add_term(f(b)?, x.clone());
        }
        Ok(out)
    }
}

impl<B: Basis> FromIterator<(B, Rational)> for LinComb<B> {
    fn from_iter<I: IntoIterator<Item = (B, Rational)>>(iter: I) -> Self {
        LinComb::from_terms(iter)
    }
}

impl<'a, B: Basis> IntoIterator for &'a LinComb<B> {
    type Item = (&'a B, &'a Rational);
    type IntoIter = btree_map::Iter<'a, B, Rational>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<B: Basis> AddAssign<&LinComb<B>> for LinComb<B> {
    fn add_assign(&mut self, rhs: &LinComb<B>) {
        for (b, x) in &rhs.terms {
            self.add_term(b.clone(), x.clone());
        }
    }
}

impl<B: Basis> SubAssign<&LinComb<B>> for LinComb<B> {
    fn sub_assign(&mut self, rhs: &LinComb<B>) {
        for (b, x) in &rhs.terms {
            self.add_term(b.clone(), -x.clone());
        }
    }
}

impl<B: Basis> Add for &LinComb<B> {
    type Output = LinComb<B>;
    fn add(self, rhs: &LinComb<B>) -> LinComb<B> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<B: Basis> Add for LinComb<B> {
    type Output = LinComb<B>;
    fn add(mut self, rhs: LinComb<B>) -> LinComb<B> {
        self += &rhs;
        self
    }
}

impl<B: Basis> Sub for &LinComb<B> {
    type Output = LinComb<B>;
    fn sub(self, rhs: &LinComb<B>) -> LinComb<B> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<B: Basis> Sub for LinComb<B> {
    type Output = LinComb<B>;
    fn sub(mut self, rhs: LinComb<B>) -> LinComb<B> {
        self -= &rhs;
        self
    }
}

impl<B: Basis> Neg for LinComb<B> {
    type Output = LinComb<B>;
    fn neg(self) -> LinComb<B> {
        LinComb {
            terms: self.terms.into_iter().map(|(b, x)| (b, -x)).collect(),
        }
    }
}

impl<B: Basis + fmt::Display> fmt::Display for LinComb<B> {
    /// Canonical text: terms in basis order, `c*b` with `1*` omitted,
    /// `0` for the zero element.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (b, c)) in self.terms.iter().enumerate() {
            let negative = c < &Rational::zero();
            let magnitude = if negative { -c.clone() } else { c.clone() };
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if magnitude.is_one() {
                write!(f, "{b}")?;
            } else {
                write!(f, "{}*{b}", format_rational(&magnitude))?;
            }
        }
        Ok(())
    }
}

/// Basis of a tensor product, ordered lexicographically.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Tensor<L, R>(pub L, pub R);

impl<L: fmt::Display, R: fmt::Display> fmt::Display for Tensor<L, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (x) {}", self.0, self.1)
    }
}

/// `a·X + b·Y`.
pub fn lc_combine<B: Basis>(
    a: &Rational,
    x: &LinComb<B>,
    b: &Rational,
    y: &LinComb<B>,
) -> LinComb<B> {
    let mut out = x.scale(a);
    out.add_scaled(b, y);
    out
}

/// Bilinear tensor product `X ⊗ Y`.
pub fn lc_tensor<L: Basis, R: Basis>(x: &LinComb<L>, y: &LinComb<R>) -> LinComb<Tensor<L, R>> {
    let mut out = LinComb::zero();
    for (u, a) in x {
        for (v, b) in y {
            out.add_term(Tensor(u.clone(), v.clone()), a * b);
        }
    }
    out
}

/// The pairing in which the basis is orthonormal: `Σ_b X(b)·Y(b)`.
pub fn lc_pair<B: Basis>(x: &LinComb<B>, y: &LinComb<B>) -> Rational {
    let (small, large) = if x.len() <= y.len() { (x, y) } else { (y, x) };
    small
        .iter()
        .filter_map(|(b, c)| large.terms.get(b).map(|d| c * d))
        .fold(Rational::zero(), |acc, t| acc + t)
}

/// Applies `f ⊗ g` to a combination of pure tensors.
pub fn tensor_map<L, R, L2, R2, F, G>(
    x: &LinComb<Tensor<L, R>>,
    mut f: F,
    mut g: G,
) -> LinComb<Tensor<L2, R2>>
where
    L: Basis,
    R: Basis,
    L2: Basis,
    R2: Basis,
    F: FnMut(&L) -> LinComb<L2>,
    G: FnMut(&R) -> LinComb<R2>,
{
    let mut out = LinComb::zero();
    for (Tensor(u, v), c) in x {
        let fu = f(u);
        if fu.is_zero() {
            continue;
        }
        let t = lc_tensor(&fu, &g(v));
        out.add_scaled(c, &t);
    }
    out
}

type MapFn<B1, B2> = dyn Fn(&B1) -> LinComb<B2> + Send + Sync;

/// A linear map given by its action on basis elements.
pub struct LinMap<B1, B2: Ord> {
    action: Arc<MapFn<B1, B2>>,
}

impl<B1, B2: Ord> Clone for LinMap<B1, B2> {
    fn clone(&self) -> Self {
        LinMap {
            action: self.action.clone(),
        }
    }
}

impl<B1: Basis, B2: Basis> LinMap<B1, B2> {
    pub fn new<F>(f: F) -> Self
    where
        F: Fn(&B1) -> LinComb<B2> + Send + Sync + 'static,
    {
        LinMap {
            action: Arc::new(f),
        }
    }

    pub fn on_basis(&self, b: &B1) -> LinComb<B2> {
        (self.action)(b)
    }

    /// The unique linear extension.
    pub fn apply(&self, x: &LinComb<B1>) -> LinComb<B2> {
        x.flat_map(|b| self.on_basis(b))
    }
}

impl<B: Basis + Send + Sync + 'static> LinMap<B, B> {
    pub fn identity() -> Self {
        LinMap::new(|b: &B| LinComb::basis(b.clone()))
    }
}

impl<B1, B2: Ord> fmt::Debug for LinMap<B1, B2> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("LinMap")
    }
}

/// The convolution `f ∗ g = μ ∘ (f ⊗ g) ∘ Δ`.
pub fn convolve<A>(
    f: &LinMap<A::Basis, A::Basis>,
    g: &LinMap<A::Basis, A::Basis>,
    alg: &A,
) -> LinMap<A::Basis, A::Basis>
where
    A: Bialgebra + Clone + Send + Sync + 'static,
    A::Basis: Send + Sync + 'static,
{
    let (f, g, alg) = (f.clone(), g.clone(), alg.clone());
    LinMap::new(move |b| {
        let split = tensor_map(&alg.coproduct_basis(b), |u| f.on_basis(u), |v| g.on_basis(v));
        alg.multiply_tensor(&split)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};
    use proptest::prelude::*;

    fn lc(terms: &[(&str, i64)]) -> LinComb<String> {
        terms.iter().map(|(b, c)| (b.to_string(), int(*c))).collect()
    }

    #[test]
    fn combine_examples() {
        let one = int(1);
        assert_eq!(
            lc_combine(&one, &lc(&[("ab", 1)]), &one, &lc(&[("ba", 1)])),
            lc(&[("ab", 1), ("ba", 1)])
        );
        assert!(lc_combine(&one, &lc(&[("ab", 1)]), &int(-1), &lc(&[("ab", 1)])).is_zero());
        assert_eq!(
            lc_combine(&rat(2, 3), &lc(&[("a", 3)]), &int(0), &LinComb::zero()),
            lc(&[("a", 2)])
        );
    }

    #[test]
    fn tensor_examples() {
        let t = lc_tensor(&lc(&[("a", 1)]), &lc(&[("b", 1)]));
        assert_eq!(t, LinComb::basis(Tensor("a".to_string(), "b".to_string())));
        let t = lc_tensor(&lc(&[("a", 1), ("b", 1)]), &lc(&[("c", 2)]));
        assert_eq!(t.len(), 2);
        assert_eq!(t.coeff(&Tensor("b".into(), "c".into())), int(2));
        assert!(lc_tensor(&LinComb::<String>::zero(), &lc(&[("c", 1)])).is_zero());
    }

    #[test]
    fn pair_examples() {
        assert_eq!(lc_pair(&lc(&[("ab", 2)]), &lc(&[("ab", 3)])), int(6));
        assert_eq!(lc_pair(&lc(&[("ab", 1)]), &lc(&[("ba", 1)])), int(0));
        assert_eq!(
            lc_pair(&lc(&[("a", 1), ("b", 1)]), &lc(&[("a", 1), ("b", -1)])),
            int(0)
        );
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(lc(&[("ba", -1), ("ab", 1)]).to_string(), "ab - ba");
        assert_eq!(LinComb::<String>::zero().to_string(), "0");
        let x: LinComb<String> = [("a".to_string(), rat(-2, 3))].into_iter().collect();
        assert_eq!(x.to_string(), "-2/3*a");
    }

    fn arb_lc() -> impl Strategy<Value = LinComb<u8>> {
        prop::collection::vec((0u8..6, -5i64..=5, 1i64..=4), 0..6)
            .prop_map(|v| v.into_iter().map(|(b, n, d)| (b, rat(n, d))).collect())
    }

    proptest! {
        #[test]
        fn combine_is_a_vector_space(x in arb_lc(), y in arb_lc(), z in arb_lc()) {
            prop_assert_eq!(&x + &y, &y + &x);
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            prop_assert_eq!(&x + &LinComb::zero(), x.clone());
            prop_assert!((&x - &x).is_zero());
            prop_assert!(x.iter().all(|(_, c)| !c.is_zero()));
        }

        #[test]
        fn tensor_is_bilinear(x in arb_lc(), y in arb_lc(), z in arb_lc()) {
            prop_assert_eq!(lc_tensor(&x, &(&y + &z)), &lc_tensor(&x, &y) + &lc_tensor(&x, &z));
        }

        #[test]
        fn pairing_is_symmetric_and_positive(x in arb_lc(), y in arb_lc()) {
            prop_assert_eq!(lc_pair(&x, &y), lc_pair(&y, &x));
            if !x.is_zero() {
                prop_assert!(lc_pair(&x, &x) > Rational::zero());
            }
        }
    }
}

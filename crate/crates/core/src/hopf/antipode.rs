//! The antipode as the convolution inverse of the identity.
//!
//! On an element `x` of degree `n` the series
//! `S = Σ_k (−I⁺)^{∗k}`, with `(−I⁺)^{∗0} = η∘ε` and `I⁺` the projection
//! onto `ker ε` along the unit, is summed for `k = 0..=n`. When the reduced
//! coproduct is nilpotent in degree, the higher terms vanish and the sum is
//! exact. The truncated sum is then checked against
//! `Σ S(x₁)x₂ = Σ x₁S(x₂) = ε(x)·1`; failing that, there is no antipode.

use std::collections::{BTreeMap, BTreeSet};

use super::Bialgebra;
use crate::error::{Error, Result};
use crate::linalg::{LinComb, Tensor};

/// Memoized antipode evaluation for one bialgebra.
pub struct AntipodeCache<'a, A: Bialgebra> {
    alg: &'a A,
    powers: BTreeMap<(usize, A::Basis), LinComb<A::Basis>>,
    values: BTreeMap<A::Basis, LinComb<A::Basis>>,
    verified: BTreeSet<A::Basis>,
}

impl<'a, A: Bialgebra> AntipodeCache<'a, A> {
    pub fn new(alg: &'a A) -> Self {
        AntipodeCache {
            alg,
            powers: BTreeMap::new(),
            values: BTreeMap::new(),
            verified: BTreeSet::new(),
        }
    }

    /// `I⁺(b) = b − ε(b)·1`.
    fn reduced(&self, b: &A::Basis) -> LinComb<A::Basis> {
        let mut out = LinComb::basis(b.clone());
        out.add_term(self.alg.unit(), -self.alg.counit_basis(b));
        out
    }

    /// `(−I⁺)^{∗k}(b)`.
    fn power(&mut self, k: usize, b: &A::Basis) -> LinComb<A::Basis> {
        if k == 0 {
            return self.alg.one().scale(&self.alg.counit_basis(b));
        }
        let key = (k, b.clone());
        if let Some(hit) = self.powers.get(&key) {
            return hit.clone();
        }
        let mut out = LinComb::zero();
        for (Tensor(x1, x2), c) in &self.alg.coproduct_basis(b) {
            let right = self.reduced(x2);
            if right.is_zero() {
                continue;
            }
            let left = self.power(k - 1, x1);
            if left.is_zero() {
                continue;
            }
            out.add_scaled(&-c.clone(), &self.alg.product(&left, &right));
        }
        self.powers.insert(key, out.clone());
        out
    }

    /// The truncated series on `b`, without verification.
    fn series(&mut self, b: &A::Basis) -> Result<LinComb<A::Basis>> {
        if let Some(hit) = self.values.get(b) {
            return Ok(hit.clone());
        }
        let value = match self.alg.closed_antipode(b) {
            Some(s) => s,
            None => {
                let n = self.alg.degree(b).ok_or_else(|| {
                    Error::NoAntipode(format!("{} carries no connected grading", self.alg.name()))
                })?;
                let mut sum = LinComb::zero();
                for k in 0..=n {
                    sum += &self.power(k, b);
                }
                sum
            }
        };
        self.values.insert(b.clone(), value.clone());
        Ok(value)
    }

    /// `S(b)`, verified against the two-sided antipode identity.
    pub fn basis(&mut self, b: &A::Basis) -> Result<LinComb<A::Basis>> {
        let value = self.series(b)?;
        if self.verified.contains(b) {
            return Ok(value);
        }
        let delta = self.alg.coproduct_basis(b);
        let mut images = BTreeMap::new();
        for (Tensor(x1, x2), _) in &delta {
            for x in [x1, x2] {
                if !images.contains_key(x) {
                    images.insert(x.clone(), self.series(x)?);
                }
            }
        }
        if !antipode_identity_holds(self.alg, b, |x| images[x].clone()) {
            return Err(Error::NoAntipode(format!(
                "the antipode series of {} does not terminate on {b:?}",
                self.alg.name()
            )));
        }
        self.verified.insert(b.clone());
        Ok(value)
    }

    pub fn apply(&mut self, x: &LinComb<A::Basis>) -> Result<LinComb<A::Basis>> {
        let mut out = LinComb::zero();
        for (b, c) in x {
            out.add_scaled(c, &self.basis(b)?);
        }
        Ok(out)
    }
}

/// `S(X)` by the truncated series (or the closed form for group algebras).
pub fn antipode<A: Bialgebra>(alg: &A, x: &LinComb<A::Basis>) -> Result<LinComb<A::Basis>> {
    AntipodeCache::new(alg).apply(x)
}

/// `Σ S(b₁)·b₂ = Σ b₁·S(b₂) = ε(b)·1` for a candidate map `s`.
pub fn antipode_identity_holds<A, F>(alg: &A, b: &A::Basis, mut s: F) -> bool
where
    A: Bialgebra,
    F: FnMut(&A::Basis) -> LinComb<A::Basis>,
{
    let delta = alg.coproduct_basis(b);
    let expected = alg.one().scale(&alg.counit_basis(b));
    let mut left = LinComb::zero();
    let mut right = LinComb::zero();
    for (Tensor(x1, x2), c) in &delta {
        left.add_scaled(c, &alg.product(&s(x1), &LinComb::basis(x2.clone())));
        right.add_scaled(c, &alg.product(&LinComb::basis(x1.clone()), &s(x2)));
    }
    left == expected && right == expected
}

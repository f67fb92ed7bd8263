//! Finite-dimensional matrix representations and their tensor products
//! through the coproduct.

use std::fmt;
use std::sync::Arc;

use super::check::check_bialgebra;
use super::Bialgebra;
use crate::bases::{Alphabet, FiniteGroup, GroupElem, Word};
use crate::error::{Error, Result};
use crate::linalg::{Basis, LinComb, Tensor};
use crate::scalar::{CycOmega, Rational, Scalar};

/// Dense square matrix, row-major.
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<S> {
    dim: usize,
    entries: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zero(dim: usize) -> Self {
        Matrix {
            dim,
            entries: vec![S::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = S::one();
        }
        m
    }

    pub fn diagonal(diag: Vec<S>) -> Self {
        let dim = diag.len();
        let mut m = Self::zero(dim);
        for (i, d) in diag.into_iter().enumerate() {
            m.entries[i * dim + i] = d;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::MalformedMatrix("matrix must be square".into()));
        }
        Ok(Matrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.entries[i * self.dim + j]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|x| x.is_zero())
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Matrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let n = self.dim;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let t = a.clone() * other.get(k, j).clone();
                    let e = &mut out.entries[i * n + j];
                    *e = e.clone() + t;
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let c = S::from_rational(c);
        Matrix {
            dim: self.dim,
            entries: self.entries.iter().map(|x| c.clone() * x.clone()).collect(),
        }
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Self) -> Self {
        let (n, m) = (self.dim, other.dim);
        let dim = n * m;
        let mut out = Self::zero(dim);
        for i in 0..n {
            for j in 0..n {
                for k in 0..m {
                    for l in 0..m {
                        out.entries[(i * m + k) * dim + (j * m + l)] =
                            self.get(i, j).clone() * other.get(k, l).clone();
                    }
                }
            }
        }
        out
    }
}

impl Matrix<Rational> {
    /// The same matrix over a larger scalar ring.
    pub fn lift<T: Scalar>(&self) -> Matrix<T> {
        Matrix {
            dim: self.dim,
            entries: self.entries.iter().map(T::from_rational).collect(),
        }
    }
}

impl<S: fmt::Display> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.dim {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.dim {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.entries[i * self.dim + j])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// A representation given on basis elements; extended linearly by
/// [`rep_apply`].
pub trait MatrixRep<B> {
    type Scalar: Scalar;
    fn dim(&self) -> usize;
    fn image(&self, b: &B) -> Result<Matrix<Self::Scalar>>;
}

/// `ρ(X) = Σ X(b)·ρ(b)`.
pub fn rep_apply<B, R: MatrixRep<B>>(rho: &R, x: &LinComb<B>) -> Result<Matrix<R::Scalar>>
where
    B: Basis,
{
    let mut out = Matrix::zero(rho.dim());
    for (b, c) in x {
        let m = rho.image(b)?;
        if m.dim() != rho.dim() {
            return Err(Error::DimensionMismatch(rho.dim(), m.dim()));
        }
        out = out.add(&m.scale(c))?;
    }
    Ok(out)
}

/// A group homomorphism `G → GL_n`, validated on the full table.
#[derive(Clone, Debug)]
pub struct GroupRep<S> {
    group: Arc<FiniteGroup>,
    dim: usize,
    images: Vec<Matrix<S>>,
}

impl<S: Scalar> GroupRep<S> {
    pub fn new(group: Arc<FiniteGroup>, images: Vec<Matrix<S>>) -> Result<Self> {
        if images.len() != group.order() {
            return Err(Error::NotARepresentation(format!(
                "{} matrices for a group of order {}",
                images.len(),
                group.order()
            )));
        }
        let dim = images.first().map_or(0, |m| m.dim());
        for m in &images {
            if m.dim() != dim {
                return Err(Error::DimensionMismatch(dim, m.dim()));
            }
        }
        if images[group.identity()] != Matrix::identity(dim) {
            return Err(Error::NotARepresentation("identity is not sent to I".into()));
        }
        for g in 0..group.order() {
            for h in 0..group.order() {
                if images[group.mul(g, h)] != images[g].mul(&images[h])? {
                    return Err(Error::NotARepresentation(format!(
                        "ρ({}·{}) ≠ ρ({})ρ({})",
                        group.element_name(g),
                        group.element_name(h),
                        group.element_name(g),
                        group.element_name(h)
                    )));
                }
            }
        }
        Ok(GroupRep { group, dim, images })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }
}

impl GroupRep<CycOmega> {
    /// `C3 → GL_2(ℚ(ω))`, `c^k ↦ diag(ω^k, ω^{2k})`: the rotation by 2π/3
    /// in diagonal form.
    pub fn c3_omega() -> Self {
        let group = Arc::new(FiniteGroup::cyclic(3).expect("order 3"));
        let images = (0..3)
            .map(|k| Matrix::diagonal(vec![CycOmega::omega_pow(k), CycOmega::omega_pow(2 * k)]))
            .collect();
        GroupRep::new(group, images).expect("c3 model is a representation")
    }
}

impl GroupRep<Rational> {
    /// The left regular representation, `ρ(g) e_h = e_{gh}`.
    pub fn regular(group: Arc<FiniteGroup>) -> Self {
        let n = group.order();
        let images = (0..n)
            .map(|g| {
                let mut m = Matrix::zero(n);
                for h in 0..n {
                    m.entries[group.mul(g, h) * n + h] = Rational::from_integer(1.into());
                }
                m
            })
            .collect();
        GroupRep::new(group, images).expect("regular representation")
    }

    pub fn lift<T: Scalar>(&self) -> GroupRep<T> {
        GroupRep {
            group: self.group.clone(),
            dim: self.dim,
            images: self.images.iter().map(Matrix::lift).collect(),
        }
    }
}

impl<S: Scalar> MatrixRep<GroupElem> for GroupRep<S> {
    type Scalar = S;

    fn dim(&self) -> usize {
        self.dim
    }

    fn image(&self, g: &GroupElem) -> Result<Matrix<S>> {
        if g.group().name() != self.group.name() {
            return Err(Error::NotARepresentation(format!(
                "{g} is not in {}",
                self.group.name()
            )));
        }
        Ok(self.images[g.index()].clone())
    }
}

/// Representation of a free algebra determined by the images of letters.
#[derive(Clone, Debug)]
pub struct WordRep<S> {
    dim: usize,
    letters: Vec<(char, Matrix<S>)>,
}

impl<S: Scalar> WordRep<S> {
    pub fn new(letters: Vec<(char, Matrix<S>)>) -> Result<Self> {
        let dim = letters.first().map_or(0, |(_, m)| m.dim());
        for (_, m) in &letters {
            if m.dim() != dim {
                return Err(Error::DimensionMismatch(dim, m.dim()));
            }
        }
        Ok(WordRep { dim, letters })
    }

    pub fn alphabet(&self) -> Alphabet {
        Alphabet::new(self.letters.iter().map(|(c, _)| *c))
    }
}

impl<S: Scalar> MatrixRep<Word> for WordRep<S> {
    type Scalar = S;

    fn dim(&self) -> usize {
        self.dim
    }

    fn image(&self, w: &Word) -> Result<Matrix<S>> {
        let mut out = Matrix::identity(self.dim);
        for c in w.letters() {
            let m = self
                .letters
                .iter()
                .find(|(l, _)| l == c)
                .map(|(_, m)| m)
                .ok_or(Error::UnknownLetter(*c))?;
            out = out.mul(m)?;
        }
        Ok(out)
    }
}

/// `ρ1 ⊠ ρ2 = (ρ1 ⊗ ρ2) ∘ Δ`.
#[derive(Clone, Debug)]
pub struct TensorRep<A, R1, R2> {
    alg: A,
    left: R1,
    right: R2,
}

impl<A, R1, R2, S> MatrixRep<A::Basis> for TensorRep<A, R1, R2>
where
    A: Bialgebra,
    S: Scalar,
    R1: MatrixRep<A::Basis, Scalar = S>,
    R2: MatrixRep<A::Basis, Scalar = S>,
{
    type Scalar = S;

    fn dim(&self) -> usize {
        self.left.dim() * self.right.dim()
    }

    fn image(&self, b: &A::Basis) -> Result<Matrix<S>> {
        let mut out = Matrix::zero(self.dim());
        for (Tensor(x, y), c) in &self.alg.coproduct_basis(b) {
            let m = self.left.image(x)?.kron(&self.right.image(y)?);
            out = out.add(&m.scale(c))?;
        }
        Ok(out)
    }
}

/// Builds `ρ1 ⊠ ρ2`, after checking on `corpus` that `Δ` is an algebra
/// morphism (without which the result need not be a representation).
pub fn rep_tensor<A, R1, R2, S>(
    left: R1,
    right: R2,
    alg: &A,
    corpus: &[A::Basis],
) -> Result<TensorRep<A, R1, R2>>
where
    A: Bialgebra + Clone,
    S: Scalar,
    R1: MatrixRep<A::Basis, Scalar = S>,
    R2: MatrixRep<A::Basis, Scalar = S>,
{
    let report = check_bialgebra(alg, corpus);
    if !report.morphism.passes() {
        return Err(Error::NotAMorphism(
            report.morphism.first_failure.unwrap_or_else(|| alg.name()),
        ));
    }
    Ok(TensorRep {
        alg: alg.clone(),
        left,
        right,
    })
}

/// Checks `ρ(1) = I` and `ρ(xy) = ρ(x)ρ(y)` on all pairs from `corpus`.
pub fn check_representation<A, R>(rho: &R, alg: &A, corpus: &[A::Basis]) -> Result<()>
where
    A: Bialgebra,
    R: MatrixRep<A::Basis>,
{
    if rho.image(&alg.unit())? != Matrix::identity(rho.dim()) {
        return Err(Error::NotARepresentation("ρ(1) ≠ I".into()));
    }
    let images = corpus
        .iter()
        .map(|x| rho.image(x))
        .collect::<Result<Vec<_>>>()?;
    for (i, x) in corpus.iter().enumerate() {
        for (j, y) in corpus.iter().enumerate() {
            let lhs = rep_apply(rho, &alg.product_basis(x, y))?;
            if lhs != images[i].mul(&images[j])? {
                return Err(Error::NotARepresentation(format!("ρ({x:?}·{y:?}) ≠ ρ({x:?})ρ({y:?})")));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{FreeConcatUnshuffle, FreeGrouplike, GroupAlgebra};
    use crate::scalar::int;

    fn one_plus_c_plus_c2(alg: &GroupAlgebra) -> LinComb<GroupElem> {
        alg.elements().into_iter().map(|g| (g, int(1))).collect()
    }

    #[test]
    fn c3_model_kills_the_norm_element() {
        let rho = GroupRep::c3_omega();
        let alg = GroupAlgebra { group: rho.group().clone() };
        assert!(rep_apply(&rho, &one_plus_c_plus_c2(&alg)).unwrap().is_zero());
        assert_eq!(rep_apply(&rho, &alg.one()).unwrap(), Matrix::identity(2));
        let reg = GroupRep::regular(alg.group.clone());
        let m = rep_apply(&reg, &one_plus_c_plus_c2(&alg)).unwrap();
        assert_eq!(m.to_string(), "[[1,1,1],[1,1,1],[1,1,1]]");
    }

    #[test]
    fn tensor_square_of_c3_model() {
        let rho = GroupRep::c3_omega();
        let alg = GroupAlgebra { group: rho.group().clone() };
        let t = rep_tensor(rho.clone(), rho, &alg, &alg.elements()).unwrap();
        let c = alg.by_name("c").unwrap();
        let w = CycOmega::omega_pow;
        assert_eq!(t.image(&c).unwrap(), Matrix::diagonal(vec![w(2), w(3), w(3), w(4)]));
        check_representation(&t, &alg, &alg.elements()).unwrap();
    }

    #[test]
    fn primitive_coproduct_acts_as_a_derivation() {
        let alg = FreeConcatUnshuffle::new(Alphabet::new("a".chars()), int(0));
        let n = Matrix::<Rational>::from_rows(vec![vec![int(0), int(1)], vec![int(0), int(0)]]).unwrap();
        let r = WordRep::new(vec![('a', n.clone())]).unwrap();
        let t = rep_tensor(r.clone(), r, &alg, &alg.corpus(3)).unwrap();
        let i = Matrix::identity(2);
        let expected = n.kron(&i).add(&i.kron(&n)).unwrap();
        assert_eq!(t.image(&Word::from("a")).unwrap(), expected);
        check_representation(&t, &alg, &alg.corpus(3)).unwrap();
    }

    #[test]
    fn grouplike_letters_give_scalar_kronecker() {
        let alg = FreeGrouplike { alphabet: Alphabet::new("a".chars()) };
        let r = WordRep::new(vec![('a', Matrix::diagonal(vec![int(3)]))]).unwrap();
        let s = WordRep::new(vec![('a', Matrix::diagonal(vec![int(5)]))]).unwrap();
        let t = rep_tensor(r, s, &alg, &alg.corpus(3)).unwrap();
        assert_eq!(t.image(&Word::from("a")).unwrap(), Matrix::diagonal(vec![int(15)]));
    }

    #[test]
    fn invalid_group_rep_is_rejected() {
        let group = Arc::new(FiniteGroup::cyclic(2).unwrap());
        let bad = vec![Matrix::identity(1), Matrix::diagonal(vec![int(2)])];
        assert!(matches!(GroupRep::new(group, bad), Err(Error::NotARepresentation(_))));
    }
}

//! Bialgebra and Hopf algebra structures: the common interface, the
//! concrete instances, the antipode, duality and representation checks.

mod antipode;
mod check;
mod infiltration;
mod instances;
mod rep;

pub use antipode::{antipode, antipode_identity_holds, AntipodeCache};
pub use check::{check_bialgebra, check_grading, BialgebraReport, Suite, SuiteResult};
pub use infiltration::{duality_check, duality_sides, infiltration, unshuffle_q};
pub use instances::{
    ConcatDeconcat, Diag, FreeConcatUnshuffle, FreeGrouplike, GroupAlgebra, LDiag,
    PolyBinomial, ShuffleDeconcat, SwapCoproduct, TraceUnshuffle, DIAGRAM_CORPUS_ROWS,
};
pub use rep::{
    check_representation, rep_apply, rep_tensor, GroupRep, Matrix, MatrixRep, TensorRep, WordRep,
};

use crate::linalg::{lc_tensor, Basis, LinComb, Tensor};
use crate::scalar::Rational;

/// `(A, ·, 1, Δ, ε)` given on a basis, with optional grading.
///
/// Linear extensions are provided as default methods.
pub trait Bialgebra {
    type Basis: Basis;

    fn unit(&self) -> Self::Basis;
    fn product_basis(&self, x: &Self::Basis, y: &Self::Basis) -> LinComb<Self::Basis>;
    fn coproduct_basis(&self, x: &Self::Basis) -> LinComb<Tensor<Self::Basis, Self::Basis>>;
    fn counit_basis(&self, x: &Self::Basis) -> Rational;

    /// Degree of a basis element, if the instance carries a grading with
    /// the unit alone in degree zero.
    fn degree(&self, _x: &Self::Basis) -> Option<usize> {
        None
    }

    /// Whether the product is degree-additive under [`Bialgebra::degree`].
    fn product_is_graded(&self) -> bool {
        true
    }

    /// Whether every coproduct term has degrees summing to the input degree.
    fn coproduct_is_graded(&self) -> bool {
        true
    }

    /// A closed-form antipode, used instead of the series when present.
    fn closed_antipode(&self, _x: &Self::Basis) -> Option<LinComb<Self::Basis>> {
        None
    }

    /// Name used in reports.
    fn name(&self) -> String;

    /// Basis elements up to the given degree (all of them when ungraded
    /// and finite), used by the property suites.
    fn corpus(&self, max_degree: usize) -> Vec<Self::Basis>;

    /// Suites this structure is known to fail.
    fn known_failures(&self) -> Vec<Suite> {
        Vec::new()
    }

    fn one(&self) -> LinComb<Self::Basis> {
        LinComb::basis(self.unit())
    }

    fn product(&self, x: &LinComb<Self::Basis>, y: &LinComb<Self::Basis>) -> LinComb<Self::Basis> {
        let mut out = LinComb::zero();
        for (u, a) in x {
            for (v, b) in y {
                out.add_scaled(&(a * b), &self.product_basis(u, v));
            }
        }
        out
    }

    fn coproduct(&self, x: &LinComb<Self::Basis>) -> LinComb<Tensor<Self::Basis, Self::Basis>> {
        x.flat_map(|b| self.coproduct_basis(b))
    }

    fn counit(&self, x: &LinComb<Self::Basis>) -> Rational {
        x.iter()
            .map(|(b, c)| c * self.counit_basis(b))
            .fold(Rational::from_integer(0.into()), |acc, t| acc + t)
    }

    /// `μ : A ⊗ A → A`.
    fn multiply_tensor(&self, x: &LinComb<Tensor<Self::Basis, Self::Basis>>) -> LinComb<Self::Basis> {
        x.flat_map(|Tensor(u, v)| self.product_basis(u, v))
    }

    /// Componentwise product on `A ⊗ A`.
    fn tensor_product(
        &self,
        x: &LinComb<Tensor<Self::Basis, Self::Basis>>,
        y: &LinComb<Tensor<Self::Basis, Self::Basis>>,
    ) -> LinComb<Tensor<Self::Basis, Self::Basis>> {
        let mut out = LinComb::zero();
        for (Tensor(x1, x2), a) in x {
            for (Tensor(y1, y2), b) in y {
                let t = lc_tensor(&self.product_basis(x1, y1), &self.product_basis(x2, y2));
                out.add_scaled(&(a * b), &t);
            }
        }
        out
    }
}

//! Exact computation with combinatorial bialgebras and Hopf algebras:
//! sparse rational linear combinations over words, monomials, traces, group
//! elements and bipartite diagrams, their products, coproducts and
//! antipodes, plus set-partition and exponential-generating-function tools.

pub mod bases;
pub mod bellcalc;
pub mod error;
pub mod hopf;
pub mod linalg;
pub mod scalar;

pub use error::{Error, Result};
pub use linalg::{LinComb, Tensor};
pub use scalar::{CycOmega, Rational};

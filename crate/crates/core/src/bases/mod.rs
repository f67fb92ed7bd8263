//! Basis kinds: words, commutative monomials, traces, finite-group elements
//! and labelled or unlabelled diagrams.

mod diagram;
mod group;
mod monomial;
mod trace;
mod word;

pub use diagram::{
    diag_canonical, diag_canonical_bounded, diagram_from_partitions, ldiag_concat, ldiag_restrict,
    ldiagrams_up_to, spot_types, Diagram, LabelledDiagram, DEFAULT_CANON_BOUND,
};
pub use group::{FiniteGroup, GroupElem};
pub use monomial::{Monomial, SeriesVar, Variable};
pub use trace::{lex_normal_form, trace_normal_form, CommutationGraph, TraceWord};
pub use word::{subword, Alphabet, Word};

#[cfg(test)]
pub(crate) use trace::tests::swap_class;

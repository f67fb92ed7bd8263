//! How each algebra reads its basis elements, and the algebra selector.

use std::fmt;
use std::sync::Arc;

use hopfcalc_core::bases::{
    diag_canonical, Alphabet, CommutationGraph, Diagram, FiniteGroup, LabelledDiagram, Monomial,
    Word,
};
use hopfcalc_core::hopf::{
    Bialgebra, ConcatDeconcat, Diag, FreeConcatUnshuffle, FreeGrouplike, GroupAlgebra, LDiag,
    PolyBinomial, ShuffleDeconcat, SwapCoproduct, TraceUnshuffle,
};
use hopfcalc_core::scalar::Rational;
use hopfcalc_core::Error;

use crate::expr::ExprError;

/// A bialgebra with a text syntax for its basis.
pub trait Surface: Bialgebra<Basis: fmt::Display + Send + Sync + 'static> + Clone + Send + Sync + 'static {
    fn parse_atom(&self, text: &str, pos: usize) -> Result<Self::Basis, ExprError>;
}

fn word_atom(alphabet: &Alphabet, text: &str, pos: usize) -> Result<Word, ExprError> {
    if let Some(i) = text.find(|c: char| !c.is_alphabetic()) {
        return Err(ExprError::at(pos + i, "words are made of single letters"));
    }
    Ok(alphabet.word(text)?)
}

macro_rules! word_surface {
    ($($t:ty),*) => {$(
        impl Surface for $t {
            fn parse_atom(&self, text: &str, pos: usize) -> Result<Word, ExprError> {
                word_atom(&self.alphabet, text, pos)
            }
        }
    )*};
}

word_surface!(FreeConcatUnshuffle, ShuffleDeconcat, ConcatDeconcat, FreeGrouplike);

impl Surface for SwapCoproduct {
    fn parse_atom(&self, text: &str, pos: usize) -> Result<Word, ExprError> {
        word_atom(&Alphabet::new("ab".chars()), text, pos)
    }
}

impl Surface for PolyBinomial {
    /// `a^2b`, `ab^3c`; repeated letters multiply.
    fn parse_atom(&self, text: &str, pos: usize) -> Result<Monomial<char>, ExprError> {
        let chars: Vec<char> = text.chars().collect();
        let mut m = Monomial::one();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            if !c.is_alphabetic() {
                return Err(ExprError::at(pos + i, "expected a letter"));
            }
            if !self.alphabet.contains(c) {
                return Err(Error::UnknownLetter(c).into());
            }
            i += 1;
            let mut e = 1u32;
            if i < chars.len() && chars[i] == '^' {
                i += 1;
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                e = digits
                    .parse()
                    .map_err(|_| ExprError::at(pos + start, "expected an exponent"))?;
            }
            m = m.mul(&Monomial::power(c, e));
        }
        Ok(m)
    }
}

impl Surface for TraceUnshuffle {
    fn parse_atom(&self, text: &str, pos: usize) -> Result<Self::Basis, ExprError> {
        Ok(self.trace(&word_atom(&self.alphabet, text, pos)?))
    }
}

impl Surface for GroupAlgebra {
    fn parse_atom(&self, text: &str, pos: usize) -> Result<Self::Basis, ExprError> {
        self.by_name(text).ok_or_else(|| {
            ExprError::at(pos, format!("'{text}' is not an element of {}", self.group.name()))
        })
    }
}

fn matrix_atom(text: &str, pos: usize) -> Result<LabelledDiagram, ExprError> {
    if !text.starts_with('[') {
        return Err(ExprError::at(pos, "expected a matrix [[...],...]"));
    }
    Ok(text.parse::<LabelledDiagram>()?)
}

impl Surface for LDiag {
    fn parse_atom(&self, text: &str, pos: usize) -> Result<LabelledDiagram, ExprError> {
        matrix_atom(text, pos)
    }
}

impl Surface for Diag {
    fn parse_atom(&self, text: &str, pos: usize) -> Result<Diagram, ExprError> {
        Ok(diag_canonical(&matrix_atom(text, pos)?)?)
    }
}

/// Parses `"ac,bd"` into commuting pairs.
pub fn parse_theta(text: &str) -> Result<CommutationGraph, String> {
    let mut pairs = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let cs: Vec<char> = part.chars().collect();
        if cs.len() != 2 || !cs.iter().all(|c| c.is_alphabetic()) {
            return Err(format!("'{part}' is not a pair of letters"));
        }
        pairs.push((cs[0], cs[1]));
    }
    CommutationGraph::new(pairs).map_err(|e| e.to_string())
}

/// Every algebra selectable with `--alg`.
#[derive(Clone, Debug)]
pub enum Algebra {
    FreeQ(FreeConcatUnshuffle),
    ShuffleQ(ShuffleDeconcat),
    Poly(PolyBinomial),
    Trace(TraceUnshuffle),
    Group(GroupAlgebra),
    FreeGrouplike(FreeGrouplike),
    LDiag(LDiag),
    Diag(Diag),
    ConcatDeconcat(ConcatDeconcat),
    Swap(SwapCoproduct),
}

pub const ALGEBRA_NAMES: &[&str] = &[
    "free-q",
    "shuffle-q",
    "poly",
    "trace",
    "group",
    "free-grouplike",
    "ldiag",
    "diag",
    "concat-deconcat",
    "swap",
];

/// Parameters shared by the algebra constructors.
#[derive(Clone, Debug)]
pub struct AlgebraParams {
    pub alphabet: String,
    pub q: Rational,
    pub theta: String,
    pub group: String,
}

impl Algebra {
    pub fn build(name: &str, p: &AlgebraParams) -> Result<Algebra, String> {
        let alphabet = || Alphabet::new(p.alphabet.chars());
        Ok(match name {
            "free-q" => Algebra::FreeQ(FreeConcatUnshuffle::new(alphabet(), p.q.clone())),
            "shuffle-q" => Algebra::ShuffleQ(ShuffleDeconcat::new(alphabet(), p.q.clone())),
            "poly" => Algebra::Poly(PolyBinomial { alphabet: alphabet() }),
            "trace" => {
                let graph = parse_theta(&p.theta)?;
                let letters = p.alphabet.chars().chain(graph.letters());
                Algebra::Trace(TraceUnshuffle::new(Alphabet::new(letters), graph))
            }
            "group" => Algebra::Group(GroupAlgebra {
                group: Arc::new(FiniteGroup::by_name(&p.group).map_err(|e| e.to_string())?),
            }),
            "free-grouplike" => Algebra::FreeGrouplike(FreeGrouplike { alphabet: alphabet() }),
            "ldiag" => Algebra::LDiag(LDiag),
            "diag" => Algebra::Diag(Diag),
            "concat-deconcat" => Algebra::ConcatDeconcat(ConcatDeconcat { alphabet: alphabet() }),
            "swap" => Algebra::Swap(SwapCoproduct),
            other => {
                return Err(format!(
                    "unknown algebra '{other}' (expected one of {})",
                    ALGEBRA_NAMES.join(", ")
                ))
            }
        })
    }
}

/// Runs `$body` with `$a` bound to the concrete algebra inside `$alg`.
#[macro_export]
macro_rules! with_algebra {
    ($alg:expr, $a:ident => $body:expr) => {
        match $alg {
            $crate::surface::Algebra::FreeQ($a) => $body,
            $crate::surface::Algebra::ShuffleQ($a) => $body,
            $crate::surface::Algebra::Poly($a) => $body,
            $crate::surface::Algebra::Trace($a) => $body,
            $crate::surface::Algebra::Group($a) => $body,
            $crate::surface::Algebra::FreeGrouplike($a) => $body,
            $crate::surface::Algebra::LDiag($a) => $body,
            $crate::surface::Algebra::Diag($a) => $body,
            $crate::surface::Algebra::ConcatDeconcat($a) => $body,
            $crate::surface::Algebra::Swap($a) => $body,
        }
    };
}

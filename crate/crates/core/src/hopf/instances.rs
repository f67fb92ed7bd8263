//! Concrete bialgebras on words, monomials, traces, group elements and
//! diagrams.

use std::collections::BTreeSet;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use super::check::Suite;
use super::infiltration::{infiltration, unshuffle_q};
use super::Bialgebra;
use crate::bases::{
    diag_canonical_bounded, ldiag_concat, ldiagrams_up_to, Alphabet, CommutationGraph, Diagram,
    FiniteGroup, GroupElem, LabelledDiagram, Monomial, TraceWord, Word,
};
use crate::linalg::{LinComb, Tensor};
use crate::scalar::{format_rational, Rational};

fn indicator(b: bool) -> Rational {
    if b {
        Rational::one()
    } else {
        Rational::zero()
    }
}

/// `Σ_{uv=w} u ⊗ v`.
fn deconcatenation(w: &Word) -> LinComb<Tensor<Word, Word>> {
    let l = w.letters();
    (0..=l.len())
        .map(|i| {
            (
                Tensor(Word::new(l[..i].to_vec()), Word::new(l[i..].to_vec())),
                Rational::one(),
            )
        })
        .collect()
}

/// Free algebra with concatenation and the q-deformed unshuffle
/// `Δ(a) = a⊗1 + 1⊗a + q·a⊗a`; at `q = 0` this is the primitive coproduct.
#[derive(Clone, Debug)]
pub struct FreeConcatUnshuffle {
    pub alphabet: Alphabet,
    pub q: Rational,
}

impl FreeConcatUnshuffle {
    pub fn new(alphabet: Alphabet, q: Rational) -> Self {
        FreeConcatUnshuffle { alphabet, q }
    }
}

impl Bialgebra for FreeConcatUnshuffle {
    type Basis = Word;

    fn unit(&self) -> Word {
        Word::empty()
    }
    fn product_basis(&self, x: &Word, y: &Word) -> LinComb<Word> {
        LinComb::basis(x.concat(y))
    }
    fn coproduct_basis(&self, x: &Word) -> LinComb<Tensor<Word, Word>> {
        unshuffle_q(x, &self.q)
    }
    fn counit_basis(&self, x: &Word) -> Rational {
        indicator(x.is_empty())
    }
    fn degree(&self, x: &Word) -> Option<usize> {
        Some(x.len())
    }
    fn coproduct_is_graded(&self) -> bool {
        self.q.is_zero()
    }
    fn name(&self) -> String {
        format!("free-q(q={})", format_rational(&self.q))
    }
    fn corpus(&self, max_degree: usize) -> Vec<Word> {
        self.alphabet.words_up_to(max_degree)
    }
}

/// Free algebra with the q-infiltration product and deconcatenation; the
/// graded dual of [`FreeConcatUnshuffle`]. At `q = 0` the product is the
/// shuffle.
#[derive(Clone, Debug)]
pub struct ShuffleDeconcat {
    pub alphabet: Alphabet,
    pub q: Rational,
}

impl ShuffleDeconcat {
    pub fn new(alphabet: Alphabet, q: Rational) -> Self {
        ShuffleDeconcat { alphabet, q }
    }
}

impl Bialgebra for ShuffleDeconcat {
    type Basis = Word;

    fn unit(&self) -> Word {
        Word::empty()
    }
    fn product_basis(&self, x: &Word, y: &Word) -> LinComb<Word> {
        infiltration(x, y, &self.q)
    }
    fn coproduct_basis(&self, x: &Word) -> LinComb<Tensor<Word, Word>> {
        deconcatenation(x)
    }
    fn counit_basis(&self, x: &Word) -> Rational {
        indicator(x.is_empty())
    }
    fn degree(&self, x: &Word) -> Option<usize> {
        Some(x.len())
    }
    fn product_is_graded(&self) -> bool {
        self.q.is_zero()
    }
    fn name(&self) -> String {
        format!("shuffle-q(q={})", format_rational(&self.q))
    }
    fn corpus(&self, max_degree: usize) -> Vec<Word> {
        self.alphabet.words_up_to(max_degree)
    }
}

/// Concatenation paired with deconcatenation. Coassociative with counit,
/// but the coproduct is not multiplicative: `Δ(ab) ≠ Δ(a)Δ(b)`.
#[derive(Clone, Debug)]
pub struct ConcatDeconcat {
    pub alphabet: Alphabet,
}

impl Bialgebra for ConcatDeconcat {
    type Basis = Word;

    fn unit(&self) -> Word {
        Word::empty()
    }
    fn product_basis(&self, x: &Word, y: &Word) -> LinComb<Word> {
        LinComb::basis(x.concat(y))
    }
    fn coproduct_basis(&self, x: &Word) -> LinComb<Tensor<Word, Word>> {
        deconcatenation(x)
    }
    fn counit_basis(&self, x: &Word) -> Rational {
        indicator(x.is_empty())
    }
    fn degree(&self, x: &Word) -> Option<usize> {
        Some(x.len())
    }
    fn name(&self) -> String {
        "concat-deconcat".into()
    }
    fn corpus(&self, max_degree: usize) -> Vec<Word> {
        self.alphabet.words_up_to(max_degree)
    }
    fn known_failures(&self) -> Vec<Suite> {
        vec![Suite::Morphism]
    }
}

/// On `{a, b}`: `Δ(a) = a⊗b`, `Δ(b) = b⊗a`, extended multiplicatively, so
/// `Δ(w) = w ⊗ w̄` with the letters of `w̄` swapped. A morphism, but not
/// coassociative, and no counit exists for it.
#[derive(Clone, Debug)]
pub struct SwapCoproduct;

impl SwapCoproduct {
    fn swapped(w: &Word) -> Word {
        Word::new(
            w.letters()
                .iter()
                .map(|&c| match c {
                    'a' => 'b',
                    'b' => 'a',
                    other => other,
                })
                .collect(),
        )
    }
}

impl Bialgebra for SwapCoproduct {
    type Basis = Word;

    fn unit(&self) -> Word {
        Word::empty()
    }
    fn product_basis(&self, x: &Word, y: &Word) -> LinComb<Word> {
        LinComb::basis(x.concat(y))
    }
    fn coproduct_basis(&self, x: &Word) -> LinComb<Tensor<Word, Word>> {
        LinComb::basis(Tensor(x.clone(), Self::swapped(x)))
    }
    fn counit_basis(&self, x: &Word) -> Rational {
        indicator(x.is_empty())
    }
    fn name(&self) -> String {
        "swap".into()
    }
    fn corpus(&self, max_degree: usize) -> Vec<Word> {
        Alphabet::new("ab".chars()).words_up_to(max_degree)
    }
    fn known_failures(&self) -> Vec<Suite> {
        vec![Suite::Coassociativity, Suite::Counit]
    }
}

/// Commutative polynomials with `Δ(x) = x⊗1 + 1⊗x` on letters, so
/// `Δ(X^α) = Σ_{β≤α} C(α,β) X^β ⊗ X^{α−β}`.
#[derive(Clone, Debug)]
pub struct PolyBinomial {
    pub alphabet: Alphabet,
}

impl Bialgebra for PolyBinomial {
    type Basis = Monomial<char>;

    fn unit(&self) -> Monomial<char> {
        Monomial::one()
    }
    fn product_basis(&self, x: &Monomial<char>, y: &Monomial<char>) -> LinComb<Monomial<char>> {
        LinComb::basis(x.mul(y))
    }
    fn coproduct_basis(&self, x: &Monomial<char>) -> LinComb<Tensor<Monomial<char>, Monomial<char>>> {
        x.splittings()
            .into_iter()
            .map(|(l, r)| {
                let c: BigInt = l
                    .exponents()
                    .iter()
                    .map(|(v, &k)| binomial(BigInt::from(x.exponent(v)), BigInt::from(k)))
                    .product();
                (Tensor(l, r), Rational::from_integer(c))
            })
            .collect()
    }
    fn counit_basis(&self, x: &Monomial<char>) -> Rational {
        indicator(x.is_one())
    }
    fn degree(&self, x: &Monomial<char>) -> Option<usize> {
        Some(x.degree())
    }
    fn name(&self) -> String {
        "poly".into()
    }
    fn corpus(&self, max_degree: usize) -> Vec<Monomial<char>> {
        let mut layer = vec![Monomial::one()];
        let mut out = layer.clone();
        for _ in 0..max_degree {
            let next: BTreeSet<Monomial<char>> = layer
                .iter()
                .flat_map(|m| self.alphabet.letters().iter().map(move |&c| m.mul(&Monomial::var(c))))
                .collect();
            layer = next.into_iter().collect();
            out.extend(layer.iter().cloned());
        }
        out
    }
}

/// Partially commutative polynomials `k⟨A, θ⟩` with the primitive coproduct.
#[derive(Clone, Debug)]
pub struct TraceUnshuffle {
    pub alphabet: Alphabet,
    pub graph: Arc<CommutationGraph>,
}

impl TraceUnshuffle {
    pub fn new(alphabet: Alphabet, graph: CommutationGraph) -> Self {
        TraceUnshuffle {
            alphabet,
            graph: Arc::new(graph),
        }
    }

    pub fn trace(&self, w: &Word) -> TraceWord {
        TraceWord::new(w, self.graph.clone())
    }

    /// `Δs` computed from an arbitrary spelling and projected to traces.
    pub fn coproduct_of_spelling(&self, w: &Word) -> LinComb<Tensor<TraceWord, TraceWord>> {
        let n = w.len();
        let full = (1u64 << n) - 1;
        (0..=full)
            .map(|i| {
                (
                    Tensor(self.trace(&w.select(i)), self.trace(&w.select(full & !i))),
                    Rational::one(),
                )
            })
            .collect()
    }
}

impl Bialgebra for TraceUnshuffle {
    type Basis = TraceWord;

    fn unit(&self) -> TraceWord {
        self.trace(&Word::empty())
    }
    fn product_basis(&self, x: &TraceWord, y: &TraceWord) -> LinComb<TraceWord> {
        LinComb::basis(x.concat(y))
    }
    fn coproduct_basis(&self, x: &TraceWord) -> LinComb<Tensor<TraceWord, TraceWord>> {
        self.coproduct_of_spelling(x.normal_form())
    }
    fn counit_basis(&self, x: &TraceWord) -> Rational {
        indicator(x.is_empty())
    }
    fn degree(&self, x: &TraceWord) -> Option<usize> {
        Some(x.len())
    }
    fn name(&self) -> String {
        let pairs: Vec<String> = self.graph.pairs().map(|(x, y)| format!("{x}{y}")).collect();
        format!("trace(theta={})", pairs.join(","))
    }
    fn corpus(&self, max_degree: usize) -> Vec<TraceWord> {
        let set: BTreeSet<TraceWord> = self
            .alphabet
            .words_up_to(max_degree)
            .iter()
            .map(|w| self.trace(w))
            .collect();
        set.into_iter().collect()
    }
}

/// The group algebra `k[G]`: `Δ(g) = g⊗g`, `ε(g) = 1`, `S(g) = g⁻¹`.
#[derive(Clone, Debug)]
pub struct GroupAlgebra {
    pub group: Arc<FiniteGroup>,
}

impl GroupAlgebra {
    pub fn new(group: FiniteGroup) -> Self {
        GroupAlgebra {
            group: Arc::new(group),
        }
    }

    pub fn element(&self, index: usize) -> GroupElem {
        GroupElem::new(self.group.clone(), index)
    }

    pub fn by_name(&self, name: &str) -> Option<GroupElem> {
        self.group.lookup(name).map(|i| self.element(i))
    }

    pub fn elements(&self) -> Vec<GroupElem> {
        (0..self.group.order()).map(|i| self.element(i)).collect()
    }
}

impl Bialgebra for GroupAlgebra {
    type Basis = GroupElem;

    fn unit(&self) -> GroupElem {
        self.element(self.group.identity())
    }
    fn product_basis(&self, x: &GroupElem, y: &GroupElem) -> LinComb<GroupElem> {
        LinComb::basis(x.mul(y))
    }
    fn coproduct_basis(&self, x: &GroupElem) -> LinComb<Tensor<GroupElem, GroupElem>> {
        LinComb::basis(Tensor(x.clone(), x.clone()))
    }
    fn counit_basis(&self, _x: &GroupElem) -> Rational {
        Rational::one()
    }
    fn closed_antipode(&self, x: &GroupElem) -> Option<LinComb<GroupElem>> {
        Some(LinComb::basis(x.inverse()))
    }
    fn name(&self) -> String {
        format!("group({})", self.group.name())
    }
    fn corpus(&self, _max_degree: usize) -> Vec<GroupElem> {
        self.elements()
    }
}

/// Free algebra with every letter group-like: `Δh(a) = a⊗a`,
/// `ε_aug(a) = 1`. A bialgebra without antipode.
#[derive(Clone, Debug)]
pub struct FreeGrouplike {
    pub alphabet: Alphabet,
}

impl Bialgebra for FreeGrouplike {
    type Basis = Word;

    fn unit(&self) -> Word {
        Word::empty()
    }
    fn product_basis(&self, x: &Word, y: &Word) -> LinComb<Word> {
        LinComb::basis(x.concat(y))
    }
    fn coproduct_basis(&self, x: &Word) -> LinComb<Tensor<Word, Word>> {
        LinComb::basis(Tensor(x.clone(), x.clone()))
    }
    fn counit_basis(&self, _x: &Word) -> Rational {
        Rational::one()
    }
    fn name(&self) -> String {
        "free-grouplike".into()
    }
    fn corpus(&self, max_degree: usize) -> Vec<Word> {
        self.alphabet.words_up_to(max_degree)
    }
}

/// Maximum number of black spots in the default diagram corpus.
pub const DIAGRAM_CORPUS_ROWS: usize = 3;

/// Labelled diagrams under `[d1|d2]_L` with `Δ_L(d) = Σ_{I+J} d[I] ⊗ d[J]`.
#[derive(Clone, Debug, Default)]
pub struct LDiag;

impl LDiag {
    /// All `d[I] ⊗ d[J]` over complementary row subsets.
    pub fn split(d: &LabelledDiagram) -> LinComb<Tensor<LabelledDiagram, LabelledDiagram>> {
        let full = (1u64 << d.rows()) - 1;
        let mut out = LinComb::zero();
        for i in 0..=full {
            out.add_term(
                Tensor(d.restrict_mask(i), d.restrict_mask(full & !i)),
                Rational::one(),
            );
        }
        out
    }
}

impl Bialgebra for LDiag {
    type Basis = LabelledDiagram;

    fn unit(&self) -> LabelledDiagram {
        LabelledDiagram::empty()
    }
    fn product_basis(&self, x: &LabelledDiagram, y: &LabelledDiagram) -> LinComb<LabelledDiagram> {
        LinComb::basis(ldiag_concat(x, y))
    }
    fn coproduct_basis(&self, x: &LabelledDiagram) -> LinComb<Tensor<LabelledDiagram, LabelledDiagram>> {
        LDiag::split(x)
    }
    fn counit_basis(&self, x: &LabelledDiagram) -> Rational {
        indicator(x.is_empty())
    }
    fn degree(&self, x: &LabelledDiagram) -> Option<usize> {
        Some(x.degree())
    }
    fn name(&self) -> String {
        "ldiag".into()
    }
    fn corpus(&self, max_degree: usize) -> Vec<LabelledDiagram> {
        ldiagrams_up_to(max_degree, DIAGRAM_CORPUS_ROWS)
    }
}

/// Unlabelled diagrams: [`LDiag`] pushed through the canonical projection.
/// Operations lift to the canonical representative, compute there and
/// project back.
#[derive(Clone, Debug, Default)]
pub struct Diag;

impl Diag {
    /// Canonical class, with no size bound.
    pub fn project(d: &LabelledDiagram) -> Diagram {
        diag_canonical_bounded(d, usize::MAX).expect("unbounded canonicalization")
    }

    pub fn project_tensor(
        x: &LinComb<Tensor<LabelledDiagram, LabelledDiagram>>,
    ) -> LinComb<Tensor<Diagram, Diagram>> {
        x.map_basis(|Tensor(l, r)| Tensor(Diag::project(l), Diag::project(r)))
    }
}

impl Bialgebra for Diag {
    type Basis = Diagram;

    fn unit(&self) -> Diagram {
        Diagram::empty()
    }
    fn product_basis(&self, x: &Diagram, y: &Diagram) -> LinComb<Diagram> {
        LinComb::basis(Diag::project(&ldiag_concat(x.canon(), y.canon())))
    }
    fn coproduct_basis(&self, x: &Diagram) -> LinComb<Tensor<Diagram, Diagram>> {
        Diag::project_tensor(&LDiag::split(x.canon()))
    }
    fn counit_basis(&self, x: &Diagram) -> Rational {
        indicator(x.canon().is_empty())
    }
    fn degree(&self, x: &Diagram) -> Option<usize> {
        Some(x.degree())
    }
    fn name(&self) -> String {
        "diag".into()
    }
    fn corpus(&self, max_degree: usize) -> Vec<Diagram> {
        let set: BTreeSet<Diagram> = ldiagrams_up_to(max_degree, DIAGRAM_CORPUS_ROWS)
            .iter()
            .map(Diag::project)
            .collect();
        set.into_iter().collect()
    }
}

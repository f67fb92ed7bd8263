use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use super::word::{Alphabet, Word};
use crate::error::{Error, Result};

/// A symmetric, loop-free set of commuting letter pairs.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct CommutationGraph {
    // each pair stored once, smaller letter first
    pairs: BTreeSet<(char, char)>,
}

impl CommutationGraph {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new<I: IntoIterator<Item = (char, char)>>(pairs: I) -> Result<Self> {
        let mut g = Self::empty();
        for (x, y) in pairs {
            if x == y {
                return Err(Error::InvalidGraph(format!("loop on {x:?}")));
            }
            g.pairs.insert((x.min(y), x.max(y)));
        }
        Ok(g)
    }

    /// Every pair of distinct letters commutes.
    pub fn complete(alphabet: &Alphabet) -> Self {
        let l = alphabet.letters();
        let pairs = l
            .iter()
            .enumerate()
            .flat_map(|(i, &x)| l[i + 1..].iter().map(move |&y| (x, y)))
            .collect();
        CommutationGraph { pairs }
    }

    pub fn commute(&self, x: char, y: char) -> bool {
        x != y && self.pairs.contains(&(x.min(y), x.max(y)))
    }

    pub fn pairs(&self) -> impl Iterator<Item = (char, char)> + '_ {
        self.pairs.iter().copied()
    }

    pub fn letters(&self) -> BTreeSet<char> {
        self.pairs.iter().flat_map(|&(x, y)| [x, y]).collect()
    }
}

/// The lexicographically least spelling of the trace of `w`.
///
/// Repeatedly emits the smallest letter occurrence that commutes with every
/// letter before it (a minimal piece of the heap).
pub fn lex_normal_form(w: &Word, graph: &CommutationGraph) -> Word {
    let mut rest: Vec<char> = w.letters().to_vec();
    let mut out = Vec::with_capacity(rest.len());
    while !rest.is_empty() {
        let mut best: Option<usize> = None;
        let mut seen: Vec<char> = Vec::new();
        for (i, &c) in rest.iter().enumerate() {
            if !seen.contains(&c) && seen.iter().all(|&p| graph.commute(p, c)) {
                if best.is_none_or(|b| c < rest[b]) {
                    best = Some(i);
                }
            }
            if !seen.contains(&c) {
                seen.push(c);
            }
        }
        let i = best.expect("the first letter is always minimal");
        out.push(rest.remove(i));
    }
    Word::new(out)
}

/// An element of the partially commutative monoid `M(A, θ)`, stored as its
/// lexicographically least representative.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TraceWord {
    normal_form: Word,
    graph: Arc<CommutationGraph>,
}

impl TraceWord {
    pub fn new(w: &Word, graph: Arc<CommutationGraph>) -> Self {
        TraceWord {
            normal_form: lex_normal_form(w, &graph),
            graph,
        }
    }

    pub fn normal_form(&self) -> &Word {
        &self.normal_form
    }

    pub fn graph(&self) -> &Arc<CommutationGraph> {
        &self.graph
    }

    pub fn len(&self) -> usize {
        self.normal_form.len()
    }

    pub fn is_empty(&self) -> bool {
        self.normal_form.is_empty()
    }

    pub fn concat(&self, other: &TraceWord) -> TraceWord {
        TraceWord::new(&self.normal_form.concat(&other.normal_form), self.graph.clone())
    }
}

impl fmt::Display for TraceWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.normal_form.fmt(f)
    }
}

pub fn trace_normal_form(w: &Word, graph: &CommutationGraph) -> TraceWord {
    TraceWord::new(w, Arc::new(graph.clone()))
}

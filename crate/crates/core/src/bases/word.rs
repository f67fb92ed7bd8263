use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A finite set of single-character letters, kept in character order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Alphabet {
    letters: Vec<char>,
}

impl Alphabet {
    pub fn new<I: IntoIterator<Item = char>>(letters: I) -> Self {
        let mut letters: Vec<char> = letters.into_iter().collect();
        letters.sort_unstable();
        letters.dedup();
        Alphabet { letters }
    }

    pub fn letters(&self) -> &[char] {
        &self.letters
    }

    pub fn contains(&self, c: char) -> bool {
        self.letters.binary_search(&c).is_ok()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Parses a letter string into a word over this alphabet.
    pub fn word(&self, s: &str) -> Result<Word> {
        let w = Word::from(s);
        self.check(&w)?;
        Ok(w)
    }

    pub fn check(&self, w: &Word) -> Result<()> {
        match w.letters().iter().find(|c| !self.contains(**c)) {
            Some(c) => Err(Error::UnknownLetter(*c)),
            None => Ok(()),
        }
    }

    /// All words of length at most `max_len`, in basis order.
    pub fn words_up_to(&self, max_len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        let mut layer = vec![Word::empty()];
        for _ in 0..max_len {
            layer = layer
                .iter()
                .flat_map(|w| {
                    self.letters.iter().map(move |&c| {
                        let mut next = w.clone();
                        next.push(c);
                        next
                    })
                })
                .collect();
            out.extend(layer.iter().cloned());
        }
        out
    }
}

/// An element of the free monoid: a finite sequence of letters.
///
/// Ordered by length, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word(Vec<char>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<char>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[char] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, c: char) {
        self.0.push(c);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Letters at the given 1-based, strictly increasing positions.
    pub fn subword(&self, indices: &[usize]) -> Result<Word> {
        let mut prev = 0;
        let mut out = Vec::with_capacity(indices.len());
        for &i in indices {
            if i == 0 || i > self.len() {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    len: self.len(),
                });
            }
            if i <= prev {
                return Err(Error::NotIncreasing);
            }
            prev = i;
            out.push(self.0[i - 1]);
        }
        Ok(Word(out))
    }

    /// Letters selected by a bitmask over 0-based positions.
    pub(crate) fn select(&self, mask: u64) -> Word {
        Word(
            self.0
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, c)| *c)
                .collect(),
        )
    }
}

impl From<&str> for Word {
    fn from(s: &str) -> Self {
        if s == "1" {
            Word::empty()
        } else {
            Word(s.chars().collect())
        }
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for c in &self.0 {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// `w[I]` for a 1-based increasing index set.
pub fn subword(w: &Word, indices: &[usize]) -> Result<Word> {
    w.subword(indices)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subword_examples() {
        let abc = Word::from("abc");
        assert_eq!(subword(&abc, &[1, 3]).unwrap(), Word::from("ac"));
        assert_eq!(subword(&abc, &[]).unwrap(), Word::empty());
        assert_eq!(subword(&Word::from("aab"), &[2, 3]).unwrap(), Word::from("ab"));
    }

    #[test]
    fn subword_errors() {
        let abc = Word::from("abc");
        assert_eq!(
            subword(&abc, &[4]),
            Err(Error::IndexOutOfRange { index: 4, len: 3 })
        );
        assert_eq!(
            subword(&abc, &[0]),
            Err(Error::IndexOutOfRange { index: 0, len: 3 })
        );
        assert_eq!(subword(&abc, &[2, 1]), Err(Error::NotIncreasing));
    }

    #[test]
    fn length_lex_order() {
        let mut v: Vec<Word> = ["ba", "b", "", "ab", "a", "aaa"].iter().map(|s| Word::from(*s)).collect();
        v.sort();
        let shown: Vec<String> = v.iter().map(|w| w.to_string()).collect();
        assert_eq!(shown, ["1", "a", "b", "ab", "ba", "aaa"]);
    }

    #[test]
    fn concatenation_is_a_monoid() {
        let a = Alphabet::new("ab".chars());
        let words = a.words_up_to(3);
        assert_eq!(words.len(), 15);
        for x in &words {
            assert_eq!(&x.concat(&Word::empty()), x);
            assert_eq!(&Word::empty().concat(x), x);
            for y in &words {
                for z in words.iter().take(7) {
                    assert_eq!(x.concat(y).concat(z), x.concat(&y.concat(z)));
                }
            }
        }
    }

    #[test]
    fn alphabet_rejects_foreign_letters() {
        let a = Alphabet::new("ab".chars());
        assert_eq!(a.word("abc"), Err(Error::UnknownLetter('c')));
        assert_eq!(a.word("1").unwrap(), Word::empty());
    }
}

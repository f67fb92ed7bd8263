use std::collections::HashMap;

use num_traits::Zero;

use crate::bases::Word;
use crate::linalg::{LinComb, Tensor};
use crate::scalar::Rational;

/// The q-infiltration product `u ↑_q v`.
///
/// `w ↑ 1 = 1 ↑ w = w` and
/// `au ↑ bv = a(u ↑ bv) + b(au ↑ v) + q·δ_{a,b}·a(u ↑ v)`.
///
/// The common letter is kept in the third term: that is what makes the
/// product dual to `Δ_q` (the pairing `⟨Δ_q(a), a⊗a⟩ = q` forces
/// `a ↑ a = 2aa + q·a`).
pub fn infiltration(u: &Word, v: &Word, q: &Rational) -> LinComb<Word> {
    let mut memo = HashMap::new();
    infiltrate_suffixes(u.letters(), v.letters(), q, &mut memo)
}

fn prefixed(c: char, x: &LinComb<Word>) -> LinComb<Word> {
    x.map_basis(|w| {
        let mut letters = Vec::with_capacity(w.len() + 1);
        letters.push(c);
        letters.extend_from_slice(w.letters());
        Word::new(letters)
    })
}

fn infiltrate_suffixes(
    u: &[char],
    v: &[char],
    q: &Rational,
    memo: &mut HashMap<(usize, usize), LinComb<Word>>,
) -> LinComb<Word> {
    if u.is_empty() {
        return LinComb::basis(Word::new(v.to_vec()));
    }
    if v.is_empty() {
        return LinComb::basis(Word::new(u.to_vec()));
    }
    // suffixes are identified by their lengths
    let key = (u.len(), v.len());
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let (a, b) = (u[0], v[0]);
    let mut out = prefixed(a, &infiltrate_suffixes(&u[1..], v, q, memo));
    out += &prefixed(b, &infiltrate_suffixes(u, &v[1..], q, memo));
    if a == b && !q.is_zero() {
        out.add_scaled(q, &prefixed(a, &infiltrate_suffixes(&u[1..], &v[1..], q, memo)));
    }
    memo.insert(key, out.clone());
    out
}

/// `Δ_q(w) = Σ_{I ∪ J = [1..|w|]} q^{|I∩J|} w[I] ⊗ w[J]`, the multiplicative
/// extension of `Δ(a) = a⊗1 + 1⊗a + q·a⊗a`.
pub fn unshuffle_q(w: &Word, q: &Rational) -> LinComb<Tensor<Word, Word>> {
    let mut acc = LinComb::basis(Tensor(Word::empty(), Word::empty()));
    for &c in w.letters() {
        let mut next = LinComb::zero();
        for (Tensor(l, r), x) in &acc {
            let mut l2 = l.clone();
            l2.push(c);
            let mut r2 = r.clone();
            r2.push(c);
            next.add_term(Tensor(l2.clone(), r.clone()), x.clone());
            next.add_term(Tensor(l.clone(), r2.clone()), x.clone());
            if !q.is_zero() {
                next.add_term(Tensor(l2, r2), x * q);
            }
        }
        acc = next;
    }
    acc
}

/// Both sides of `⟨Δ_q(w), u⊗v⟩ = ⟨w, u ↑_q v⟩`.
pub fn duality_sides(u: &Word, v: &Word, w: &Word, q: &Rational) -> (Rational, Rational) {
    let lhs = unshuffle_q(w, q).coeff(&Tensor(u.clone(), v.clone()));
    let rhs = infiltration(u, v, q).coeff(w);
    (lhs, rhs)
}

pub fn duality_check(u: &Word, v: &Word, w: &Word, q: &Rational) -> bool {
    let (l, r) = duality_sides(u, v, w, q);
    l == r
}

/// `w ↑ w'` at `q = 1` by direct count: the coefficient of `w` is the number
/// of pairs `(I, J)` with `I ∪ J` covering `w` and `w[I] = u`, `w[J] = v`.
#[cfg(test)]
pub(crate) fn classical_infiltration_coefficient(u: &Word, v: &Word, w: &Word) -> u64 {
    let n = w.len();
    let full = (1u64 << n) - 1;
    let mut count = 0;
    for i in 0..=full {
        if w.select(i) != *u {
            continue;
        }
        // J must contain the complement of I
        let rest = full & !i;
        let mut extra = i;
        loop {
            let j = rest | extra;
            if w.select(j) == *v {
                count += 1;
            }
            if extra == 0 {
                break;
            }
            extra = (extra - 1) & i;
        }
    }
    count
}

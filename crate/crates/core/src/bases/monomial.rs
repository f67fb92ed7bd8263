use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Variables of commutative monomials.
pub trait Variable: Clone + Ord + fmt::Debug + fmt::Display {
    /// Separator printed between the factors of a monomial.
    const SEPARATOR: &'static str;
}

impl Variable for char {
    const SEPARATOR: &'static str = "";
}

/// Indexed series variables `L1, L2, …` and `V1, V2, …`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum SeriesVar {
    L(usize),
    V(usize),
    /// A free scalar parameter, printed as its letter.
    Param(char),
}

impl fmt::Display for SeriesVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesVar::L(n) => write!(f, "L{n}"),
            SeriesVar::V(n) => write!(f, "V{n}"),
            SeriesVar::Param(c) => write!(f, "{c}"),
        }
    }
}

impl Variable for SeriesVar {
    const SEPARATOR: &'static str = "*";
}

/// An element of the free commutative monoid: `X^α` with `α` finitely
/// supported. Zero exponents are never stored.
///
/// Ordered by total degree, then lexicographically on the sorted multiset
/// of variables (so `a² < ab < b²`).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial<V: Ord = char> {
    exponents: BTreeMap<V, u32>,
}

impl<V: Variable> Default for Monomial<V> {
    fn default() -> Self {
        Monomial::one()
    }
}

impl<V: Variable> Monomial<V> {
    pub fn one() -> Self {
        Monomial {
            exponents: BTreeMap::new(),
        }
    }

    pub fn var(v: V) -> Self {
        Self::power(v, 1)
    }

    pub fn power(v: V, e: u32) -> Self {
        let mut m = Monomial::one();
        if e > 0 {
            m.exponents.insert(v, e);
        }
        m
    }

    pub fn from_exponents<I: IntoIterator<Item = (V, u32)>>(it: I) -> Self {
        let mut m = Monomial::one();
        for (v, e) in it {
            m.multiply_var(v, e);
        }
        m
    }

    pub fn is_one(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn exponent(&self, v: &V) -> u32 {
        self.exponents.get(v).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &BTreeMap<V, u32> {
        &self.exponents
    }

    pub fn degree(&self) -> usize {
        self.exponents.values().map(|&e| e as usize).sum()
    }

    pub fn multiply_var(&mut self, v: V, e: u32) {
        if e > 0 {
            *self.exponents.entry(v).or_insert(0) += e;
        }
    }

    /// `X^α X^β = X^{α+β}`.
    pub fn mul(&self, other: &Monomial<V>) -> Monomial<V> {
        let mut out = self.clone();
        for (v, &e) in &other.exponents {
            out.multiply_var(v.clone(), e);
        }
        out
    }

    /// All `(β, α−β)` with `β ≤ α` componentwise.
    pub fn splittings(&self) -> Vec<(Monomial<V>, Monomial<V>)> {
        let mut out = vec![(Monomial::one(), Monomial::one())];
        for (v, &e) in &self.exponents {
            out = out
                .into_iter()
                .flat_map(|(l, r)| {
                    (0..=e).map(move |j| {
                        let mut l = l.clone();
                        let mut r = r.clone();
                        l.multiply_var(v.clone(), j);
                        r.multiply_var(v.clone(), e - j);
                        (l, r)
                    })
                })
                .collect();
        }
        out
    }

    fn sorted_vars(&self) -> impl Iterator<Item = &V> {
        self.exponents
            .iter()
            .flat_map(|(v, &e)| std::iter::repeat_n(v, e as usize))
    }
}

impl<V: Variable> Ord for Monomial<V> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.sorted_vars().cmp(other.sorted_vars()))
    }
}

impl<V: Variable> PartialOrd for Monomial<V> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<V: Variable> fmt::Display for Monomial<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponents.is_empty() {
            return f.write_str("1");
        }
        for (i, (v, &e)) in self.exponents.iter().enumerate() {
            if i > 0 {
                f.write_str(V::SEPARATOR)?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};

/// A finite group given by its multiplication table.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiniteGroup {
    name: String,
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

impl FiniteGroup {
    /// Validates associativity, the identity and two-sided inverses.
    pub fn from_table(name: &str, names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 || names.len() != n {
            return Err(Error::InvalidGroup("empty table or name count mismatch".into()));
        }
        if table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
            return Err(Error::InvalidGroup("table is not n×n over 0..n".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| Error::InvalidGroup("no identity".into()))?;
        let mut inverses = Vec::with_capacity(n);
        for g in 0..n {
            let inv = (0..n)
                .find(|&h| table[g][h] == identity && table[h][g] == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("{} has no inverse", names[g])))?;
            inverses.push(inv);
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidGroup("table is not associative".into()));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            name: name.to_string(),
            names,
            table,
            identity,
            inverses,
        })
    }

    /// `C_n = ⟨c | cⁿ = 1⟩`, elements named `1, c, c^2, …`.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGroup("C0".into()));
        }
        let names = (0..n)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => "c".to_string(),
                _ => format!("c^{k}"),
            })
            .collect();
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        Self::from_table(&format!("C{n}"), names, table)
    }

    /// `S_n` acting on `1..=n`, elements named by one-line notation (`s213`)
    /// with the identity named `1`. Product is composition, `(στ)(i) = σ(τ(i))`.
    pub fn symmetric(n: usize) -> Result<Self> {
        if n == 0 || n > 9 {
            return Err(Error::InvalidGroup(format!("S{n} unsupported")));
        }
        let perms = permutations(n);
        let index = |p: &[usize]| perms.iter().position(|q| q == p).expect("closed under composition");
        let table = perms
            .iter()
            .map(|s| {
                perms
                    .iter()
                    .map(|t| index(&t.iter().map(|&i| s[i]).collect::<Vec<_>>()))
                    .collect()
            })
            .collect();
        let names = perms
            .iter()
            .enumerate()
            .map(|(k, p)| {
                if k == 0 {
                    "1".to_string()
                } else {
                    std::iter::once('s')
                        .chain(p.iter().map(|&i| char::from_digit(i as u32 + 1, 10).unwrap()))
                        .collect()
                }
            })
            .collect();
        Self::from_table(&format!("S{n}"), names, table)
    }

    /// Parses `C3`, `S3`, … .
    pub fn by_name(name: &str) -> Result<Self> {
        let bad = || Error::InvalidGroup(format!("unknown group {name:?}"));
        let (kind, n) = name.split_at(name.char_indices().nth(1).map_or(name.len(), |(i, _)| i));
        let n: usize = n.parse().map_err(|_| bad())?;
        match kind {
            "C" | "c" => Self::cyclic(n),
            "S" | "s" => Self::symmetric(n),
            _ => Err(bad()),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn element_name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn lookup(&self, name: &str) -> Option<usize> {
        if name == "e" {
            return Some(self.identity);
        }
        self.names.iter().position(|n| n == name)
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 0..n {
        for rest in permutations(n - 1) {
            let mut p = vec![first];
            p.extend(rest.into_iter().map(|x| if x >= first { x + 1 } else { x }));
            out.push(p);
        }
    }
    out
}

/// An element of a finite group, usable as a basis element of its group
/// algebra.
#[derive(Clone, Debug)]
pub struct GroupElem {
    group: Arc<FiniteGroup>,
    index: usize,
}

impl GroupElem {
    pub fn new(group: Arc<FiniteGroup>, index: usize) -> Self {
        assert!(index < group.order());
        GroupElem { group, index }
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn mul(&self, other: &GroupElem) -> GroupElem {
        GroupElem::new(self.group.clone(), self.group.mul(self.index, other.index))
    }

    pub fn inverse(&self) -> GroupElem {
        GroupElem::new(self.group.clone(), self.group.inverse(self.index))
    }

    pub fn is_identity(&self) -> bool {
        self.index == self.group.identity()
    }
}

impl PartialEq for GroupElem {
    fn eq(&self, other: &Self) -> bool {
        self.index == other.index && self.group.name == other.group.name
    }
}

impl Eq for GroupElem {}

impl Hash for GroupElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.group.name.hash(state);
        self.index.hash(state);
    }
}

impl Ord for GroupElem {
    fn cmp(&self, other: &Self) -> Ordering {
        self.group
            .name
            .cmp(&other.group.name)
            .then(self.index.cmp(&other.index))
    }
}

impl PartialOrd for GroupElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.group.element_name(self.index))
    }
}

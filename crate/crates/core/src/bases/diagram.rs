use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::bellcalc::SetPartition;
use crate::error::{Error, Result};

/// Default bound on the number of rows and of columns accepted by
/// [`diag_canonical`].
pub const DEFAULT_CANON_BOUND: usize = 8;

/// A packed matrix of edge multiplicities: rows are black spots, columns
/// white spots. No row or column is identically zero; the 0×0 matrix is the
/// empty diagram.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LabelledDiagram {
    rows: usize,
    cols: usize,
    entries: Vec<u32>,
}

impl LabelledDiagram {
    pub fn empty() -> Self {
        LabelledDiagram {
            rows: 0,
            cols: 0,
            entries: Vec::new(),
        }
    }

    /// Builds a diagram from its rows, rejecting ragged or non-packed input.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        let p = rows.len();
        let q = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != q) {
            return Err(Error::MalformedMatrix("rows have different lengths".into()));
        }
        if p > 0 && q == 0 {
            return Err(Error::MalformedMatrix("empty rows".into()));
        }
        let d = LabelledDiagram {
            rows: p,
            cols: q,
            entries: rows.into_iter().flatten().collect(),
        };
        if let Some(i) = (0..p).find(|&i| d.row(i).iter().all(|&x| x == 0)) {
            return Err(Error::MalformedMatrix(format!("row {} is zero", i + 1)));
        }
        if let Some(j) = (0..q).find(|&j| (0..p).all(|i| d.get(i, j) == 0)) {
            return Err(Error::MalformedMatrix(format!("column {} is zero", j + 1)));
        }
        Ok(d)
    }

    /// Keeps the non-zero rows and columns of an arbitrary matrix.
    fn packed(rows: usize, cols: usize, entries: Vec<u32>) -> Self {
        let keep_rows: Vec<usize> = (0..rows)
            .filter(|&i| entries[i * cols..(i + 1) * cols].iter().any(|&x| x > 0))
            .collect();
        let keep_cols: Vec<usize> = (0..cols)
            .filter(|&j| (0..rows).any(|i| entries[i * cols + j] > 0))
            .collect();
        let entries = keep_rows
            .iter()
            .flat_map(|&i| keep_cols.iter().map(move |&j| (i, j)))
            .map(|(i, j)| entries[i * cols + j])
            .collect();
        LabelledDiagram {
            rows: keep_rows.len(),
            cols: keep_cols.len(),
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0
    }

    /// Number of edges.
    pub fn degree(&self) -> usize {
        self.entries.iter().map(|&x| x as usize).sum()
    }

    pub fn row_sums(&self) -> Vec<usize> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|&x| x as usize).sum())
            .collect()
    }

    pub fn col_sums(&self) -> Vec<usize> {
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self.get(i, j) as usize).sum())
            .collect()
    }

    /// Restriction to the black spots selected by a bitmask over rows.
    pub(crate) fn restrict_mask(&self, mask: u64) -> LabelledDiagram {
        let rows: Vec<usize> = (0..self.rows).filter(|i| mask >> i & 1 == 1).collect();
        let entries = rows.iter().flat_map(|&i| self.row(i).iter().copied()).collect();
        LabelledDiagram::packed(rows.len(), self.cols, entries)
    }

    fn permuted(&self, row_order: &[usize], col_order: &[usize]) -> LabelledDiagram {
        LabelledDiagram {
            rows: self.rows,
            cols: self.cols,
            entries: row_order
                .iter()
                .flat_map(|&i| col_order.iter().map(move |&j| self.get(i, j)))
                .collect(),
        }
    }

    pub fn transpose(&self) -> LabelledDiagram {
        LabelledDiagram {
            rows: self.cols,
            cols: self.rows,
            entries: (0..self.cols)
                .flat_map(|j| (0..self.rows).map(move |i| self.get(i, j)))
                .collect(),
        }
    }
}

impl Ord for LabelledDiagram {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.rows.cmp(&other.rows))
            .then(self.cols.cmp(&other.cols))
            .then_with(|| self.entries.cmp(&other.entries))
    }
}

impl PartialOrd for LabelledDiagram {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for LabelledDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl FromStr for LabelledDiagram {
    type Err = Error;

    /// Parses `[[r11,...],[...]]`; whitespace is ignored and `1` or `[]`
    /// denote the empty diagram.
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s == "1" || s == "[]" {
            return Ok(LabelledDiagram::empty());
        }
        let bad = |m: &str| Error::MalformedMatrix(format!("{m} in {s:?}"));
        let inner = s
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| bad("missing outer brackets"))?;
        let mut rows = Vec::new();
        let mut rest = inner;
        loop {
            let body = rest.strip_prefix('[').ok_or_else(|| bad("expected '['"))?;
            let end = body.find(']').ok_or_else(|| bad("unclosed row"))?;
            let row = body[..end]
                .split(',')
                .map(|x| x.parse::<u32>().map_err(|_| bad("bad entry")))
                .collect::<Result<Vec<u32>>>()?;
            rows.push(row);
            rest = &body[end + 1..];
            if rest.is_empty() {
                break;
            }
            rest = rest.strip_prefix(',').ok_or_else(|| bad("expected ','"))?;
        }
        LabelledDiagram::from_rows(rows)
    }
}

/// `[d1|d2]_L`: `d2` placed after `d1`, block-diagonally.
pub fn ldiag_concat(d1: &LabelledDiagram, d2: &LabelledDiagram) -> LabelledDiagram {
    let rows = d1.rows + d2.rows;
    let cols = d1.cols + d2.cols;
    let mut entries = vec![0; rows * cols];
    for i in 0..d1.rows {
        entries[i * cols..i * cols + d1.cols].copy_from_slice(d1.row(i));
    }
    for i in 0..d2.rows {
        let start = (d1.rows + i) * cols + d1.cols;
        entries[start..start + d2.cols].copy_from_slice(d2.row(i));
    }
    LabelledDiagram {
        rows,
        cols,
        entries,
    }
}

/// `d[I]`: the black spots in `I` (1-based) with their edges and white
/// spots, relabelled in increasing order.
pub fn ldiag_restrict(d: &LabelledDiagram, indices: &[usize]) -> Result<LabelledDiagram> {
    let mut mask = 0u64;
    for &i in indices {
        if i == 0 || i > d.rows {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: d.rows,
            });
        }
        mask |= 1 << (i - 1);
    }
    Ok(d.restrict_mask(mask))
}

/// An unlabelled diagram: the class of a labelled diagram under independent
/// row and column permutations, stored as its row-major lexicographically
/// least representative.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Diagram {
    canon: LabelledDiagram,
}

impl Diagram {
    pub fn empty() -> Self {
        Diagram {
            canon: LabelledDiagram::empty(),
        }
    }

    pub fn canon(&self) -> &LabelledDiagram {
        &self.canon
    }

    pub fn degree(&self) -> usize {
        self.canon.degree()
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.canon.fmt(f)
    }
}

pub fn diag_canonical(d: &LabelledDiagram) -> Result<Diagram> {
    diag_canonical_bounded(d, DEFAULT_CANON_BOUND)
}

/// Canonical representative under row × column permutations.
///
/// For a fixed row order, sorting the columns as vectors gives the least
/// image; the search runs over row orders depth-first, where the first `k`
/// rows already fix the first `k` rows of the result, so branches whose
/// prefix exceeds the best one are cut. Identical rows are tried once.
pub fn diag_canonical_bounded(d: &LabelledDiagram, bound: usize) -> Result<Diagram> {
    if d.rows > bound || d.cols > bound {
        return Err(Error::SizeLimit {
            what: format!("{}x{} diagram", d.rows, d.cols),
            bound,
        });
    }
    let mut search = CanonSearch {
        d,
        best: None,
        order: Vec::with_capacity(d.rows),
        used: vec![false; d.rows],
    };
    search.run();
    let canon = match search.best {
        Some((row_order, col_order)) => d.permuted(&row_order, &col_order),
        None => LabelledDiagram::empty(),
    };
    Ok(Diagram { canon })
}

struct CanonSearch<'a> {
    d: &'a LabelledDiagram,
    best: Option<(Vec<usize>, Vec<usize>)>,
    order: Vec<usize>,
    used: Vec<bool>,
}

impl CanonSearch<'_> {
    fn sorted_cols(&self, rows: &[usize]) -> Vec<usize> {
        let mut cols: Vec<usize> = (0..self.d.cols).collect();
        cols.sort_by(|&a, &b| {
            rows.iter()
                .map(|&i| self.d.get(i, a))
                .cmp(rows.iter().map(|&i| self.d.get(i, b)))
        });
        cols
    }

    fn prefix_cmp(&self, rows: &[usize], cols: &[usize]) -> Ordering {
        let Some((best_rows, best_cols)) = &self.best else {
            return Ordering::Less;
        };
        let mine = rows.iter().flat_map(|&i| cols.iter().map(move |&j| (i, j)));
        let theirs = best_rows[..rows.len()]
            .iter()
            .flat_map(|&i| best_cols.iter().map(move |&j| (i, j)));
        mine.map(|(i, j)| self.d.get(i, j))
            .cmp(theirs.map(|(i, j)| self.d.get(i, j)))
    }

    fn run(&mut self) {
        if self.d.rows == 0 {
            return;
        }
        let cols = self.sorted_cols(&self.order);
        if !self.order.is_empty() && self.best.is_some() {
            if self.prefix_cmp(&self.order, &cols) == Ordering::Greater {
                return;
            }
        }
        if self.order.len() == self.d.rows {
            if self.prefix_cmp(&self.order, &cols) == Ordering::Less {
                self.best = Some((self.order.clone(), cols));
            }
            return;
        }
        let mut tried: Vec<&[u32]> = Vec::new();
        for i in 0..self.d.rows {
            if self.used[i] || tried.contains(&self.d.row(i)) {
                continue;
            }
            tried.push(self.d.row(i));
            self.used[i] = true;
            self.order.push(i);
            self.run();
            self.order.pop();
            self.used[i] = false;
        }
    }
}

/// White-spot type `α` (multiplicities of column sums) and black-spot type
/// `β` (multiplicities of row sums).
pub fn spot_types(d: &LabelledDiagram) -> (BTreeMap<usize, usize>, BTreeMap<usize, usize>) {
    let count = |sums: Vec<usize>| {
        let mut m = BTreeMap::new();
        for s in sums {
            *m.entry(s).or_insert(0) += 1;
        }
        m
    };
    (count(d.col_sums()), count(d.row_sums()))
}

/// Incidence matrix `card(Y ∩ Z)` with blocks of `p1` as rows and blocks of
/// `p2` as columns, each ordered by minimal element.
pub fn diagram_from_partitions(p1: &SetPartition, p2: &SetPartition) -> Result<LabelledDiagram> {
    if p1.ground_size() != p2.ground_size() {
        return Err(Error::PartitionMismatch {
            left: p1.ground_size(),
            right: p2.ground_size(),
        });
    }
    let n = p1.ground_size();
    let mut col_of = vec![0usize; n + 1];
    for (j, block) in p2.blocks().iter().enumerate() {
        for &x in block {
            col_of[x] = j;
        }
    }
    let (rows, cols) = (p1.blocks().len(), p2.blocks().len());
    let mut entries = vec![0u32; rows * cols];
    for (i, block) in p1.blocks().iter().enumerate() {
        for &x in block {
            entries[i * cols + col_of[x]] += 1;
        }
    }
    Ok(LabelledDiagram {
        rows,
        cols,
        entries,
    })
}

/// All labelled diagrams with at most `max_edges` edges and at most
/// `max_rows` black spots, in basis order.
pub fn ldiagrams_up_to(max_edges: usize, max_rows: usize) -> Vec<LabelledDiagram> {
    fn fill(n: usize, cells: usize, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cells == 0 {
            if n == 0 {
                out.push(acc.clone());
            }
            return;
        }
        for x in 0..=n {
            acc.push(x as u32);
            fill(n - x, cells - 1, acc, out);
            acc.pop();
        }
    }
    let mut out = vec![LabelledDiagram::empty()];
    for n in 1..=max_edges {
        for p in 1..=max_rows.min(n) {
            for q in 1..=n {
                let mut fills = Vec::new();
                fill(n, p * q, &mut Vec::new(), &mut fills);
                for entries in fills {
                    let rows = entries.chunks(q).map(<[u32]>::to_vec).collect();
                    if let Ok(d) = LabelledDiagram::from_rows(rows) {
                        out.push(d);
                    }
                }
            }
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[&[u32]]) -> LabelledDiagram {
        LabelledDiagram::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    /// Exhaustive minimum over every row and column permutation.
    fn brute_canonical(d: &LabelledDiagram) -> LabelledDiagram {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            perms(n - 1)
                .into_iter()
                .flat_map(|p| {
                    (0..n).map(move |k| {
                        let mut q = p.clone();
                        q.insert(k, n - 1);
                        q
                    })
                })
                .collect()
        }
        let mut best: Option<LabelledDiagram> = None;
        for r in perms(d.rows()) {
            for c in perms(d.cols()) {
                let img = d.permuted(&r, &c);
                if best.as_ref().is_none_or(|b| img.entries < b.entries) {
                    best = Some(img);
                }
            }
        }
        best.unwrap()
    }

    #[test]
    fn parse_and_print() {
        let d: LabelledDiagram = " [[0, 2,1,0],[1,1,3,0],[0,0,1,2]]".parse().unwrap();
        assert_eq!(d.to_string(), "[[0,2,1,0],[1,1,3,0],[0,0,1,2]]");
        assert_eq!(d.degree(), 11);
        assert_eq!("1".parse::<LabelledDiagram>().unwrap(), LabelledDiagram::empty());
        assert!(matches!("[[1,0],[0,0]]".parse::<LabelledDiagram>(), Err(Error::MalformedMatrix(_))));
        assert!(matches!("[[1,0],[1]]".parse::<LabelledDiagram>(), Err(Error::MalformedMatrix(_))));
        assert!("[[1,x]]".parse::<LabelledDiagram>().is_err());
    }

    #[test]
    fn concat_examples() {
        assert_eq!(ldiag_concat(&m(&[&[2]]), &m(&[&[1]])), m(&[&[2, 0], &[0, 1]]));
        let d = m(&[&[1, 2], &[0, 1]]);
        assert_eq!(ldiag_concat(&d, &LabelledDiagram::empty()), d);
        assert_eq!(ldiag_concat(&LabelledDiagram::empty(), &d), d);
        assert_eq!(ldiag_concat(&m(&[&[1]]), &m(&[&[1]])), m(&[&[1, 0], &[0, 1]]));
        assert_ne!(
            ldiag_concat(&m(&[&[1]]), &m(&[&[2]])),
            ldiag_concat(&m(&[&[2]]), &m(&[&[1]]))
        );
    }

    #[test]
    fn restrict_examples() {
        let d = m(&[&[0, 2, 1, 0], &[1, 1, 3, 0], &[0, 0, 1, 2]]);
        assert_eq!(ldiag_restrict(&d, &[1, 3]).unwrap(), m(&[&[2, 1, 0], &[0, 1, 2]]));
        assert_eq!(ldiag_restrict(&d, &[1, 2, 3]).unwrap(), d);
        assert_eq!(ldiag_restrict(&m(&[&[1]]), &[]).unwrap(), LabelledDiagram::empty());
        assert!(matches!(ldiag_restrict(&d, &[4]), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn canonical_examples() {
        let cross = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(diag_canonical(&cross).unwrap().canon(), &cross);
        let a = m(&[&[1, 1, 3, 0], &[0, 2, 1, 0], &[0, 0, 1, 2]]);
        let b = m(&[&[0, 2, 1, 0], &[1, 1, 3, 0], &[0, 0, 1, 2]]);
        assert_eq!(diag_canonical(&a).unwrap(), diag_canonical(&b).unwrap());
        assert_eq!(diag_canonical(&LabelledDiagram::empty()).unwrap(), Diagram::empty());
    }

    #[test]
    fn canonical_size_limit() {
        let wide = LabelledDiagram::from_rows(vec![vec![1; 9]]).unwrap();
        assert!(matches!(diag_canonical(&wide), Err(Error::SizeLimit { .. })));
        assert!(diag_canonical_bounded(&wide, 9).is_ok());
    }

    #[test]
    fn spot_type_examples() {
        let d = m(&[&[0, 2, 1, 0], &[1, 1, 3, 0], &[0, 0, 1, 2]]);
        let (alpha, beta) = spot_types(&d);
        assert_eq!(alpha, BTreeMap::from([(1, 1), (2, 1), (3, 1), (5, 1)]));
        assert_eq!(beta, BTreeMap::from([(3, 2), (5, 1)]));
        assert_eq!(spot_types(&m(&[&[1]])), (BTreeMap::from([(1, 1)]), BTreeMap::from([(1, 1)])));
        assert_eq!(spot_types(&m(&[&[2]])), (BTreeMap::from([(2, 1)]), BTreeMap::from([(2, 1)])));
    }

    #[test]
    fn partitions_to_diagram() {
        let p = |b: &[&[usize]]| SetPartition::from_blocks(b.iter().map(|x| x.to_vec()).collect()).unwrap();
        let p1 = p(&[&[2, 3, 5], &[1, 4, 6, 7, 8], &[9, 10, 11]]);
        let p2 = p(&[&[1], &[2, 3, 4], &[5, 6, 7, 8, 9], &[10, 11]]);
        let d = diagram_from_partitions(&p1, &p2).unwrap();
        assert_eq!(d, m(&[&[1, 1, 3, 0], &[0, 2, 1, 0], &[0, 0, 1, 2]]));
        assert_eq!(
            diag_canonical(&d).unwrap(),
            diag_canonical(&m(&[&[0, 2, 1, 0], &[1, 1, 3, 0], &[0, 0, 1, 2]])).unwrap()
        );
        assert_eq!(diagram_from_partitions(&p(&[&[1]]), &p(&[&[1]])).unwrap(), m(&[&[1]]));
        assert_eq!(
            diagram_from_partitions(&p(&[&[1], &[2]]), &p(&[&[1, 2]])).unwrap(),
            m(&[&[1], &[1]])
        );
        assert!(matches!(
            diagram_from_partitions(&p(&[&[1]]), &p(&[&[1, 2]])),
            Err(Error::PartitionMismatch { left: 1, right: 2 })
        ));
    }

    #[test]
    fn small_corpus() {
        let c = ldiagrams_up_to(2, 2);
        // empty, [[1]], [[2]], [[1,1]], [[1],[1]], [[1,0],[0,1]], [[0,1],[1,0]]
        assert_eq!(c.len(), 7);
        assert!(c.windows(2).all(|w| w[0] < w[1]));
    }

    fn arb_diagram() -> impl Strategy<Value = LabelledDiagram> {
        (1usize..=4, 1usize..=4)
            .prop_flat_map(|(p, q)| prop::collection::vec(0u32..3, p * q).prop_map(move |e| (p, q, e)))
            .prop_map(|(p, q, e)| LabelledDiagram::packed(p, q, e))
    }

    proptest! {
        #[test]
        fn canonical_matches_exhaustive_minimum(d in arb_diagram()) {
            let canon = diag_canonical(&d).unwrap();
            prop_assert_eq!(canon.canon(), &brute_canonical(&d));
        }

        #[test]
        fn canonical_ignores_permutations(d in arb_diagram(), seed in any::<u64>()) {
            let mut r: Vec<usize> = (0..d.rows()).collect();
            let mut c: Vec<usize> = (0..d.cols()).collect();
            let (nr, nc) = (r.len().max(1), c.len().max(1));
            r.rotate_left(seed as usize % nr);
            c.reverse();
            c.rotate_left((seed >> 8) as usize % nc);
            let img = d.permuted(&r, &c);
            prop_assert_eq!(diag_canonical(&img).unwrap(), diag_canonical(&d).unwrap());
        }

        #[test]
        fn concat_monoid_laws(a in arb_diagram(), b in arb_diagram(), c in arb_diagram()) {
            prop_assert_eq!(ldiag_concat(&ldiag_concat(&a, &b), &c), ldiag_concat(&a, &ldiag_concat(&b, &c)));
            prop_assert_eq!(ldiag_concat(&a, &b).degree(), a.degree() + b.degree());
            prop_assert_eq!(
                diag_canonical(&ldiag_concat(&a, &b)).unwrap(),
                diag_canonical(&ldiag_concat(&b, &a)).unwrap()
            );
        }

        #[test]
        fn complementary_restrictions_split_edges(d in arb_diagram(), mask in any::<u64>()) {
            let full = (1u64 << d.rows()) - 1;
            let i = d.restrict_mask(mask & full);
            let j = d.restrict_mask(!mask & full);
            prop_assert_eq!(i.degree() + j.degree(), d.degree());
            prop_assert_eq!(d.restrict_mask(full), d);
        }
    }
}

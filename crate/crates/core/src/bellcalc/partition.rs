use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Default bound on `n` for exhaustive partition enumeration.
pub const DEFAULT_PARTITION_BOUND: usize = 12;

/// An unordered partition of `[1..n]`, blocks sorted internally and ordered
/// by their minimal element.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

/// Block-size multi-index: size ↦ number of blocks of that size.
pub type PartitionType = BTreeMap<usize, usize>;

impl SetPartition {
    /// Validates that `blocks` are non-empty, disjoint and cover `[1..n]`.
    pub fn from_blocks(mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for b in &mut blocks {
            if b.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            b.sort_unstable();
            for &x in b.iter() {
                if x == 0 || x > n || seen[x] {
                    return Err(Error::InvalidPartition(format!(
                        "{x} is repeated or outside 1..={n}"
                    )));
                }
                seen[x] = true;
            }
        }
        blocks.sort_by_key(|b| b[0]);
        Ok(SetPartition { n, blocks })
    }

    /// From a restricted growth string `a` with `a[0] = 0` and
    /// `a[i] ≤ 1 + max(a[..i])`.
    fn from_rgs(rgs: &[usize]) -> Self {
        let k = rgs.iter().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); k];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].push(i + 1);
        }
        SetPartition {
            n: rgs.len(),
            blocks,
        }
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn partition_type(&self) -> PartitionType {
        let mut t = PartitionType::new();
        for b in &self.blocks {
            *t.entry(b.len()).or_insert(0) += 1;
        }
        t
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("{")?;
            for (j, x) in b.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("}")?;
        }
        f.write_str("}")
    }
}

/// Calls `visit` on every partition of `[1..n]` in restricted-growth-string
/// order.
pub fn for_each_set_partition<F: FnMut(&SetPartition)>(n: usize, mut visit: F) {
    if n == 0 {
        visit(&SetPartition {
            n: 0,
            blocks: Vec::new(),
        });
        return;
    }
    let mut rgs = vec![0usize; n];
    // maxes[i] = max(rgs[..=i])
    let mut maxes = vec![0usize; n];
    loop {
        visit(&SetPartition::from_rgs(&rgs));
        // rightmost position that can still be incremented
        let Some(i) = (1..n).rev().find(|&i| rgs[i] <= maxes[i - 1]) else {
            return;
        };
        rgs[i] += 1;
        maxes[i] = maxes[i - 1].max(rgs[i]);
        for j in i + 1..n {
            rgs[j] = 0;
            maxes[j] = maxes[i];
        }
    }
}

pub fn set_partitions(n: usize) -> Result<Vec<SetPartition>> {
    set_partitions_bounded(n, DEFAULT_PARTITION_BOUND)
}

pub fn set_partitions_bounded(n: usize, bound: usize) -> Result<Vec<SetPartition>> {
    if n > bound {
        return Err(Error::SizeLimit {
            what: format!("partitions of [1..{n}]"),
            bound,
        });
    }
    let mut out = Vec::new();
    for_each_set_partition(n, |p| out.push(p.clone()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    /// Every partition of [1..n] by inserting n into a partition of [1..n-1].
    fn by_insertion(n: usize) -> BTreeSet<Vec<Vec<usize>>> {
        if n == 0 {
            return BTreeSet::from([vec![]]);
        }
        let mut out = BTreeSet::new();
        for p in by_insertion(n - 1) {
            for i in 0..p.len() {
                let mut q = p.clone();
                q[i].push(n);
                out.insert(q);
            }
            let mut q = p.clone();
            q.push(vec![n]);
            out.insert(q);
        }
        out
    }

    #[test]
    fn counts() {
        assert_eq!(set_partitions(0).unwrap().len(), 1);
        assert_eq!(set_partitions(3).unwrap().len(), 5);
        assert_eq!(set_partitions(4).unwrap().len(), 15);
        assert!(matches!(set_partitions(13), Err(Error::SizeLimit { .. })));
    }

    #[test]
    fn enumeration_is_exhaustive_and_duplicate_free() {
        for n in 0..=7 {
            let ps = set_partitions(n).unwrap();
            let as_blocks: BTreeSet<Vec<Vec<usize>>> =
                ps.iter().map(|p| p.blocks().to_vec()).collect();
            assert_eq!(as_blocks.len(), ps.len());
            assert_eq!(as_blocks, by_insertion(n));
        }
    }

    #[test]
    fn types_and_validation() {
        let p = SetPartition::from_blocks(vec![vec![5, 3, 2], vec![1, 4, 6, 7, 8], vec![9, 10, 11]]).unwrap();
        assert_eq!(p.blocks()[0], vec![1, 4, 6, 7, 8]);
        assert_eq!(p.partition_type(), PartitionType::from([(3, 2), (5, 1)]));
        assert_eq!(p.to_string(), "{{1,4,6,7,8},{2,3,5},{9,10,11}}");
        assert!(SetPartition::from_blocks(vec![vec![1], vec![1]]).is_err());
        assert!(SetPartition::from_blocks(vec![vec![1], vec![3]]).is_err());
        assert!(SetPartition::from_blocks(vec![vec![]]).is_err());
    }
}

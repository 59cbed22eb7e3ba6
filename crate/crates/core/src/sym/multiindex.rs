use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: usize = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// Number of monomials of degree `k` in `n` variables.
pub fn sym_dim(n: usize, k: usize) -> usize {
    if n == 0 {
        return usize::from(k == 0);
    }
    binomial(n + k - 1, k)
}

/// A nondecreasing tuple of variable indices, i.e. a monomial of `Sym^k V`.
///
/// Ranks are colexicographic: `rank(mu) = sum_i C(mu_i + i - 1, i)` with
/// 1-based positions, which does not depend on `n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MultiIndex(Vec<usize>);

impl MultiIndex {
    pub fn new(mut idx: Vec<usize>) -> Self {
        idx.sort_unstable();
        MultiIndex(idx)
    }

    pub fn empty() -> Self {
        MultiIndex(Vec::new())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.0.iter().enumerate().map(|(i, &m)| binomial(m + i, i + 1)).sum()
    }

    pub fn unrank(rank: usize, n: usize, k: usize) -> Result<Self> {
        let dim = sym_dim(n, k);
        if rank >= dim {
            return Err(Error::RankOutOfRange { rank, n, k, dim });
        }
        let mut r = rank;
        let mut out = vec![0; k];
        for i in (1..=k).rev() {
            // largest c with C(c, i) <= r
            let mut c = i - 1;
            while binomial(c + 1, i) <= r {
                c += 1;
            }
            r -= binomial(c, i);
            out[i - 1] = c + 1 - i;
        }
        Ok(MultiIndex(out))
    }

    /// The index with `j` added.
    pub fn with(&self, j: usize) -> Self {
        let pos = self.0.partition_point(|&x| x <= j);
        let mut v = self.0.clone();
        v.insert(pos, j);
        MultiIndex(v)
    }

    /// The index with one occurrence of `j` removed, if present.
    pub fn without(&self, j: usize) -> Option<Self> {
        let pos = self.0.iter().position(|&x| x == j)?;
        let mut v = self.0.clone();
        v.remove(pos);
        Some(MultiIndex(v))
    }

    /// All indices of length `k` over `n` variables, in rank order.
    pub fn all(n: usize, k: usize) -> AllIndices {
        AllIndices { n, cur: if n == 0 && k > 0 { None } else { Some(vec![0; k]) } }
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

pub struct AllIndices {
    n: usize,
    cur: Option<Vec<usize>>,
}

impl Iterator for AllIndices {
    type Item = MultiIndex;

    fn next(&mut self) -> Option<MultiIndex> {
        let cur = self.cur.as_mut()?;
        let out = MultiIndex(cur.clone());
        let k = cur.len();
        let mut advanced = false;
        for i in 0..k {
            let cap = if i + 1 < k { cur[i + 1] } else { self.n - 1 };
            if cur[i] < cap {
                cur[i] += 1;
                cur[..i].iter_mut().for_each(|x| *x = 0);
                advanced = true;
                break;
            }
        }
        if !advanced {
            self.cur = None;
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_matches_rank() {
        for n in 1..6 {
            for k in 0..5 {
                let all: Vec<_> = MultiIndex::all(n, k).collect();
                assert_eq!(all.len(), sym_dim(n, k));
                for (r, mu) in all.iter().enumerate() {
                    assert_eq!(mu.rank(), r);
                    assert_eq!(&MultiIndex::unrank(r, n, k).unwrap(), mu);
                }
            }
        }
    }
}

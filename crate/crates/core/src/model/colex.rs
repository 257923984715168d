//! Colexicographic order on finite vertex sets, plus ranking and the
//! enumerators that drive greedy completion and sampling.

use std::cmp::Ordering;

use crate::error::{BergeError, Result};

/// Colex comparison of two ascending vertex lists: `a < b` iff the largest
/// element of the symmetric difference lies in `b`.
pub fn colex_cmp(a: &[usize], b: &[usize]) -> Ordering {
    // Lexicographic on the reversed sequences; a proper suffix sorts first.
    a.iter().rev().cmp(b.iter().rev())
}

/// `C(n, k)` in u64, `None` on overflow.
pub fn binomial(n: usize, k: usize) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

/// Binomial that saturates instead of failing; only used for size guards.
pub(crate) fn binomial_saturating(n: usize, k: usize) -> u64 {
    binomial(n, k).unwrap_or(u64::MAX)
}

/// Position of an ascending set among all sets of its size in colex order.
pub fn colex_rank(set: &[usize]) -> Option<u64> {
    let mut rank: u64 = 0;
    for (i, &x) in set.iter().enumerate() {
        rank = rank.checked_add(binomial(x, i + 1)?)?;
    }
    Some(rank)
}

/// Inverse of [`colex_rank`] for `k`-sets.
pub fn colex_unrank(mut rank: u64, k: usize) -> Vec<usize> {
    let mut out = vec![0; k];
    for i in (0..k).rev() {
        // largest x with C(x, i+1) <= rank
        let mut x = i;
        while binomial(x + 1, i + 1).is_some_and(|c| c <= rank) {
            x += 1;
        }
        rank -= binomial(x, i + 1).unwrap_or(0);
        out[i] = x;
    }
    out
}

/// Streams every `r`-subset of `{0,…,n−1}` in strictly increasing colex order.
#[derive(Debug, Clone)]
pub struct ColexSubsets {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Iterator for ColexSubsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.current.take()?;
        let r = cur.len();
        let mut succ = cur.clone();
        let mut i = 0;
        loop {
            if i == r {
                break;
            }
            let limit = if i + 1 < r { succ[i + 1] } else { self.n };
            if succ[i] + 1 < limit {
                succ[i] += 1;
                for (j, slot) in succ.iter_mut().enumerate().take(i) {
                    *slot = j;
                }
                self.current = Some(succ);
                break;
            }
            i += 1;
        }
        Some(cur)
    }
}

/// Colex stream of `r`-subsets of an `n`-set.
pub fn colex_enumerate(n: usize, r: usize) -> Result<ColexSubsets> {
    if r == 0 || r > n {
        return Err(BergeError::Precondition(format!(
            "colex enumeration needs 0 < r <= n (got n={n}, r={r})"
        )));
    }
    Ok(ColexSubsets {
        n,
        current: Some((0..r).collect()),
    })
}

/// Streams every `r`-subset of `{0,…,n−1}` in lexicographic order.
#[derive(Debug, Clone)]
pub struct LexSubsets {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Iterator for LexSubsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.current.take()?;
        let r = cur.len();
        let mut succ = cur.clone();
        if let Some(i) = (0..r).rev().find(|&i| succ[i] < self.n - r + i) {
            succ[i] += 1;
            for j in i + 1..r {
                succ[j] = succ[j - 1] + 1;
            }
            self.current = Some(succ);
        }
        Some(cur)
    }
}

pub fn lex_enumerate(n: usize, r: usize) -> Result<LexSubsets> {
    if r == 0 || r > n {
        return Err(BergeError::Precondition(format!(
            "lex enumeration needs 0 < r <= n (got n={n}, r={r})"
        )));
    }
    Ok(LexSubsets {
        n,
        current: Some((0..r).collect()),
    })
}

//! Small helpers for element sets stored as `u64` masks.

use alloc::vec::Vec;

/// A set of element indices, bit `i` standing for element `i`.
pub type ElemSet = u64;

#[inline]
#[must_use]
pub const fn full(n: usize) -> ElemSet {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
#[must_use]
pub fn count(s: ElemSet) -> usize {
    s.count_ones() as usize
}

/// Indices of the set bits, ascending.
pub fn members(mut s: ElemSet) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if s == 0 {
            None
        } else {
            let i = s.trailing_zeros() as usize;
            s &= s - 1;
            Some(i)
        }
    })
}

/// Removes the columns in `drop` from `mask`, shifting the survivors down.
#[must_use]
pub fn squeeze(mask: u64, drop: ElemSet, n: usize) -> u64 {
    let mut out = 0u64;
    let mut j = 0;
    for i in 0..n {
        if drop >> i & 1 == 1 {
            continue;
        }
        if mask >> i & 1 == 1 {
            out |= 1 << j;
        }
        j += 1;
    }
    out
}

/// Rank of a family of GF(2) vectors.
#[must_use]
pub fn rank_of_vectors(vs: impl IntoIterator<Item = u64>) -> usize {
    let mut basis: [u64; 64] = [0; 64];
    let mut r = 0;
    for mut v in vs {
        while v != 0 {
            let h = 63 - v.leading_zeros() as usize;
            if basis[h] == 0 {
                basis[h] = v;
                r += 1;
                break;
            }
            v ^= basis[h];
        }
    }
    r
}

/// Reduced row echelon form of mask rows over `n` columns, pivots leftmost, zero rows dropped.
#[must_use]
pub fn rref_masks(mut rows: Vec<u64>, n: usize) -> Vec<u64> {
    let mut next = 0;
    for c in 0..n {
        if next == rows.len() {
            break;
        }
        let bit = 1u64 << c;
        let Some(p) = (next..rows.len()).find(|&r| rows[r] & bit != 0) else {
            continue;
        };
        rows.swap(p, next);
        let pivot = rows[next];
        for (r, row) in rows.iter_mut().enumerate() {
            if r != next && *row & bit != 0 {
                *row ^= pivot;
            }
        }
        next += 1;
    }
    rows.truncate(next);
    rows
}

/// All `k`-subsets of `pool` (given as an ordered slice of indices) in lexicographic order.
pub struct Combinations<'a> {
    pool: &'a [usize],
    idx: Vec<usize>,
    done: bool,
}

impl<'a> Combinations<'a> {
    #[must_use]
    pub fn new(pool: &'a [usize], k: usize) -> Self {
        Self {
            pool,
            idx: (0..k).collect(),
            done: k > pool.len(),
        }
    }
}

impl Iterator for Combinations<'_> {
    type Item = ElemSet;

    fn next(&mut self) -> Option<ElemSet> {
        if self.done {
            return None;
        }
        let set = self.idx.iter().fold(0u64, |s, &i| s | 1 << self.pool[i]);
        let k = self.idx.len();
        let n = self.pool.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(set)
    }
}

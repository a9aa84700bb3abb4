//! Dense bit-packed matrices over the two-element field.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

/// Row-major matrix over GF(2), 64 entries per word.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl Gf2Matrix {
    #[must_use]
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = cols.div_ceil(WORD);
        Self {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    #[must_use]
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix entry by entry.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Self::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                if f(r, c) {
                    m.set(r, c, true);
                }
            }
        }
        m
    }

    /// Parses rows written as strings of '0' and '1'. All rows must have equal length.
    pub fn from_strs(rows: &[&str]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(rows.len(), cols);
        for (r, s) in rows.iter().enumerate() {
            if s.len() != cols {
                return Err(Error::Dimension {
                    expected: cols,
                    found: s.len(),
                });
            }
            for (c, ch) in s.bytes().enumerate() {
                match ch {
                    b'0' => {}
                    b'1' => m.set(r, c, true),
                    _ => {
                        return Err(Error::Parse {
                            line: r + 1,
                            message: alloc::format!("unexpected character {:?}", ch as char),
                        })
                    }
                }
            }
        }
        Ok(m)
    }

    /// Builds a matrix whose row `r` has bit `c` of `rows[r]` in column `c`.
    pub fn from_masks(rows: &[u64], cols: usize) -> Self {
        assert!(cols <= WORD, "mask rows hold at most 64 columns");
        let mut m = Self::zeros(rows.len(), cols);
        let keep = if cols == WORD {
            u64::MAX
        } else {
            (1u64 << cols) - 1
        };
        for (r, &mask) in rows.iter().enumerate() {
            if m.stride > 0 {
                m.data[r * m.stride] = mask & keep;
            }
        }
        m
    }

    #[inline]
    #[must_use]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    #[must_use]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    #[must_use]
    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols);
        self.data[r * self.stride + c / WORD] >> (c % WORD) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(r < self.rows && c < self.cols);
        let w = &mut self.data[r * self.stride + c / WORD];
        let bit = 1u64 << (c % WORD);
        if value {
            *w |= bit;
        } else {
            *w &= !bit;
        }
    }

    #[inline]
    fn row_words(&self, r: usize) -> &[u64] {
        &self.data[r * self.stride..(r + 1) * self.stride]
    }

    fn row_is_zero(&self, r: usize) -> bool {
        self.row_words(r).iter().all(|&w| w == 0)
    }

    fn xor_row_into(&mut self, src: usize, dst: usize) {
        for k in 0..self.stride {
            let v = self.data[src * self.stride + k];
            self.data[dst * self.stride + k] ^= v;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for k in 0..self.stride {
            self.data.swap(a * self.stride + k, b * self.stride + k);
        }
    }

    /// Row `r` as a 64-bit mask. Only valid when `cols <= 64`.
    #[must_use]
    pub fn row_mask(&self, r: usize) -> u64 {
        assert!(self.cols <= WORD);
        if self.stride == 0 {
            0
        } else {
            self.data[r * self.stride]
        }
    }

    #[must_use]
    pub fn row_bits(&self, r: usize) -> Vec<bool> {
        (0..self.cols).map(|c| self.get(r, c)).collect()
    }

    #[must_use]
    pub fn column_bits(&self, c: usize) -> Vec<bool> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    #[must_use]
    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r))
    }

    /// Matrix with `bits` appended as a new bottom row.
    pub fn with_row(&self, bits: &[bool]) -> Result<Self> {
        if bits.len() != self.cols {
            return Err(Error::Dimension {
                expected: self.cols,
                found: bits.len(),
            });
        }
        let mut m = Self::zeros(self.rows + 1, self.cols);
        m.data[..self.data.len()].copy_from_slice(&self.data);
        for (c, &b) in bits.iter().enumerate() {
            if b {
                m.set(self.rows, c, true);
            }
        }
        Ok(m)
    }

    /// Columns `cols[0], cols[1], ...` of `self`, in that order.
    #[must_use]
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        Self::from_fn(self.rows, cols.len(), |r, c| self.get(r, cols[c]))
    }

    /// Reduced row echelon form with zero rows removed, plus the pivot columns.
    ///
    /// Pivots are taken left to right; within a column the topmost available row wins.
    #[must_use]
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut next = 0;
        for c in 0..m.cols {
            if next == m.rows {
                break;
            }
            let Some(p) = (next..m.rows).find(|&r| m.get(r, c)) else {
                continue;
            };
            m.swap_rows(p, next);
            for r in 0..m.rows {
                if r != next && m.get(r, c) {
                    m.xor_row_into(next, r);
                }
            }
            pivots.push(c);
            next += 1;
        }
        debug_assert!((next..m.rows).all(|r| m.row_is_zero(r)));
        m.rows = next;
        m.data.truncate(next * m.stride);
        (m, pivots)
    }

    #[must_use]
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Whether `v` is a sum of rows of `self`.
    pub fn in_row_space(&self, v: &[bool]) -> Result<bool> {
        if v.len() != self.cols {
            return Err(Error::Dimension {
                expected: self.cols,
                found: v.len(),
            });
        }
        let (red, pivots) = self.rref();
        let mut probe = Self::zeros(1, self.cols);
        for (c, &b) in v.iter().enumerate() {
            if b {
                probe.set(0, c, true);
            }
        }
        for (i, &p) in pivots.iter().enumerate() {
            if probe.get(0, p) {
                for k in 0..self.stride {
                    probe.data[k] ^= red.data[i * red.stride + k];
                }
            }
        }
        Ok(probe.row_is_zero(0))
    }

    /// `[I_r | D]` together with `perm`, where output column `j` is input column `perm[j]`.
    #[must_use]
    pub fn standard_form(&self) -> (Self, Vec<usize>) {
        let (red, pivots) = self.rref();
        let mut perm = pivots.clone();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        perm.extend((0..self.cols).filter(|&c| !is_pivot[c]));
        (red.select_columns(&perm), perm)
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf2Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            for c in 0..self.cols {
                f.write_str(if self.get(r, c) { "1" } else { "0" })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Header line "rows cols", then one row of '0'/'1' per line.
impl fmt::Display for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.rows, self.cols)?;
        for r in 0..self.rows {
            for c in 0..self.cols {
                f.write_str(if self.get(r, c) { "1" } else { "0" })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_drops_zero_rows() {
        let m = Gf2Matrix::from_strs(&["110", "110", "011"]).unwrap();
        let (r, p) = m.rref();
        assert_eq!(r, Gf2Matrix::from_strs(&["101", "011"]).unwrap());
        assert_eq!(p, vec![0, 1]);
    }

    #[test]
    fn wide_rows_span_words() {
        let mut m = Gf2Matrix::zeros(2, 130);
        m.set(0, 129, true);
        m.set(1, 129, true);
        m.set(1, 3, true);
        let (r, p) = m.rref();
        assert_eq!(p, vec![3, 129]);
        assert!(r.get(0, 3) && !r.get(0, 129));
    }

    #[test]
    fn standard_form_records_permutation() {
        let m = Gf2Matrix::from_strs(&["011", "110"]).unwrap();
        let (s, perm) = m.standard_form();
        assert_eq!(perm, vec![0, 1, 2]);
        assert_eq!(s, Gf2Matrix::from_strs(&["101", "011"]).unwrap());
    }

    #[test]
    fn display_has_header() {
        let m = Gf2Matrix::identity(2);
        assert_eq!(alloc::format!("{m}"), "2 2\n10\n01\n");
    }
}

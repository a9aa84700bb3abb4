//! Binary matroids on labeled ground sets.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bits::{self, ElemSet};
use crate::error::{Error, Result};
use crate::gf2::Gf2Matrix;
use crate::iso;

/// Most elements a matroid may carry; element sets are single words.
pub const MAX_ELEMENTS: usize = 64;

/// A binary matroid: labels plus a GF(2) representation kept in reduced row echelon form.
///
/// Bit `i` of every row is the entry in the column of element `i`. Rows are independent and
/// the pivot of each row is its lowest set bit, so the rows form `[I_r | D]` once the pivot
/// columns are moved to the front.
#[derive(Clone)]
pub struct BinaryMatroid {
    labels: Vec<String>,
    rows: Vec<u64>,
}

/// Isomorphism invariant: equal for isomorphic matroids, not necessarily different otherwise.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Signature {
    pub elements: usize,
    pub rank: usize,
    /// Entry `s` counts circuits of size `s`.
    pub circuit_sizes: Vec<u32>,
    /// For every element, the number of circuits of each size through it; sorted.
    pub profile: Vec<Vec<u32>>,
}

fn check_labels<S: AsRef<str>>(labels: &[S]) -> Result<Vec<String>> {
    if labels.len() > MAX_ELEMENTS {
        return Err(Error::Dimension {
            expected: MAX_ELEMENTS,
            found: labels.len(),
        });
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(labels.len());
    for l in labels {
        let l = l.as_ref();
        if l.is_empty() || l.chars().any(char::is_whitespace) {
            return Err(Error::Label(format!("invalid label {l:?}")));
        }
        if !seen.insert(l) {
            return Err(Error::Label(format!("duplicate label {l}")));
        }
        out.push(l.to_string());
    }
    Ok(out)
}

impl BinaryMatroid {
    /// Vector matroid of the columns of `m`, column `i` labeled `labels[i]`.
    pub fn from_matrix<S: AsRef<str>>(labels: &[S], m: &Gf2Matrix) -> Result<Self> {
        if labels.len() != m.cols() {
            return Err(Error::Dimension {
                expected: m.cols(),
                found: labels.len(),
            });
        }
        let labels = check_labels(labels)?;
        let rows = (0..m.rows()).map(|r| m.row_mask(r)).collect();
        Ok(Self::from_parts(labels, rows))
    }

    /// Rows given as element masks; they need not be reduced or independent.
    pub fn from_rows<S: AsRef<str>>(labels: &[S], rows: &[u64]) -> Result<Self> {
        let labels = check_labels(labels)?;
        let all = bits::full(labels.len());
        if let Some(bad) = rows.iter().find(|&&r| r & !all != 0) {
            return Err(Error::Dimension {
                expected: labels.len(),
                found: 64 - bad.leading_zeros() as usize,
            });
        }
        Ok(Self::from_parts(labels, rows.to_vec()))
    }

    pub(crate) fn from_parts(labels: Vec<String>, rows: Vec<u64>) -> Self {
        let n = labels.len();
        Self {
            rows: bits::rref_masks(rows, n),
            labels,
        }
    }

    /// Every element a coloop.
    pub fn free<S: AsRef<str>>(labels: &[S]) -> Result<Self> {
        let rows: Vec<u64> = (0..labels.len()).map(|i| 1u64 << i).collect();
        Self::from_rows(labels, &rows)
    }

    #[inline]
    #[must_use]
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    #[inline]
    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    #[inline]
    #[must_use]
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    #[must_use]
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    #[must_use]
    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    #[must_use]
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    #[inline]
    #[must_use]
    pub fn ground(&self) -> ElemSet {
        bits::full(self.len())
    }

    /// Reduced rows as element masks.
    #[inline]
    #[must_use]
    pub fn row_masks(&self) -> &[u64] {
        &self.rows
    }

    /// Element set for a list of labels.
    pub fn set_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<ElemSet> {
        let mut s = 0;
        for l in labels {
            let l = l.as_ref();
            let i = self
                .index_of(l)
                .ok_or_else(|| Error::Label(format!("unknown element {l}")))?;
            s |= 1 << i;
        }
        Ok(s)
    }

    /// Labels of the members of `s`, in element order.
    #[must_use]
    pub fn labels_of(&self, s: ElemSet) -> Vec<String> {
        bits::members(s).map(|i| self.labels[i].clone()).collect()
    }

    /// Representation in element order (reduced row echelon form).
    #[must_use]
    pub fn rep(&self) -> Gf2Matrix {
        Gf2Matrix::from_masks(&self.rows, self.len())
    }

    /// `[I_r | D]` and the permutation taking output columns to elements.
    #[must_use]
    pub fn standard_rep(&self) -> (Gf2Matrix, Vec<usize>) {
        self.rep().standard_form()
    }

    /// Column of element `e` as a mask over rows.
    #[inline]
    #[must_use]
    pub fn column(&self, e: usize) -> u64 {
        self.rows
            .iter()
            .enumerate()
            .fold(0, |c, (r, row)| c | ((row >> e & 1) << r))
    }

    #[must_use]
    pub fn columns(&self) -> Vec<u64> {
        (0..self.len()).map(|e| self.column(e)).collect()
    }

    #[must_use]
    pub fn rank_of(&self, s: ElemSet) -> usize {
        bits::rank_of_vectors(bits::members(s).map(|e| self.column(e)))
    }

    #[must_use]
    pub fn is_independent(&self, s: ElemSet) -> bool {
        self.rank_of(s) == bits::count(s)
    }

    fn pivot_set(&self) -> ElemSet {
        self.rows.iter().fold(0, |s, r| s | (r & r.wrapping_neg()))
    }

    /// A basis of the cycle space (the row space of the dual).
    #[must_use]
    pub fn cycle_basis(&self) -> Vec<u64> {
        let pivots = self.pivot_set();
        bits::members(self.ground() & !pivots)
            .map(|j| {
                self.rows
                    .iter()
                    .filter(|row| *row >> j & 1 == 1)
                    .fold(1u64 << j, |v, row| v | (row & row.wrapping_neg()))
            })
            .collect()
    }

    /// Circuits as element sets, sorted by size then mask.
    ///
    /// Walks the whole cycle space, so the cost is `2^(|E| - r)`.
    #[must_use]
    pub fn circuits(&self) -> Vec<ElemSet> {
        let cols = self.columns();
        circuits_of_space(&self.cycle_basis(), &cols)
    }

    /// Circuits of the dual.
    #[must_use]
    pub fn cocircuits(&self) -> Vec<ElemSet> {
        self.dual().circuits()
    }

    #[must_use]
    pub fn loops(&self) -> ElemSet {
        let used = self.rows.iter().fold(0, |s, r| s | r);
        self.ground() & !used
    }

    /// Elements in every basis.
    #[must_use]
    pub fn coloops(&self) -> ElemSet {
        self.rows
            .iter()
            .filter(|r| r.count_ones() == 1)
            .fold(0, |s, r| s | r)
    }

    /// Parallel classes of non-loops with at least two members.
    #[must_use]
    pub fn parallel_classes(&self) -> Vec<ElemSet> {
        classes_by_column(&self.columns(), self.loops())
    }

    /// Cocircuits of size exactly two.
    #[must_use]
    pub fn two_cocircuits(&self) -> Vec<ElemSet> {
        let d = self.dual();
        let mut out = Vec::new();
        for class in d.parallel_classes() {
            let m: Vec<usize> = bits::members(class).collect();
            for i in 0..m.len() {
                for j in i + 1..m.len() {
                    out.push(1 << m[i] | 1 << m[j]);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Restriction to the complement of `x`.
    #[must_use]
    pub fn delete_set(&self, x: ElemSet) -> Self {
        let n = self.len();
        let labels = (0..n)
            .filter(|i| x >> i & 1 == 0)
            .map(|i| self.labels[i].clone())
            .collect();
        let rows = self.rows.iter().map(|&r| bits::squeeze(r, x, n)).collect();
        Self::from_parts(labels, rows)
    }

    /// Contraction of `y`; dependent members of `y` (loops included) end up deleted.
    #[must_use]
    pub fn contract_set(&self, y: ElemSet) -> Self {
        let mut rows = self.rows.clone();
        for e in bits::members(y) {
            if let Some(p) = rows.iter().position(|r| r >> e & 1 == 1) {
                let pivot = rows.swap_remove(p);
                for r in &mut rows {
                    if *r >> e & 1 == 1 {
                        *r ^= pivot;
                    }
                }
            }
        }
        let n = self.len();
        let labels = (0..n)
            .filter(|i| y >> i & 1 == 0)
            .map(|i| self.labels[i].clone())
            .collect();
        let rows = rows.into_iter().map(|r| bits::squeeze(r, y, n)).collect();
        Self::from_parts(labels, rows)
    }

    pub fn delete<S: AsRef<str>>(&self, x: &[S]) -> Result<Self> {
        Ok(self.delete_set(self.set_of(x)?))
    }

    pub fn contract<S: AsRef<str>>(&self, y: &[S]) -> Result<Self> {
        Ok(self.contract_set(self.set_of(y)?))
    }

    /// The orthogonal matroid: `[D^T | I]` against `[I | D]`.
    #[must_use]
    pub fn dual(&self) -> Self {
        Self::from_parts(self.labels.clone(), self.cycle_basis())
    }

    /// Same matroid with element `i` renamed to `labels[i]`.
    pub fn with_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<Self> {
        if labels.len() != self.len() {
            return Err(Error::Dimension {
                expected: self.len(),
                found: labels.len(),
            });
        }
        Ok(Self {
            labels: check_labels(labels)?,
            rows: self.rows.clone(),
        })
    }

    /// Renames elements through `f`.
    pub fn relabel(&self, f: impl Fn(&str) -> String) -> Result<Self> {
        let labels: Vec<String> = self.labels.iter().map(|l| f(l)).collect();
        self.with_labels(&labels)
    }

    /// Elements reordered so that new element `j` is old element `order[j]`.
    #[must_use]
    pub fn permuted(&self, order: &[usize]) -> Self {
        assert_eq!(order.len(), self.len());
        let labels = order.iter().map(|&i| self.labels[i].clone()).collect();
        let rows = self
            .rows
            .iter()
            .map(|&r| {
                order
                    .iter()
                    .enumerate()
                    .fold(0u64, |m, (j, &i)| m | ((r >> i & 1) << j))
            })
            .collect();
        Self::from_parts(labels, rows)
    }

    /// Adds element `label` whose column (over the current rows) is `column`.
    pub fn extend(&self, label: &str, column: u64) -> Result<Self> {
        if self.index_of(label).is_some() {
            return Err(Error::Label(format!("element {label} already present")));
        }
        if self.rank() < 64 && column >> self.rank() != 0 {
            return Err(Error::Dimension {
                expected: self.rank(),
                found: 64 - column.leading_zeros() as usize,
            });
        }
        let n = self.len();
        let mut labels = self.labels.clone();
        labels.push(label.to_string());
        check_labels(&labels)?;
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(r, &row)| row | ((column >> r & 1) << n))
            .collect();
        Ok(Self::from_parts(labels, rows))
    }

    /// Adds a coloop named `label`.
    pub fn add_coloop(&self, label: &str) -> Result<Self> {
        if self.index_of(label).is_some() {
            return Err(Error::Label(format!("element {label} already present")));
        }
        let n = self.len();
        let mut labels = self.labels.clone();
        labels.push(label.to_string());
        check_labels(&labels)?;
        let mut rows = self.rows.clone();
        rows.push(1 << n);
        Ok(Self::from_parts(labels, rows))
    }

    /// Direct sum; labels must be disjoint.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        let n = self.len();
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        let labels = check_labels(&labels)?;
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().map(|r| r << n));
        Ok(Self::from_parts(labels, rows))
    }

    #[must_use]
    pub fn invariant_signature(&self) -> Signature {
        signature_from_circuits(self.len(), self.rank(), &self.circuits())
    }

    /// A bijection `self label -> other label` carrying circuits onto circuits, if one exists.
    #[must_use]
    pub fn is_isomorphic(&self, other: &Self) -> Option<Vec<(String, String)>> {
        if self.len() != other.len() || self.rank() != other.rank() {
            return None;
        }
        let a = iso::IsoData::new(self.len(), self.circuits());
        let b = iso::IsoData::new(other.len(), other.circuits());
        let map = iso::find(&a, &b)?;
        Some(
            map.iter()
                .enumerate()
                .map(|(i, &j)| (self.labels[i].clone(), other.labels[j].clone()))
                .collect(),
        )
    }

    /// Label-preserving equality: same ground set and same circuits.
    #[must_use]
    pub fn same_matroid(&self, other: &Self) -> bool {
        if self.len() != other.len() || self.rank() != other.rank() {
            return false;
        }
        if self.labels == other.labels {
            return self.rows == other.rows;
        }
        let mut order = Vec::with_capacity(self.len());
        for l in &other.labels {
            match self.index_of(l) {
                Some(i) => order.push(i),
                None => return false,
            }
        }
        self.permuted(&order).rows == other.rows
    }
}

impl PartialEq for BinaryMatroid {
    fn eq(&self, other: &Self) -> bool {
        self.same_matroid(other)
    }
}

impl Eq for BinaryMatroid {}

impl fmt::Debug for BinaryMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "BinaryMatroid[{}; rank {}]",
            self.labels.join(" "),
            self.rank()
        )?;
        for r in &self.rows {
            f.write_str(" ")?;
            for i in 0..self.len() {
                f.write_str(if r >> i & 1 == 1 { "1" } else { "0" })?;
            }
        }
        Ok(())
    }
}

pub(crate) fn classes_by_column(cols: &[u64], skip: ElemSet) -> Vec<ElemSet> {
    let mut out: Vec<ElemSet> = Vec::new();
    let mut done = skip;
    for i in 0..cols.len() {
        if done >> i & 1 == 1 {
            continue;
        }
        let mut class = 1u64 << i;
        for j in i + 1..cols.len() {
            if done >> j & 1 == 0 && cols[j] == cols[i] {
                class |= 1 << j;
            }
        }
        done |= class;
        if class.count_ones() > 1 {
            out.push(class);
        }
    }
    out
}

/// Minimal nonempty supports of the span of `basis`, sorted by size then mask.
pub(crate) fn circuits_of_space(basis: &[u64], cols: &[u64]) -> Vec<ElemSet> {
    let d = basis.len();
    assert!(d < 40, "cycle space too large to enumerate");
    let mut out = Vec::new();
    let mut v = 0u64;
    // Gray code walk over all nonzero combinations.
    for i in 1u64..(1u64 << d) {
        v ^= basis[i.trailing_zeros() as usize];
        let size = v.count_ones() as usize;
        if bits::rank_of_vectors(bits::members(v).map(|e| cols[e])) + 1 == size {
            out.push(v);
        }
    }
    out.sort_unstable_by_key(|&c| (c.count_ones(), c));
    out
}

pub(crate) fn signature_from_circuits(n: usize, rank: usize, circuits: &[ElemSet]) -> Signature {
    let mut sizes = vec![0u32; n + 1];
    let mut per = vec![vec![0u32; n + 1]; n];
    for &c in circuits {
        let s = c.count_ones() as usize;
        sizes[s] += 1;
        for e in bits::members(c) {
            per[e][s] += 1;
        }
    }
    per.sort();
    Signature {
        elements: n,
        rank,
        circuit_sizes: sizes,
        profile: per,
    }
}

//! Minor containment with replayable witnesses.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::bits::{self, Combinations, ElemSet};
use crate::error::{Error, Result};
use crate::iso::{self, IsoData};
use crate::matroid::BinaryMatroid;

/// Certificate that `host \ deleted / contracted`, renamed through `bijection`, equals a pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorWitness {
    pub deleted: Vec<String>,
    pub contracted: Vec<String>,
    /// Surviving host label to pattern label, sorted by host label.
    pub bijection: Vec<(String, String)>,
}

impl MinorWitness {
    /// Applies the deletions, contractions, and renaming to `host`.
    pub fn replay(&self, host: &BinaryMatroid) -> Result<BinaryMatroid> {
        let d = host.set_of(&self.deleted)?;
        if d & host.set_of(&self.contracted)? != 0 {
            return Err(Error::Contract(
                "deleted and contracted sets overlap".into(),
            ));
        }
        let rest = host.delete_set(d);
        // Indices shift after deletion, so the contracted set is looked up again.
        let minor = rest.contract_set(rest.set_of(&self.contracted)?);
        if minor.len() != self.bijection.len() {
            return Err(Error::Dimension {
                expected: minor.len(),
                found: self.bijection.len(),
            });
        }
        let mut labels = Vec::with_capacity(minor.len());
        for l in minor.labels() {
            let to = self
                .bijection
                .iter()
                .find(|(from, _)| from == l)
                .ok_or_else(|| Error::Label(format!("witness does not map {l}")))?;
            labels.push(to.1.clone());
        }
        minor.with_labels(&labels)
    }

    /// Whether replaying on `host` reproduces `pattern` exactly.
    #[must_use]
    pub fn verify(&self, host: &BinaryMatroid, pattern: &BinaryMatroid) -> bool {
        self.replay(host).is_ok_and(|m| m == *pattern)
    }

    /// Rewrites a witness found on `host \ d / c` as a witness on `host`.
    #[must_use]
    pub fn lifted(mut self, extra_deleted: &[String], extra_contracted: &[String]) -> Self {
        self.deleted.extend(extra_deleted.iter().cloned());
        self.contracted.extend(extra_contracted.iter().cloned());
        self.deleted.sort();
        self.contracted.sort();
        self
    }
}

/// A pattern prepared once for repeated minor tests.
pub struct Pattern {
    matroid: BinaryMatroid,
    data: IsoData,
    circuit_count: usize,
}

impl Pattern {
    #[must_use]
    pub fn new(matroid: BinaryMatroid) -> Self {
        let circuits = matroid.circuits();
        let circuit_count = circuits.len();
        let data = IsoData::new(matroid.len(), circuits);
        Self {
            matroid,
            data,
            circuit_count,
        }
    }

    #[must_use]
    pub fn matroid(&self) -> &BinaryMatroid {
        &self.matroid
    }

    /// Bijection from `m` onto the pattern, by element index.
    pub(crate) fn match_indices(&self, m: &BinaryMatroid) -> Option<Vec<usize>> {
        if m.len() != self.matroid.len() || m.rank() != self.matroid.rank() {
            return None;
        }
        let circuits = m.circuits();
        if circuits.len() != self.circuit_count {
            return None;
        }
        iso::find(&IsoData::new(m.len(), circuits), &self.data)
    }
}

fn label_order(m: &BinaryMatroid) -> Vec<usize> {
    let mut order: Vec<usize> = (0..m.len()).collect();
    order.sort_by(|&a, &b| m.label(a).cmp(m.label(b)));
    order
}

/// Finds `X`, `Y` with `host \ X / Y` isomorphic to the pattern.
///
/// `Y` ranges over independent sets of size `r(host) - r(pattern)` and `X` over sets that are
/// coindependent after contracting `Y`, both in lexicographic order of sorted labels. The first
/// hit is returned.
#[must_use]
pub fn find_minor(host: &BinaryMatroid, pattern: &Pattern) -> Option<MinorWitness> {
    let p = pattern.matroid();
    let (n, r) = (host.len(), host.rank());
    if p.len() > n || p.rank() > r {
        return None;
    }
    let c = r - p.rank();
    let corank_gap = (n - r).checked_sub(p.len() - p.rank())?;
    let order = label_order(host);
    for y in Combinations::new(&order, c) {
        if !host.is_independent(y) {
            continue;
        }
        let contracted = host.contract_set(y);
        // Positions in `contracted` follow host order with `y` removed.
        let remaining: Vec<usize> = (0..n).filter(|i| y >> i & 1 == 0).collect();
        let mut local = alloc::vec![0usize; n];
        for (j, &i) in remaining.iter().enumerate() {
            local[i] = j;
        }
        let pool: Vec<usize> = order
            .iter()
            .filter(|&&i| y >> i & 1 == 0)
            .map(|&i| local[i])
            .collect();
        for x in Combinations::new(&pool, corank_gap) {
            let keep = contracted.ground() & !x;
            if contracted.rank_of(keep) != p.rank() {
                continue;
            }
            let minor = contracted.delete_set(x);
            if let Some(map) = pattern.match_indices(&minor) {
                let mut bijection: Vec<(String, String)> = map
                    .iter()
                    .enumerate()
                    .map(|(i, &j)| (minor.label(i).into(), p.label(j).into()))
                    .collect();
                bijection.sort();
                let mut deleted: Vec<String> = bits::members(x)
                    .map(|j| host.label(remaining[j]).into())
                    .collect();
                deleted.sort();
                let mut contracted_labels = host.labels_of(y);
                contracted_labels.sort();
                return Some(MinorWitness {
                    deleted,
                    contracted: contracted_labels,
                    bijection,
                });
            }
        }
    }
    None
}

impl BinaryMatroid {
    /// Some deletion/contraction of `self` isomorphic to `pattern`, with a replayable witness.
    #[must_use]
    pub fn has_minor(&self, pattern: &BinaryMatroid) -> Option<MinorWitness> {
        find_minor(self, &Pattern::new(pattern.clone()))
    }

    /// Sorted labels of the members of `s`.
    #[must_use]
    pub fn label_list(&self, s: ElemSet) -> Vec<String> {
        let mut v = self.labels_of(s);
        v.sort();
        v
    }
}

//! Cographic and graphic recognition through the four excluded minors.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::bits::ElemSet;
use crate::gf2::Gf2Matrix;
use crate::graph::Multigraph;
use crate::matroid::BinaryMatroid;
use crate::minor::{find_minor, MinorWitness, Pattern};

/// The excluded minors for cographic binary matroids.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FMember {
    F7,
    F7Star,
    K5,
    K33,
}

impl FMember {
    pub const ALL: [FMember; 4] = [FMember::F7, FMember::F7Star, FMember::K5, FMember::K33];

    #[must_use]
    pub fn name(self) -> &'static str {
        match self {
            FMember::F7 => "F7",
            FMember::F7Star => "F7*",
            FMember::K5 => "M(K5)",
            FMember::K33 => "M(K3,3)",
        }
    }

    #[must_use]
    pub fn matroid(self) -> BinaryMatroid {
        match self {
            FMember::F7 => fano(),
            FMember::F7Star => fano().dual(),
            FMember::K5 => complete_graph(5).circuit_matroid().expect("10 edges"),
            FMember::K33 => complete_bipartite(3, 3).circuit_matroid().expect("9 edges"),
        }
    }
}

impl fmt::Display for FMember {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The Fano plane: all seven non-zero vectors of GF(2)^3, labeled `1`..`7`.
#[must_use]
pub fn fano() -> BinaryMatroid {
    let m = Gf2Matrix::from_strs(&["1000111", "0101011", "0011101"]).expect("well formed");
    BinaryMatroid::from_matrix(&["1", "2", "3", "4", "5", "6", "7"], &m).expect("valid labels")
}

/// `K_n` on vertices `1..n` with edge `ij` for `i < j`.
#[must_use]
pub fn complete_graph(n: usize) -> Multigraph {
    let mut g = Multigraph::new();
    for i in 1..=n {
        g.vertex(&alloc::format!("{i}"));
    }
    for i in 1..=n {
        for j in i + 1..=n {
            g.add_edge(
                &alloc::format!("{i}{j}"),
                &alloc::format!("{i}"),
                &alloc::format!("{j}"),
            )
            .expect("fresh edge");
        }
    }
    g
}

/// `K_{a,b}` with sides `a1..` and `b1..`, edge `ij` joining `ai` and `bj`.
#[must_use]
pub fn complete_bipartite(a: usize, b: usize) -> Multigraph {
    let mut g = Multigraph::new();
    for i in 1..=a {
        for j in 1..=b {
            g.add_edge(
                &alloc::format!("{i}{j}"),
                &alloc::format!("a{i}"),
                &alloc::format!("b{j}"),
            )
            .expect("fresh edge");
        }
    }
    g
}

/// An excluded minor found in a matroid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Culprit {
    pub member: FMember,
    pub witness: MinorWitness,
}

/// The four excluded minors, prepared for repeated tests.
pub struct ExcludedMinors {
    patterns: Vec<(FMember, Pattern)>,
}

impl Default for ExcludedMinors {
    fn default() -> Self {
        Self::new()
    }
}

/// Reduces `m` to a simple, cosimple minor; returns it with the deleted and contracted labels.
///
/// Every excluded minor is 3-connected with at least seven elements, so it survives the reduction.
#[must_use]
pub fn simple_cosimple_core(m: &BinaryMatroid) -> (BinaryMatroid, Vec<String>, Vec<String>) {
    let mut cur = m.clone();
    let mut deleted = Vec::new();
    let mut contracted = Vec::new();
    loop {
        let mut drop: ElemSet = cur.loops();
        for class in cur.parallel_classes() {
            drop |= class & !(1 << class.trailing_zeros());
        }
        if drop != 0 {
            deleted.extend(cur.labels_of(drop));
            cur = cur.delete_set(drop);
            continue;
        }
        let mut squash: ElemSet = cur.coloops();
        for class in cur.dual().parallel_classes() {
            squash |= class & !(1 << class.trailing_zeros());
        }
        if squash != 0 {
            contracted.extend(cur.labels_of(squash));
            cur = cur.contract_set(squash);
            continue;
        }
        break;
    }
    deleted.sort();
    contracted.sort();
    (cur, deleted, contracted)
}

impl ExcludedMinors {
    #[must_use]
    pub fn new() -> Self {
        Self {
            patterns: FMember::ALL
                .iter()
                .map(|&f| (f, Pattern::new(f.matroid())))
                .collect(),
        }
    }

    /// First excluded minor of `m` in the order F7, F7*, M(K5), M(K3,3), with a witness on `m`.
    #[must_use]
    pub fn culprit(&self, m: &BinaryMatroid) -> Option<Culprit> {
        let (core, deleted, contracted) = simple_cosimple_core(m);
        for (member, pattern) in &self.patterns {
            let p = pattern.matroid();
            if core.len() < p.len()
                || core.rank() < p.rank()
                || core.len() - core.rank() < p.len() - p.rank()
            {
                continue;
            }
            if let Some(w) = find_minor(&core, pattern) {
                return Some(Culprit {
                    member: *member,
                    witness: w.lifted(&deleted, &contracted),
                });
            }
        }
        None
    }

    #[must_use]
    pub fn is_cographic(&self, m: &BinaryMatroid) -> bool {
        self.culprit(m).is_none()
    }

    #[must_use]
    pub fn is_graphic(&self, m: &BinaryMatroid) -> bool {
        self.culprit(&m.dual()).is_none()
    }

    /// Whether `m` has an M(K5) or M(K3,3) minor, with the witness.
    #[must_use]
    pub fn kuratowski_minor(&self, m: &BinaryMatroid) -> Option<Culprit> {
        let (core, deleted, contracted) = simple_cosimple_core(m);
        self.patterns
            .iter()
            .filter(|(f, _)| matches!(f, FMember::K5 | FMember::K33))
            .find_map(|(member, pattern)| {
                find_minor(&core, pattern).map(|w| Culprit {
                    member: *member,
                    witness: w.lifted(&deleted, &contracted),
                })
            })
    }
}

/// `None` when `m` is cographic, otherwise an excluded minor with its witness.
#[must_use]
pub fn cographic_culprit(m: &BinaryMatroid) -> Option<Culprit> {
    ExcludedMinors::new().culprit(m)
}

#[must_use]
pub fn is_cographic(m: &BinaryMatroid) -> bool {
    cographic_culprit(m).is_none()
}

/// Graphic means the dual is cographic.
#[must_use]
pub fn is_graphic(m: &BinaryMatroid) -> bool {
    is_cographic(&m.dual())
}

/// Membership in the trivial family: an M(K5) or M(K3,3) minor.
#[must_use]
pub fn trivial_family_member(m: &BinaryMatroid, _k: usize) -> bool {
    ExcludedMinors::new().kuratowski_minor(m).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn members_have_expected_shape() {
        let dims: Vec<(usize, usize)> = FMember::ALL
            .iter()
            .map(|f| {
                let m = f.matroid();
                (m.len(), m.rank())
            })
            .collect();
        assert_eq!(dims, [(7, 3), (7, 4), (10, 4), (9, 5)]);
    }

    #[test]
    fn each_member_is_its_own_culprit() {
        let x = ExcludedMinors::new();
        for f in FMember::ALL {
            let m = f.matroid();
            let c = x.culprit(&m).unwrap();
            assert_eq!(c.member, f);
            assert!(c.witness.verify(&m, &f.matroid()));
        }
    }

    #[test]
    fn k4_is_cographic_and_graphic() {
        let m = complete_graph(4).circuit_matroid().unwrap();
        assert!(is_cographic(&m));
        assert!(is_graphic(&m));
        assert!(!is_graphic(&fano()));
    }
}

//! Single-element binary extensions and the graphic quotients they produce.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::bits;
use crate::cographic::ExcludedMinors;
use crate::enumerate::{enumerate_connected_multigraphs, Constraints, MAX_ENUMERATED_EDGES};
use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::matroid::{BinaryMatroid, Signature};

/// One lift `N` of a base `F` by element `a`, and its quotient `N / a`.
#[derive(Clone, Debug)]
pub struct QuotientResult {
    pub base: BinaryMatroid,
    /// Coordinates of `a` against the rows of the base representation.
    pub extension_column: u64,
    pub lift: BinaryMatroid,
    pub quotient: BinaryMatroid,
    pub graphic: bool,
    /// Name of the graph that realizes the quotient, when one was supplied or found.
    pub realized_by: Option<String>,
    pub realizing_graph: Option<Multigraph>,
}

impl QuotientResult {
    /// Recomputes the lift and quotient from the base and column and compares.
    pub fn replay(&self, a: &str) -> Result<bool> {
        let lift = self.base.extend(a, self.extension_column)?;
        Ok(lift == self.lift
            && lift.delete(&[a])? == self.base
            && lift.contract(&[a])? == self.quotient)
    }
}

/// Which quotients to drop.
#[derive(Clone, Debug)]
pub enum Exclusion {
    None,
    /// Drop `Q` when it has the given minor.
    Minor(BinaryMatroid),
    /// Drop `Q` when some minor `N'` of `Q` has a single-element deletion isomorphic to the given
    /// matroid. Equivalently, `Q \ e` has it as a minor for some element `e`.
    SingleExtension(BinaryMatroid),
}

impl Exclusion {
    #[must_use]
    pub fn drops(&self, q: &BinaryMatroid) -> bool {
        match self {
            Exclusion::None => false,
            Exclusion::Minor(m) => q.has_minor(m).is_some(),
            Exclusion::SingleExtension(m) => {
                (0..q.len()).any(|e| q.delete_set(1 << e).has_minor(m).is_some())
            }
        }
    }
}

/// All `2^r` extensions of `f` by one column labeled `a`, column value ascending.
pub fn binary_extensions(f: &BinaryMatroid, a: &str) -> Result<Vec<BinaryMatroid>> {
    if f.index_of(a).is_some() {
        return Err(Error::Label(format!("element {a} already present")));
    }
    if f.rank() > 20 {
        return Err(Error::Resource(format!("2^{} extensions", f.rank())));
    }
    (0..1u64 << f.rank()).map(|c| f.extend(a, c)).collect()
}

/// Graph from `candidates` whose circuit matroid is isomorphic to `m`, else a realization found
/// by enumerating multigraphs on `rank + 1` vertices.
#[must_use]
pub fn realize(
    m: &BinaryMatroid,
    candidates: &[(String, Multigraph)],
) -> Option<(Option<String>, Multigraph)> {
    let sig = m.invariant_signature();
    for (name, g) in candidates {
        if let Ok(gm) = g.circuit_matroid() {
            if gm.invariant_signature() == sig && gm.is_isomorphic(m).is_some() {
                return Some((Some(name.clone()), g.clone()));
            }
        }
    }
    if m.len() > MAX_ENUMERATED_EDGES {
        return None;
    }
    let c = Constraints {
        vertices: Some(m.rank() + 1),
        edges: Some(m.len()),
        ..Constraints::default()
    };
    let graphs = enumerate_connected_multigraphs(m.len(), &c).ok()?;
    graphs.into_iter().find_map(|g| {
        let gm = g.circuit_matroid().ok()?;
        (gm.invariant_signature() == sig && gm.is_isomorphic(m).is_some()).then_some((None, g))
    })
}

/// Every connected graph, up to graph isomorphism, whose circuit matroid is isomorphic to `m` and
/// whose structural profile is admissible. Loops and 2-isomorphic variants of one matroid give
/// separate graphs here.
pub fn admissible_realizations(
    m: &BinaryMatroid,
    require_eulerian: bool,
) -> Result<Vec<Multigraph>> {
    if m.len() > MAX_ENUMERATED_EDGES {
        return Err(Error::Resource(format!(
            "{} edges exceeds the enumeration limit",
            m.len()
        )));
    }
    let sig = m.invariant_signature();
    let c = Constraints {
        vertices: Some(m.rank() + 1),
        edges: Some(m.len()),
        ..Constraints::default()
    };
    let mut out = Vec::new();
    for g in enumerate_connected_multigraphs(m.len(), &c)? {
        let gm = g.circuit_matroid()?;
        if gm.invariant_signature() != sig || gm.is_isomorphic(m).is_none() {
            continue;
        }
        if g.structural_profile()?.admissible(require_eulerian) {
            out.push(g);
        }
    }
    Ok(out)
}

/// Graphic quotients of `f` by one added element `a`, one per isomorphism class, in order of
/// first appearance by column value.
pub fn graphic_quotients(
    f: &BinaryMatroid,
    a: &str,
    exclusion: &Exclusion,
    candidates: &[(String, Multigraph)],
) -> Result<Vec<QuotientResult>> {
    let excluded = ExcludedMinors::new();
    let mut out: Vec<(Signature, QuotientResult)> = Vec::new();
    for (c, lift) in binary_extensions(f, a)?.into_iter().enumerate() {
        let quotient = lift.contract(&[a])?;
        if !excluded.is_graphic(&quotient) {
            continue;
        }
        let sig = quotient.invariant_signature();
        if out
            .iter()
            .any(|(s, r)| *s == sig && r.quotient.is_isomorphic(&quotient).is_some())
        {
            continue;
        }
        if exclusion.drops(&quotient) {
            continue;
        }
        let (realized_by, realizing_graph) = match realize(&quotient, candidates) {
            Some((n, g)) => (n, Some(g)),
            None => (None, None),
        };
        out.push((
            sig,
            QuotientResult {
                base: f.clone(),
                extension_column: c as u64,
                lift,
                quotient,
                graphic: true,
                realized_by,
                realizing_graph,
            },
        ));
    }
    Ok(out.into_iter().map(|(_, r)| r).collect())
}

/// Whether no element of `N / a` lies in both a 2-circuit and an odd circuit.
///
/// Requires `N \ a` isomorphic to M(K3,3).
pub fn quotient_parity_holds(n: &BinaryMatroid, a: &str) -> Result<bool> {
    let base = n.delete(&[a])?;
    let k33 = crate::cographic::FMember::K33.matroid();
    if base.is_isomorphic(&k33).is_none() {
        return Err(Error::Contract(
            "deleting the added element does not leave M(K3,3)".into(),
        ));
    }
    let q = n.contract(&[a])?;
    let mut in_pair = 0u64;
    let mut in_odd = 0u64;
    for c in q.circuits() {
        let s = bits::count(c);
        if s == 2 {
            in_pair |= c;
        }
        if s % 2 == 1 {
            in_odd |= c;
        }
    }
    Ok(in_pair & in_odd == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cographic::{fano, FMember};

    #[test]
    fn extension_counts() {
        let one = BinaryMatroid::from_rows(&["p"], &[1]).unwrap();
        assert_eq!(binary_extensions(&one, "a").unwrap().len(), 2);
        assert_eq!(
            binary_extensions(&FMember::K5.matroid(), "a")
                .unwrap()
                .len(),
            16
        );
        assert!(binary_extensions(&fano(), "1").is_err());
    }

    #[test]
    fn fano_has_one_graphic_quotient() {
        let q = graphic_quotients(&fano(), "a", &Exclusion::None, &[]).unwrap();
        assert_eq!(q.len(), 1);
        assert!(q[0].replay("a").unwrap());
        assert!(q[0].realizing_graph.is_some());
    }

    #[test]
    fn loop_placement_gives_separate_graphs() {
        // K4 plus a loop: every placement of the loop is the same graph.
        let mut g = crate::cographic::complete_graph(4);
        g.add_edge(
            "l",
            g.vertices()[0].clone().as_str(),
            g.vertices()[0].clone().as_str(),
        )
        .unwrap();
        let m = g.circuit_matroid().unwrap();
        assert_eq!(admissible_realizations(&m, false).unwrap().len(), 1);
        // A doubled edge of K4 plus a loop: the loop can sit on an end of the pair or off it.
        let mut h = crate::cographic::complete_graph(4);
        let (u, v) = (h.vertices()[0].clone(), h.vertices()[1].clone());
        h.add_edge("p", &u, &v).unwrap();
        h.add_edge("l", &u, &u).unwrap();
        assert_eq!(
            admissible_realizations(&h.circuit_matroid().unwrap(), false)
                .unwrap()
                .len(),
            2
        );
    }

    #[test]
    fn precondition_is_enforced() {
        let n = fano().extend("a", 0).unwrap();
        assert!(matches!(
            quotient_parity_holds(&n, "a"),
            Err(Error::Contract(_))
        ));
    }
}

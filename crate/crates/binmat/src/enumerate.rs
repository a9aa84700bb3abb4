//! Enumeration of small connected multigraphs up to isomorphism.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Multigraph;

/// Largest `max_edges` accepted.
pub const MAX_ENUMERATED_EDGES: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraints {
    /// Exact vertex count.
    pub vertices: Option<usize>,
    /// Exact edge count.
    pub edges: Option<usize>,
    pub simple: bool,
    /// Loopless with no cut vertex.
    pub biconnected: bool,
    pub max_loops: usize,
    /// Largest number of edges joining one pair of vertices.
    pub max_multiplicity: usize,
    /// Cap on the number of graphs produced.
    pub budget: usize,
}

impl Default for Constraints {
    fn default() -> Self {
        Self {
            vertices: None,
            edges: None,
            simple: false,
            biconnected: false,
            max_loops: usize::MAX,
            max_multiplicity: usize::MAX,
            budget: 1_000_000,
        }
    }
}

impl Constraints {
    #[must_use]
    pub fn simple_biconnected(vertices: usize, edges: usize) -> Self {
        Self {
            vertices: Some(vertices),
            edges: Some(edges),
            simple: true,
            biconnected: true,
            ..Self::default()
        }
    }
}

/// Simple connected graphs with at most `max_edges` edges, grouped by edge count.
fn skeletons(max_edges: usize, max_vertices: usize) -> Vec<Vec<Multigraph>> {
    let mut single = Multigraph::new();
    single.vertex("v0");
    let mut levels = alloc::vec![alloc::vec![single]];
    for s in 1..=max_edges {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for g in &levels[s - 1] {
            let n = g.vertex_count();
            let m = g.multiplicities();
            let label = format!("e{}", s - 1);
            let mut push = |h: Multigraph| {
                if seen.insert(h.canonical_form().1) {
                    next.push(h);
                }
            };
            if n < max_vertices {
                for u in 0..n {
                    let mut h = g.clone();
                    let w = h.vertex(&format!("v{n}"));
                    let from = h.vertices()[u].clone();
                    let to = h.vertices()[w].clone();
                    h.add_edge(&label, &from, &to).expect("fresh label");
                    push(h);
                }
            }
            for u in 0..n {
                for v in u + 1..n {
                    if m[u][v] == 0 {
                        let mut h = g.clone();
                        let (a, b) = (h.vertices()[u].clone(), h.vertices()[v].clone());
                        h.add_edge(&label, &a, &b).expect("fresh label");
                        push(h);
                    }
                }
            }
        }
        levels.push(next);
    }
    levels
}

/// Every way to add `extra` edges as parallels and loops on top of `skeleton`.
fn decorations(skeleton: &Multigraph, extra: usize, c: &Constraints, out: &mut Vec<Multigraph>) {
    let s = skeleton.edge_count();
    let n = skeleton.vertex_count();
    let par_cap = c.max_multiplicity.saturating_sub(1).min(extra);
    let loop_cap = c.max_loops.min(extra);
    // Slots 0..s add parallels to skeleton edges, slots s..s+n add loops.
    let slots = s + n;
    let mut counts = alloc::vec![0usize; slots];
    let mut seen = BTreeSet::new();
    fn rec(
        slot: usize,
        left: usize,
        loops: usize,
        counts: &mut Vec<usize>,
        s: usize,
        par_cap: usize,
        loop_cap: usize,
        emit: &mut dyn FnMut(&[usize]),
    ) {
        if slot == counts.len() {
            if left == 0 {
                emit(counts);
            }
            return;
        }
        let cap = if slot < s { par_cap } else { loop_cap - loops };
        for k in 0..=cap.min(left) {
            counts[slot] = k;
            let l = if slot < s { loops } else { loops + k };
            rec(slot + 1, left - k, l, counts, s, par_cap, loop_cap, emit);
        }
        counts[slot] = 0;
    }
    let mut emit = |counts: &[usize]| {
        let mut g = skeleton.clone();
        let mut next = s;
        for (slot, &k) in counts.iter().enumerate() {
            for _ in 0..k {
                let (a, b) = if slot < s {
                    let e = &skeleton.edges()[slot];
                    (e.u, e.v)
                } else {
                    (slot - s, slot - s)
                };
                let (a, b) = (g.vertices()[a].clone(), g.vertices()[b].clone());
                g.add_edge(&format!("e{next}"), &a, &b)
                    .expect("fresh label");
                next += 1;
            }
        }
        if seen.insert(g.canonical_form().1) {
            out.push(g);
        }
    };
    rec(0, extra, 0, &mut counts, s, par_cap, loop_cap, &mut emit);
}

/// All connected multigraphs with at most `max_edges` edges meeting `constraints`, one per
/// isomorphism class, ordered by vertex count, then edge count, then generation order.
///
/// Simple skeletons are generated first and then decorated with parallel edges and loops.
pub fn enumerate_connected_multigraphs(
    max_edges: usize,
    constraints: &Constraints,
) -> Result<Vec<Multigraph>> {
    if max_edges > MAX_ENUMERATED_EDGES {
        return Err(Error::Resource(format!(
            "max_edges {max_edges} exceeds {MAX_ENUMERATED_EDGES}"
        )));
    }
    let c = constraints;
    let max_vertices = c.vertices.unwrap_or(max_edges + 1);
    let levels = skeletons(max_edges, max_vertices);
    let edge_ok = |e: usize| c.edges.is_none_or(|x| x == e) && e <= max_edges;
    let mut out = Vec::new();
    let v_range = match c.vertices {
        Some(v) => v..=v,
        None => 1..=max_vertices,
    };
    for v in v_range {
        let mut per_v: Vec<Multigraph> = Vec::new();
        for (s, level) in levels.iter().enumerate() {
            for sk in level.iter().filter(|g| g.vertex_count() == v) {
                if c.biconnected && !sk.is_biconnected() {
                    continue;
                }
                if c.simple {
                    if edge_ok(s) {
                        per_v.push(sk.clone());
                    }
                    continue;
                }
                let constrained = Constraints {
                    max_loops: if c.biconnected { 0 } else { c.max_loops },
                    ..c.clone()
                };
                if c.max_multiplicity == 0 {
                    continue;
                }
                for extra in 0..=max_edges - s {
                    if !edge_ok(s + extra) {
                        continue;
                    }
                    decorations(sk, extra, &constrained, &mut per_v);
                    if per_v.len() + out.len() > c.budget {
                        return Err(Error::Resource(format!("more than {} graphs", c.budget)));
                    }
                }
            }
        }
        per_v.sort_by_key(Multigraph::edge_count);
        out.extend(per_v);
        if out.len() > c.budget {
            return Err(Error::Resource(format!("more than {} graphs", c.budget)));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(v: usize, e: usize) -> usize {
        enumerate_connected_multigraphs(e, &Constraints::simple_biconnected(v, e))
            .unwrap()
            .len()
    }

    #[test]
    fn simple_biconnected_counts() {
        assert_eq!(count(5, 8), 2);
        assert_eq!(count(5, 7), 3);
        assert_eq!(count(5, 5), 1);
        assert_eq!(count(4, 6), 1);
    }

    #[test]
    fn guard_rejects_large_requests() {
        assert!(matches!(
            enumerate_connected_multigraphs(11, &Constraints::default()),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn two_vertex_bundles() {
        let c = Constraints {
            vertices: Some(2),
            max_loops: 0,
            ..Constraints::default()
        };
        // One to three parallel edges.
        assert_eq!(enumerate_connected_multigraphs(3, &c).unwrap().len(), 3);
    }
}

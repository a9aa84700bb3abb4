//! Multigraphs with loops and parallel edges, and their circuit matroids.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::matroid::BinaryMatroid;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub label: String,
    pub u: usize,
    pub v: usize,
}

impl Edge {
    #[inline]
    #[must_use]
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    /// The other end, seen from `w`.
    #[inline]
    #[must_use]
    pub fn other(&self, w: usize) -> usize {
        if self.u == w {
            self.v
        } else {
            self.u
        }
    }
}

/// Labeled multigraph. Loops have `u == v`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Multigraph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
}

/// Everything the quotient-graph admissibility filter looks at.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructuralProfile {
    pub loops: usize,
    /// Multiplicities of the non-loop vertex pairs that carry edges, largest first.
    pub parallel_classes: Vec<usize>,
    pub blocks: usize,
    /// Number of blocks consisting of a single loop.
    pub loop_blocks: usize,
    pub eulerian: bool,
    pub two_edge_cut: bool,
}

impl StructuralProfile {
    /// At most one loop, no pair joined by more than two edges, a single block (or a block
    /// plus a loop), no 2-edge cut, and Eulerian when asked for.
    #[must_use]
    pub fn admissible(&self, require_eulerian: bool) -> bool {
        let blocks_ok = self.blocks <= 1 || (self.blocks == 2 && self.loop_blocks == 1);
        self.loops <= 1
            && self.parallel_classes.first().is_none_or(|&m| m <= 2)
            && blocks_ok
            && !self.two_edge_cut
            && (!require_eulerian || self.eulerian)
    }
}

/// A vertex and edge correspondence between two graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphIso {
    pub vertices: Vec<(String, String)>,
    pub edges: Vec<(String, String)>,
}

/// Which kind of edge [`Multigraph::one_element_extensions`] adds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtensionMode {
    Loop,
    Parallel,
    /// Any edge between existing vertices, loops included.
    AnyEdge,
}

/// How generated graphs are merged.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dedup {
    /// Up to graph isomorphism.
    Graph,
    /// Up to isomorphism of circuit matroids.
    Matroid,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        Self((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut x = x;
        while self.0[x] != r {
            let next = self.0[x];
            self.0[x] = r;
            x = next;
        }
        r
    }
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (a, b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        self.0[a.max(b)] = a.min(b);
        true
    }
}

impl Multigraph {
    #[must_use]
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph from `(edge, u, v)` triples, creating vertices on first mention.
    pub fn from_edges(edges: &[(&str, &str, &str)]) -> Result<Self> {
        let mut g = Self::new();
        for &(e, u, v) in edges {
            g.add_edge(e, u, v)?;
        }
        Ok(g)
    }

    /// Index of vertex `label`, adding it if needed.
    pub fn vertex(&mut self, label: &str) -> usize {
        if let Some(i) = self.vertex_index(label) {
            return i;
        }
        self.vertices.push(label.to_string());
        self.vertices.len() - 1
    }

    pub fn add_edge(&mut self, label: &str, u: &str, v: &str) -> Result<()> {
        if self.edge_index(label).is_some() {
            return Err(Error::Label(format!("duplicate edge {label}")));
        }
        if label.is_empty() || label.chars().any(char::is_whitespace) {
            return Err(Error::Label(format!("invalid edge label {label:?}")));
        }
        let (u, v) = (self.vertex(u), self.vertex(v));
        self.edges.push(Edge {
            label: label.to_string(),
            u,
            v,
        });
        Ok(())
    }

    fn push_edge(&mut self, label: String, u: usize, v: usize) {
        self.edges.push(Edge { label, u, v });
    }

    #[must_use]
    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    #[must_use]
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    #[must_use]
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    #[must_use]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    #[must_use]
    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    #[must_use]
    pub fn edge_index(&self, label: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.label == label)
    }

    /// Degree of vertex `v`; a loop counts twice.
    #[must_use]
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|e| usize::from(e.u == v) + usize::from(e.v == v))
            .sum()
    }

    #[must_use]
    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|e| e.is_loop()).count()
    }

    /// `m[u][v]` edges between `u` and `v`; loops on the diagonal.
    #[must_use]
    pub fn multiplicities(&self) -> Vec<Vec<u8>> {
        let n = self.vertex_count();
        let mut m = vec![vec![0u8; n]; n];
        for e in &self.edges {
            m[e.u][e.v] += 1;
            if !e.is_loop() {
                m[e.v][e.u] += 1;
            }
        }
        m
    }

    /// Whether no loops and no parallel edges.
    #[must_use]
    pub fn is_simple(&self) -> bool {
        let m = self.multiplicities();
        (0..m.len()).all(|i| m[i][i] == 0 && m[i].iter().all(|&x| x <= 1))
    }

    /// Circuit matroid from the mod-2 vertex-edge incidence matrix.
    pub fn circuit_matroid(&self) -> Result<BinaryMatroid> {
        let labels: Vec<&str> = self.edges.iter().map(|e| e.label.as_str()).collect();
        let mut rows = vec![0u64; self.vertex_count()];
        if labels.len() > crate::matroid::MAX_ELEMENTS {
            return Err(Error::Dimension {
                expected: crate::matroid::MAX_ELEMENTS,
                found: labels.len(),
            });
        }
        for (i, e) in self.edges.iter().enumerate() {
            if !e.is_loop() {
                rows[e.u] |= 1 << i;
                rows[e.v] |= 1 << i;
            }
        }
        BinaryMatroid::from_rows(&labels, &rows)
    }

    fn components_without(&self, skip: &[usize]) -> usize {
        let mut uf = UnionFind::new(self.vertex_count());
        let mut comps = self.vertex_count();
        for (i, e) in self.edges.iter().enumerate() {
            if !skip.contains(&i) && uf.union(e.u, e.v) {
                comps -= 1;
            }
        }
        comps
    }

    /// Number of connected components, isolated vertices included.
    #[must_use]
    pub fn component_count(&self) -> usize {
        self.components_without(&[])
    }

    #[must_use]
    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Connected apart from isolated vertices, with every degree even.
    #[must_use]
    pub fn is_eulerian(&self) -> bool {
        let touched: Vec<usize> = (0..self.vertex_count())
            .filter(|&v| self.degree(v) > 0)
            .collect();
        if touched.iter().any(|&v| self.degree(v) % 2 == 1) {
            return false;
        }
        let isolated = self.vertex_count() - touched.len();
        self.component_count() - isolated <= 1
    }

    /// Edge sets of the blocks; each loop is a block of its own.
    pub fn blocks(&self) -> Result<Vec<Vec<String>>> {
        if !self.is_connected() {
            return Err(Error::Structure("graph is not connected".into()));
        }
        let mut out: Vec<Vec<usize>> = self.block_indices();
        for b in &mut out {
            b.sort_unstable();
        }
        out.sort();
        Ok(out
            .into_iter()
            .map(|b| b.into_iter().map(|i| self.edges[i].label.clone()).collect())
            .collect())
    }

    fn block_indices(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        let mut out = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            if e.is_loop() {
                out.push(vec![i]);
            } else {
                adj[e.u].push((e.v, i));
                adj[e.v].push((e.u, i));
            }
        }
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut time = 0;
        let mut stack: Vec<usize> = Vec::new();
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = time;
            low[root] = time;
            time += 1;
            // (vertex, edge used to enter, next adjacency slot)
            let mut frames: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
            while let Some(&mut (v, via, ref mut slot)) = frames.last_mut() {
                if *slot < adj[v].len() {
                    let (w, id) = adj[v][*slot];
                    *slot += 1;
                    if id == via {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        stack.push(id);
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        frames.push((w, id, 0));
                    } else if disc[w] < disc[v] {
                        stack.push(id);
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    frames.pop();
                    if let Some(&(p, _, _)) = frames.last() {
                        low[p] = low[p].min(low[v]);
                        if low[v] >= disc[p] {
                            let mut block = Vec::new();
                            while let Some(id) = stack.pop() {
                                block.push(id);
                                if id == via {
                                    break;
                                }
                            }
                            out.push(block);
                        }
                    }
                }
            }
        }
        out
    }

    /// Whether the graph is loopless, connected, and has no cut vertex.
    ///
    /// A single edge, or a bundle of parallel edges between two vertices, counts.
    #[must_use]
    pub fn is_biconnected(&self) -> bool {
        self.edge_count() > 0
            && self.loop_count() == 0
            && self.is_connected()
            && self.block_indices().len() == 1
    }

    /// First pair of edges (in edge order) whose removal disconnects the graph.
    #[must_use]
    pub fn has_two_edge_cut(&self) -> Option<(String, String)> {
        let base = self.component_count();
        let m = self.edge_count();
        for i in 0..m {
            for j in i + 1..m {
                if self.components_without(&[i, j]) > base {
                    return Some((self.edges[i].label.clone(), self.edges[j].label.clone()));
                }
            }
        }
        None
    }

    /// Every pair of edges whose removal disconnects the graph.
    #[must_use]
    pub fn two_edge_cuts(&self) -> Vec<(String, String)> {
        let base = self.component_count();
        let m = self.edge_count();
        let mut out = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                if self.components_without(&[i, j]) > base {
                    out.push((self.edges[i].label.clone(), self.edges[j].label.clone()));
                }
            }
        }
        out
    }

    pub fn structural_profile(&self) -> Result<StructuralProfile> {
        let blocks = self.blocks()?;
        let loop_blocks = blocks
            .iter()
            .filter(|b| b.len() == 1 && self.edges[self.edge_index(&b[0]).unwrap()].is_loop())
            .count();
        let m = self.multiplicities();
        let mut parallel_classes = Vec::new();
        for (i, row) in m.iter().enumerate() {
            for &x in &row[i + 1..] {
                if x > 0 {
                    parallel_classes.push(usize::from(x));
                }
            }
        }
        parallel_classes.sort_unstable_by(|a, b| b.cmp(a));
        Ok(StructuralProfile {
            loops: self.loop_count(),
            parallel_classes,
            blocks: blocks.len(),
            loop_blocks,
            eulerian: self.is_eulerian(),
            two_edge_cut: self.has_two_edge_cut().is_some(),
        })
    }

    /// Canonical vertex order and certificate; equal certificates mean isomorphic graphs.
    #[must_use]
    pub fn canonical_form(&self) -> (Vec<usize>, Vec<u8>) {
        crate::canon::canonical(&self.multiplicities())
    }

    /// Isomorphism respecting incidence, loops, and multiplicities.
    #[must_use]
    pub fn isomorphism(&self, other: &Self) -> Option<GraphIso> {
        if self.vertex_count() != other.vertex_count() || self.edge_count() != other.edge_count() {
            return None;
        }
        let (pa, ca) = self.canonical_form();
        let (pb, cb) = other.canonical_form();
        if ca != cb {
            return None;
        }
        let mut inv_b = vec![0usize; pb.len()];
        for (v, &p) in pb.iter().enumerate() {
            inv_b[p] = v;
        }
        let vmap: Vec<usize> = pa.iter().map(|&p| inv_b[p]).collect();
        let key = |u: usize, v: usize| (u.min(v), u.max(v));
        let mut groups: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (i, e) in other.edges.iter().enumerate() {
            groups.entry(key(e.u, e.v)).or_default().push(i);
        }
        let mut edges = Vec::with_capacity(self.edge_count());
        let mut taken: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for e in &self.edges {
            let k = key(vmap[e.u], vmap[e.v]);
            let slot = taken.entry(k).or_insert(0);
            let j = groups[&k][*slot];
            *slot += 1;
            edges.push((e.label.clone(), other.edges[j].label.clone()));
        }
        let vertices = (0..self.vertex_count())
            .map(|v| (self.vertices[v].clone(), other.vertices[vmap[v]].clone()))
            .collect();
        Some(GraphIso { vertices, edges })
    }

    fn fresh_vertex(&self, base: &str) -> String {
        let mut name = format!("{base}'");
        while self.vertex_index(&name).is_some() {
            name.push('\'');
        }
        name
    }

    /// Graphs `G'` with a new edge `e` such that `G' / e` is `G`, made by splitting a vertex.
    ///
    /// The edge-ends at a vertex (two for a loop) are divided between the old vertex and a new
    /// one joined to it by `e`. Splits that leave the new vertex with no other edge make `e` a
    /// bridge and are produced only when `admit_coloops` is set.
    pub fn one_element_coextensions(
        &self,
        e: &str,
        admit_coloops: bool,
        dedup: Dedup,
        filter: impl Fn(&Multigraph) -> bool,
    ) -> Result<Vec<Multigraph>> {
        if self.edge_index(e).is_some() {
            return Err(Error::Label(format!("edge {e} already present")));
        }
        if !self.is_connected() {
            return Err(Error::Structure("graph is not connected".into()));
        }
        let mut raw = Vec::new();
        for v in 0..self.vertex_count() {
            let mut ends: Vec<(usize, bool)> = Vec::new();
            for (i, ed) in self.edges.iter().enumerate() {
                if ed.u == v {
                    ends.push((i, false));
                }
                if ed.v == v {
                    ends.push((i, true));
                }
            }
            if ends.len() > 24 {
                return Err(Error::Resource(
                    "vertex degree too large for split enumeration".into(),
                ));
            }
            let fresh = self.fresh_vertex(&self.vertices[v]);
            // The first end always stays put, so each unordered split appears once.
            let total = if ends.is_empty() {
                1u32
            } else {
                1u32 << (ends.len() - 1)
            };
            for half in 0..total {
                let moved = half << 1;
                if moved == 0 && !admit_coloops {
                    continue;
                }
                let mut g = self.clone();
                let w = g.vertex(&fresh);
                for (k, &(i, second)) in ends.iter().enumerate() {
                    if moved >> k & 1 == 1 {
                        if second {
                            g.edges[i].v = w;
                        } else {
                            g.edges[i].u = w;
                        }
                    }
                }
                g.push_edge(e.to_string(), v, w);
                if filter(&g) {
                    raw.push(g);
                }
            }
        }
        dedupe(raw, dedup)
    }

    /// Graphs with one more edge `e` of the requested kind.
    pub fn one_element_extensions(
        &self,
        e: &str,
        mode: ExtensionMode,
        dedup: Dedup,
    ) -> Result<Vec<Multigraph>> {
        if self.edge_index(e).is_some() {
            return Err(Error::Label(format!("edge {e} already present")));
        }
        let mut raw = Vec::new();
        let n = self.vertex_count();
        let mut pairs = Vec::new();
        match mode {
            ExtensionMode::Loop => pairs.extend((0..n).map(|v| (v, v))),
            ExtensionMode::Parallel => {
                for ed in &self.edges {
                    if !ed.is_loop() {
                        pairs.push((ed.u.min(ed.v), ed.u.max(ed.v)));
                    }
                }
                pairs.sort_unstable();
                pairs.dedup();
            }
            ExtensionMode::AnyEdge => {
                for u in 0..n {
                    for v in u..n {
                        pairs.push((u, v));
                    }
                }
            }
        }
        for (u, v) in pairs {
            let mut g = self.clone();
            g.push_edge(e.to_string(), u, v);
            raw.push(g);
        }
        dedupe(raw, dedup)
    }

    /// Same graph with vertices and edges renamed `v0..`, `e0..` in the given orders.
    #[must_use]
    pub fn renamed(&self, vertex_prefix: &str, edge_prefix: &str) -> Self {
        let vertices = (0..self.vertex_count())
            .map(|i| format!("{vertex_prefix}{i}"))
            .collect();
        let edges = self
            .edges
            .iter()
            .enumerate()
            .map(|(i, e)| Edge {
                label: format!("{edge_prefix}{i}"),
                u: e.u,
                v: e.v,
            })
            .collect();
        Self { vertices, edges }
    }
}

fn dedupe(raw: Vec<Multigraph>, dedup: Dedup) -> Result<Vec<Multigraph>> {
    let mut out: Vec<Multigraph> = Vec::new();
    match dedup {
        Dedup::Graph => {
            let mut seen = alloc::collections::BTreeSet::new();
            for g in raw {
                if seen.insert(g.canonical_form().1) {
                    out.push(g);
                }
            }
        }
        Dedup::Matroid => {
            let mut kept: Vec<(crate::matroid::Signature, BinaryMatroid)> = Vec::new();
            for g in raw {
                let m = g.circuit_matroid()?;
                let sig = m.invariant_signature();
                if kept
                    .iter()
                    .any(|(s, k)| *s == sig && k.is_isomorphic(&m).is_some())
                {
                    continue;
                }
                kept.push((sig, m));
                out.push(g);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Multigraph {
        Multigraph::from_edges(&[("a", "1", "2"), ("b", "2", "3"), ("c", "3", "1")]).unwrap()
    }

    #[test]
    fn blocks_of_bowtie() {
        let g = Multigraph::from_edges(&[
            ("a", "1", "2"),
            ("b", "2", "3"),
            ("c", "3", "1"),
            ("d", "1", "4"),
            ("e", "4", "5"),
            ("f", "5", "1"),
            ("l", "5", "5"),
        ])
        .unwrap();
        let b = g.blocks().unwrap();
        assert_eq!(b, vec![vec!["a", "b", "c"], vec!["d", "e", "f"], vec!["l"]]);
    }

    #[test]
    fn parallel_pair_is_one_block() {
        let g = Multigraph::from_edges(&[("a", "1", "2"), ("b", "1", "2")]).unwrap();
        assert_eq!(g.blocks().unwrap().len(), 1);
        assert!(g.is_biconnected());
    }

    #[test]
    fn disconnected_blocks_error() {
        let mut g = triangle();
        g.vertex("lonely");
        assert!(matches!(g.blocks(), Err(Error::Structure(_))));
    }

    #[test]
    fn triangle_extensions() {
        let t = triangle();
        assert_eq!(
            t.one_element_extensions("x", ExtensionMode::Loop, Dedup::Graph)
                .unwrap()
                .len(),
            1
        );
        assert_eq!(
            t.one_element_extensions("x", ExtensionMode::Parallel, Dedup::Graph)
                .unwrap()
                .len(),
            1
        );
    }

    #[test]
    fn isomorphism_maps_edges() {
        let a = triangle();
        let b =
            Multigraph::from_edges(&[("p", "x", "y"), ("q", "z", "x"), ("r", "y", "z")]).unwrap();
        let iso = a.isomorphism(&b).unwrap();
        assert_eq!(iso.edges.len(), 3);
    }
}

mod common;

use binmat::{Dedup, ExtensionMode, Multigraph};
use common::{brute_circuits, multigraph};
use proptest::prelude::*;

/// Every vertex meets an even number of edge ends of `s`.
fn even(g: &Multigraph, s: u64) -> bool {
    let mut deg = vec![0usize; g.vertex_count()];
    for (i, e) in g.edges().iter().enumerate() {
        if s >> i & 1 == 1 {
            deg[e.u] += 1;
            deg[e.v] += 1;
        }
    }
    deg.iter().all(|d| d % 2 == 0)
}

proptest! {
    #[test]
    fn circuits_are_cycles(g in multigraph(5, 8)) {
        let m = g.circuit_matroid().unwrap();
        let mut c = m.circuits();
        c.sort_unstable();
        prop_assert_eq!(c, brute_circuits(g.edge_count(), |s| even(&g, s)));
        prop_assert_eq!(m.rank(), g.vertex_count() - g.component_count());
    }

    #[test]
    fn coextensions_contract_back(g in multigraph(4, 6)) {
        prop_assume!(g.is_connected());
        let m = g.circuit_matroid().unwrap();
        for h in g.one_element_coextensions("new", true, Dedup::Graph, |_| true).unwrap() {
            prop_assert_eq!(h.vertex_count(), g.vertex_count() + 1);
            prop_assert_eq!(h.circuit_matroid().unwrap().contract(&["new"]).unwrap(), m.clone());
        }
    }

    #[test]
    fn extensions_delete_back(g in multigraph(4, 6)) {
        let m = g.circuit_matroid().unwrap();
        for mode in [ExtensionMode::Loop, ExtensionMode::Parallel, ExtensionMode::AnyEdge] {
            for h in g.one_element_extensions("new", mode, Dedup::Graph).unwrap() {
                prop_assert_eq!(h.circuit_matroid().unwrap().delete(&["new"]).unwrap(), m.clone());
            }
        }
    }

    #[test]
    fn renaming_keeps_the_graph(g in multigraph(5, 8)) {
        let r = g.renamed("w", "f");
        prop_assert_eq!(g.canonical_form(), r.canonical_form());
        prop_assert!(g.isomorphism(&r).is_some());
        prop_assert!(g.circuit_matroid().unwrap().is_isomorphic(&r.circuit_matroid().unwrap()).is_some());
    }

    #[test]
    fn matroid_dedup_merges_more(g in multigraph(4, 5)) {
        prop_assume!(g.is_connected());
        let by_graph = g.one_element_coextensions("new", false, Dedup::Graph, |_| true).unwrap().len();
        let by_matroid = g.one_element_coextensions("new", false, Dedup::Matroid, |_| true).unwrap().len();
        prop_assert!(by_matroid <= by_graph);
    }
}

//! The extension-based search against brute force over enumerated graphs.

use binmat::bits::Combinations;
use binmat::{
    enumerate_connected_multigraphs, search_forbidden_minors, split, BinaryMatroid, Constraints,
    ExcludedMinors, Sequential,
};

/// Circuit matroids of all connected multigraphs with at most `max` edges, one per matroid class.
fn graphic_classes(max: usize) -> Vec<BinaryMatroid> {
    let graphs = enumerate_connected_multigraphs(max, &Constraints::default()).unwrap();
    let mut classes: Vec<BinaryMatroid> = Vec::new();
    for g in graphs {
        let m = g.circuit_matroid().unwrap();
        let sig = m.invariant_signature();
        if !classes
            .iter()
            .any(|c| c.invariant_signature() == sig && c.is_isomorphic(&m).is_some())
        {
            classes.push(m);
        }
    }
    classes
}

/// Every `k`-splitting cographic, tested directly on the excluded minors.
fn good(x: &ExcludedMinors, m: &BinaryMatroid, k: usize) -> bool {
    let order: Vec<usize> = (0..m.len()).collect();
    Combinations::new(&order, k).all(|t| x.is_cographic(&split(m, &m.label_list(t)).unwrap()))
}

fn minimal_bad(x: &ExcludedMinors, m: &BinaryMatroid, k: usize) -> bool {
    !good(x, m, k)
        && (0..m.len())
            .all(|e| good(x, &m.delete_set(1 << e), k) && good(x, &m.contract_set(1 << e), k))
}

fn cross_check(k: usize, max: usize) {
    let x = ExcludedMinors::new();
    let classes = graphic_classes(max);
    let outcome = search_forbidden_minors(k, max, &Sequential).unwrap();

    let mut counts = vec![0usize; max + 1];
    for m in classes.iter().filter(|m| good(&x, m, k)) {
        counts[m.len()] += 1;
    }
    assert_eq!(outcome.class_counts, counts, "good classes by size, k={k}");

    let brute: Vec<&BinaryMatroid> = classes.iter().filter(|m| minimal_bad(&x, m, k)).collect();
    let found = outcome.all_minimal();
    assert_eq!(found.len(), brute.len(), "minimal obstructions, k={k}");
    for m in &brute {
        let r = found
            .iter()
            .find(|r| r.matroid.is_isomorphic(m).is_some())
            .expect("found by the search");
        assert_eq!(r.trivial_witness.is_some(), x.kuratowski_minor(m).is_some());
        assert!(r.replay().unwrap());
    }
}

#[test]
fn pairs_up_to_eight_elements() {
    cross_check(2, 8);
}

#[test]
fn triples_up_to_seven_elements() {
    cross_check(3, 7);
}

#[test]
fn single_elements_have_no_small_obstructions() {
    // Splitting at one element t gives M\t plus a coloop, so nothing fails below the size of
    // an extension of M(K3,3).
    let outcome = search_forbidden_minors(1, 7, &Sequential).unwrap();
    assert!(outcome.all_minimal().is_empty());
}

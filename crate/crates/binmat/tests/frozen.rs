//! Values computed once by an independent brute-force script and frozen here.

use binmat::cographic::{complete_bipartite, complete_graph, fano};
use binmat::{
    enumerate_connected_multigraphs, BinaryMatroid, Constraints, ExcludedMinors, FMember,
    Gf2Matrix, MinorWitness,
};

fn sizes(m: &BinaryMatroid) -> (usize, Vec<u32>) {
    let cs = m.circuits();
    let mut s: Vec<u32> = cs.iter().map(|c| c.count_ones()).collect();
    s.sort_unstable();
    s.dedup();
    (cs.len(), s)
}

#[test]
fn circuit_counts() {
    assert_eq!(
        sizes(&complete_graph(4).circuit_matroid().unwrap()),
        (7, vec![3, 4])
    );
    assert_eq!(
        sizes(&complete_graph(5).circuit_matroid().unwrap()),
        (37, vec![3, 4, 5])
    );
    assert_eq!(
        sizes(&complete_bipartite(3, 3).circuit_matroid().unwrap()),
        (15, vec![4, 6])
    );
    assert_eq!(sizes(&fano()), (14, vec![3, 4]));
    assert_eq!(sizes(&FMember::F7Star.matroid()), (7, vec![4]));
}

#[test]
fn k4_cocircuits() {
    let m = complete_graph(4).circuit_matroid().unwrap();
    let mut co: Vec<u32> = m.cocircuits().iter().map(|c| c.count_ones()).collect();
    co.sort_unstable();
    // Four vertex stars and three 4-edge cuts.
    assert_eq!(co, vec![3, 3, 3, 3, 4, 4, 4]);
}

#[test]
fn connected_multigraphs_by_edge_count() {
    let all = enumerate_connected_multigraphs(4, &Constraints::default()).unwrap();
    let counts: Vec<usize> = (0..=4)
        .map(|e| all.iter().filter(|g| g.edge_count() == e).count())
        .collect();
    assert_eq!(counts, vec![1, 2, 4, 11, 30]);
}

#[test]
fn row_space_membership() {
    let a = Gf2Matrix::from_strs(&["1010", "0110"]).unwrap();
    assert!(a.in_row_space(&[true, true, false, false]).unwrap());
    assert!(!a.in_row_space(&[false, false, true, true]).unwrap());
}

#[test]
fn witness_replays_when_deletion_precedes_contraction() {
    // Deleting a from a 4-circuit leaves b, c, d independent; contracting c leaves b, d free.
    let c4 = BinaryMatroid::from_rows(&["a", "b", "c", "d"], &[0b1001, 0b1010, 0b1100]).unwrap();
    let free = BinaryMatroid::free(&["p", "q"]).unwrap();
    let pair = BinaryMatroid::from_rows(&["p", "q"], &[0b11]).unwrap();
    let w = MinorWitness {
        deleted: vec!["a".into()],
        contracted: vec!["c".into()],
        bijection: vec![("b".into(), "p".into()), ("d".into(), "q".into())],
    };
    assert_eq!(w.replay(&c4).unwrap().labels(), ["p", "q"]);
    assert!(w.verify(&c4, &free));
    assert!(!w.verify(&c4, &pair));
    let overlapping = MinorWitness {
        contracted: vec!["a".into()],
        ..w
    };
    assert!(overlapping.replay(&c4).is_err());
}

#[test]
fn excluded_minor_test_on_standard_matroids() {
    let x = ExcludedMinors::new();
    for f in FMember::ALL {
        let m = f.matroid();
        assert!(!x.is_cographic(&m), "{f}");
        assert!(x
            .culprit(&m)
            .is_some_and(|c| c.member == f && c.witness.verify(&m, &f.matroid())));
    }
    assert!(x.is_graphic(&FMember::K5.matroid()));
    assert!(!x.is_graphic(&fano()));
    assert!(x.is_cographic(&complete_graph(4).circuit_matroid().unwrap()));
    // The dual of M(K5) is cographic but not graphic.
    let k5d = FMember::K5.matroid().dual();
    assert!(x.is_cographic(&k5d) && !x.is_graphic(&k5d));
}

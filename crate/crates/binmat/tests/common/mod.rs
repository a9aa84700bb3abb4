#![allow(dead_code)]

use binmat::{BinaryMatroid, Multigraph};
use proptest::prelude::*;

pub fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("e{i}")).collect()
}

/// Binary matroids on 1 to `max_n` elements with up to six rows.
pub fn matroid(max_n: usize) -> impl Strategy<Value = BinaryMatroid> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(0u64..(1 << n), 0..=n.min(6))
            .prop_map(move |rows| BinaryMatroid::from_rows(&labels(n), &rows).unwrap())
    })
}

/// A matroid with a subset `t` of at most `k` of its elements.
pub fn matroid_and_set(max_n: usize, k: usize) -> impl Strategy<Value = (BinaryMatroid, u64)> {
    matroid(max_n).prop_flat_map(move |m| {
        let n = m.len();
        proptest::sample::subsequence((0..n).collect::<Vec<_>>(), 0..=k.min(n))
            .prop_map(move |idx| (m.clone(), idx.iter().fold(0u64, |s, &i| s | 1 << i)))
    })
}

/// Multigraphs, loops and parallel edges allowed, on up to `max_v` vertices.
pub fn multigraph(max_v: usize, max_e: usize) -> impl Strategy<Value = Multigraph> {
    (1..=max_v).prop_flat_map(move |nv| {
        proptest::collection::vec((0..nv, 0..nv), 0..=max_e).prop_map(move |es| {
            let mut g = Multigraph::new();
            for v in 0..nv {
                g.vertex(&format!("v{v}"));
            }
            for (i, (u, v)) in es.iter().enumerate() {
                g.add_edge(&format!("x{i}"), &format!("v{u}"), &format!("v{v}"))
                    .unwrap();
            }
            g
        })
    })
}

/// Minimal nonempty dependent sets, by brute force over all subsets.
pub fn brute_circuits(n: usize, dependent: impl Fn(u64) -> bool) -> Vec<u64> {
    let mut subsets: Vec<u64> = (1..1u64 << n).collect();
    subsets.sort_by_key(|s| (s.count_ones(), *s));
    let mut out: Vec<u64> = Vec::new();
    for s in subsets {
        if out.iter().all(|c| c & s != *c) && dependent(s) {
            out.push(s);
        }
    }
    out.sort_unstable();
    out
}

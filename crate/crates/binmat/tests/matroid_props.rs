mod common;

use binmat::bits;
use binmat::BinaryMatroid;
use common::{brute_circuits, matroid, matroid_and_set};
use proptest::prelude::*;

fn dependent(m: &BinaryMatroid, s: u64) -> bool {
    bits::rank_of_vectors(bits::members(s).map(|e| m.column(e))) < bits::count(s)
}

proptest! {
    #[test]
    fn circuits_match_brute_force(m in matroid(8)) {
        let mut c = m.circuits();
        c.sort_unstable();
        prop_assert_eq!(c, brute_circuits(m.len(), |s| dependent(&m, s)));
    }

    #[test]
    fn circuit_elimination(m in matroid(8)) {
        let cs = m.circuits();
        for (i, &a) in cs.iter().enumerate() {
            for &b in &cs[i + 1..] {
                let both = a & b;
                for e in bits::members(both) {
                    let pool = (a | b) & !(1 << e);
                    prop_assert!(cs.iter().any(|&c| c & !pool == 0));
                }
            }
        }
    }

    #[test]
    fn dual_is_an_involution(m in matroid(10)) {
        let d = m.dual();
        prop_assert_eq!(m.rank() + d.rank(), m.len());
        prop_assert_eq!(d.dual(), m.clone());
        prop_assert_eq!(m.coloops(), d.loops());
        let mut co = m.cocircuits();
        co.sort_unstable();
        let mut dc = d.circuits();
        dc.sort_unstable();
        prop_assert_eq!(co, dc);
    }

    #[test]
    fn duality_swaps_deletion_and_contraction((m, x) in matroid_and_set(9, 3)) {
        prop_assert_eq!(m.delete_set(x).dual(), m.dual().contract_set(x));
        prop_assert_eq!(m.contract_set(x).dual(), m.dual().delete_set(x));
    }

    #[test]
    fn deletion_and_contraction_commute((m, x) in matroid_and_set(9, 4), pick in any::<u64>()) {
        let d: Vec<String> = m.label_list(x & pick);
        let c: Vec<String> = m.label_list(x & !pick);
        let a = m.delete(&d).unwrap().contract(&c).unwrap();
        let b = m.contract(&c).unwrap().delete(&d).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn permuting_preserves_the_class(m in matroid(8), seed in any::<u64>()) {
        let n = m.len();
        let mut order: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            order.swap(i, (s >> 33) as usize % (i + 1));
        }
        let p = m.permuted(&order);
        prop_assert_eq!(p.clone(), m.clone());
        let renamed = p.relabel(|l| format!("{l}'")).unwrap();
        prop_assert_eq!(renamed.invariant_signature(), m.invariant_signature());
        let map = m.is_isomorphic(&renamed).expect("isomorphic");
        let back = m.relabel(|l| map.iter().find(|(a, _)| a == l).unwrap().1.clone()).unwrap();
        prop_assert_eq!(back, renamed);
    }

    #[test]
    fn minor_witnesses_replay(m in matroid(8), p in matroid(5)) {
        if let Some(w) = m.has_minor(&p) {
            prop_assert!(w.verify(&m, &p));
        }
        // Deleting an early element and contracting a late one shifts indices between the steps.
        let n = m.len();
        if n >= 2 {
            let minor = m.delete_set(1).contract_set(1 << (n - 2));
            let w = m.has_minor(&minor);
            prop_assert!(w.is_some_and(|w| w.verify(&m, &minor)));
        }
    }
}

#[test]
fn single_element_minors_of_a_circuit() {
    let c4 = BinaryMatroid::from_rows(&["a", "b", "c", "d"], &[0b1001, 0b1010, 0b1100]).unwrap();
    assert_eq!(c4.circuits(), vec![0b1111]);
    assert_eq!(c4.delete(&["a"]).unwrap().circuits(), Vec::<u64>::new());
    assert_eq!(c4.contract(&["a"]).unwrap().circuits(), vec![0b111]);
}

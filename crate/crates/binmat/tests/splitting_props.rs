mod common;

use binmat::bits;
use binmat::{split, split_with_element, BinaryMatroid};
use common::matroid_and_set;
use proptest::prelude::*;

fn sp(m: &BinaryMatroid, t: u64) -> BinaryMatroid {
    split(m, &m.label_list(t)).unwrap()
}

/// `t` as labels of `m`, for use on a minor of `m` that keeps them.
fn relabel_set(from: &BinaryMatroid, to: &BinaryMatroid, t: u64) -> u64 {
    to.set_of(&from.label_list(t)).unwrap()
}

proptest! {
    #[test]
    fn deletion_and_contraction_outside_t((m, t) in matroid_and_set(9, 3)) {
        let s = sp(&m, t);
        for x in bits::members(m.ground() & !t) {
            let d = m.delete_set(1 << x);
            prop_assert_eq!(s.delete_set(1 << x), sp(&d, relabel_set(&m, &d, t)));
            let c = m.contract_set(1 << x);
            prop_assert_eq!(s.contract_set(1 << x), sp(&c, relabel_set(&m, &c, t)));
        }
    }

    #[test]
    fn deletion_inside_t((m, t) in matroid_and_set(9, 3)) {
        let s = sp(&m, t);
        for x in bits::members(t) {
            let d = m.delete_set(1 << x);
            prop_assert_eq!(s.delete_set(1 << x), sp(&d, relabel_set(&m, &d, t & !(1 << x))));
        }
        prop_assert_eq!(s.delete_set(t), m.delete_set(t));
    }

    #[test]
    fn cocircuit_t_changes_nothing((m, _t) in matroid_and_set(8, 0)) {
        for c in m.cocircuits() {
            prop_assert_eq!(sp(&m, c), m.clone());
        }
    }

    #[test]
    fn rank_grows_unless_t_is_in_the_row_space((m, t) in matroid_and_set(9, 3)) {
        let grows = bits::rank_of_vectors(m.row_masks().iter().copied().chain([t])) > m.rank();
        prop_assert_eq!(sp(&m, t).rank(), m.rank() + usize::from(grows));
    }

    #[test]
    fn added_element_recovers_both((m, t) in matroid_and_set(9, 3)) {
        let e = split_with_element(&m, &m.label_list(t), "new").unwrap();
        prop_assert_eq!(e.delete(&["new"]).unwrap(), sp(&m, t));
        prop_assert_eq!(e.contract(&["new"]).unwrap(), m.clone());
    }
}

#[test]
fn labels_are_checked() {
    let m = BinaryMatroid::from_rows(&["a", "b"], &[0b11]).unwrap();
    assert!(split(&m, &["c"]).is_err());
    assert!(split_with_element(&m, &["a"], "b").is_err());
}

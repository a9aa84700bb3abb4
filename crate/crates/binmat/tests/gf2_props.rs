use binmat::Gf2Matrix;
use proptest::prelude::*;

fn matrix() -> impl Strategy<Value = Gf2Matrix> {
    (1usize..7, 1usize..70).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec(any::<bool>(), c), r)
            .prop_map(move |rows| Gf2Matrix::from_fn(r, c, |i, j| rows[i][j]))
    })
}

fn row(m: &Gf2Matrix, r: usize) -> Vec<bool> {
    m.row_bits(r)
}

proptest! {
    #[test]
    fn rref_is_idempotent(a in matrix()) {
        let (r, p) = a.rref();
        let (rr, pp) = r.rref();
        prop_assert_eq!(r, rr);
        prop_assert_eq!(p, pp);
    }

    #[test]
    fn rank_of_transpose(a in matrix()) {
        prop_assert_eq!(a.rank(), a.transpose().rank());
    }

    #[test]
    fn rref_keeps_the_row_space(a in matrix()) {
        let (r, _) = a.rref();
        for i in 0..a.rows() {
            prop_assert!(r.in_row_space(&row(&a, i)).unwrap());
        }
        for i in 0..r.rows() {
            prop_assert!(a.in_row_space(&row(&r, i)).unwrap());
        }
    }

    #[test]
    fn appending_a_row(a in matrix(), seed in any::<u64>()) {
        let v: Vec<bool> = (0..a.cols()).map(|c| seed.rotate_left(c as u32) & 1 == 1).collect();
        let grows = !a.in_row_space(&v).unwrap();
        prop_assert_eq!(a.with_row(&v).unwrap().rank(), a.rank() + usize::from(grows));
    }

    #[test]
    fn standard_form_starts_with_identity(a in matrix()) {
        let (s, perm) = a.standard_form();
        let r = a.rank();
        prop_assert_eq!(s.rows(), r);
        for i in 0..r {
            for j in 0..r {
                prop_assert_eq!(s.get(i, j), i == j);
            }
        }
        let mut sorted = perm.clone();
        sorted.sort_unstable();
        prop_assert_eq!(sorted, (0..a.cols()).collect::<Vec<_>>());
        prop_assert_eq!(s, a.select_columns(&perm).rref().0);
    }
}

#[test]
fn vector_outside_the_row_space() {
    let a = Gf2Matrix::from_strs(&["1100", "0110"]).unwrap();
    assert!(a.in_row_space(&[true, false, true, false]).unwrap());
    assert!(!a.in_row_space(&[true, false, false, false]).unwrap());
    assert!(a.in_row_space(&[true]).is_err());
}

//! The splitting construction: append a row that is 1 exactly on a chosen set.

use alloc::format;

use crate::error::{Error, Result};
use crate::matroid::BinaryMatroid;

/// `M_T`: the vector matroid of the representation with the indicator row of `t` appended.
pub fn split<S: AsRef<str>>(m: &BinaryMatroid, t: &[S]) -> Result<BinaryMatroid> {
    let ts = m.set_of(t)?;
    let mut rows = m.row_masks().to_vec();
    rows.push(ts);
    BinaryMatroid::from_rows(m.labels(), &rows)
}

/// `M_T'`: as [`split`], plus a new element `a` that is 1 only in the appended row.
///
/// Deleting `a` gives back `M_T`; contracting `a` gives a matroid isomorphic to `M`.
pub fn split_with_element<S: AsRef<str>>(
    m: &BinaryMatroid,
    t: &[S],
    a: &str,
) -> Result<BinaryMatroid> {
    if m.index_of(a).is_some() {
        return Err(Error::Label(format!("element {a} already present")));
    }
    let ts = m.set_of(t)?;
    let n = m.len();
    let mut labels = m.labels().to_vec();
    labels.push(a.into());
    let mut rows = m.row_masks().to_vec();
    rows.push(ts | 1 << n);
    BinaryMatroid::from_rows(&labels, &rows)
}

//! Binary matroids over GF(2), the splitting construction, and desk-scale
//! excluded-minor searches for graphic matroids whose splittings are cographic.
#![no_std]

extern crate alloc;

pub mod bits;
mod canon;
pub mod cographic;
pub mod enumerate;
pub mod error;
pub mod gf2;
pub mod graph;
mod iso;
pub mod matroid;
pub mod minor;
pub mod quotients;
pub mod search;
pub mod splitting;

pub use cographic::{
    cographic_culprit, is_cographic, is_graphic, trivial_family_member, Culprit, ExcludedMinors,
    FMember,
};
pub use enumerate::{enumerate_connected_multigraphs, Constraints};
pub use error::{Error, Result};
pub use gf2::Gf2Matrix;
pub use graph::{Dedup, ExtensionMode, GraphIso, Multigraph, StructuralProfile};
pub use matroid::{BinaryMatroid, Signature};
pub use minor::{MinorWitness, Pattern};
pub use quotients::{
    admissible_realizations, binary_extensions, graphic_quotients, quotient_parity_holds,
    Exclusion, QuotientResult,
};
pub use search::{
    classify_splittings, localize_minimal, search_forbidden_minors, Classification,
    CographicOracle, Executor, LocalCase, Localization, Minimality, ObstructionReport,
    SearchOutcome, Sequential,
};
pub use splitting::{split, split_with_element};

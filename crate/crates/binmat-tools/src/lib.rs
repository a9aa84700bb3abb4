//! File formats, the fixture catalog, verification checks and the command line front end for
//! the `binmat` crate.

pub mod catalog;
pub mod checks;
pub mod cli;
pub mod error;
pub mod exec;
pub mod formats;

pub use catalog::{Catalog, CatalogEntry, Kind, Validation};
pub use checks::{Check, Evidence, Options, Outcome};
pub use error::{ToolError, ToolResult};
pub use exec::Rayon;

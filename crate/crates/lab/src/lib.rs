//! Catalogue, JSON formats, the square-example reproduction and the consistency
//! suite on top of `banach-geom-core`.

pub mod catalogue;
pub mod check;
pub mod error;
pub mod json;
pub mod repro;
pub mod suite;

pub use catalogue::{SpaceCatalogue, BUILTIN_LABELS};
pub use check::{exit_code, run_check, run_verify, PROPERTIES};
pub use error::{LabError, Result};
pub use repro::{repro_example_5_5, ReproReport};
pub use suite::{run_suite, SuiteReport};

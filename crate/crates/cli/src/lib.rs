//! Census, enumeration and verification suites around `comblab-core`.

pub mod canon;
pub mod census;
pub mod enumerate;
pub mod error;
pub mod random;
pub mod report;
pub mod suites;

pub use error::{HarnessError, Result};

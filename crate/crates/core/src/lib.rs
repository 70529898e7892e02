//! Exact checking of q-series identities built from Lambert series and q-binomials.
//!
//! Both sides of every identity are expanded as truncated formal Laurent
//! series in `q` with exact rational coefficients and compared term by term.

pub mod catalog;
pub mod error;
pub mod limits;
pub mod qobjects;
pub mod report;
pub mod series;

pub use error::{Error, Result};

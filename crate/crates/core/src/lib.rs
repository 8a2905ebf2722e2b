//! Exact fixed-point evaluation of the Kerala-school series.
//!
//! Everything numeric is carried as [`FixedDec`], a signed decimal with an
//! explicit scale backed by the base-10^9 [`BigNat`]. No platform float
//! appears on any computation or output path.

pub mod bigfixed;
pub mod chronology;
pub mod cli;
pub mod error;
pub mod geometry;
pub mod par;
pub mod pi_series;
pub mod reference;
pub mod report;
pub mod trig;

pub use bigfixed::{BigNat, FixedDec};
pub use error::{Error, Result};
pub use par::Execution;

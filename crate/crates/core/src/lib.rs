//! Representation counts, theta-series identities and universality
//! classification for the quaternary forms
//! `a x^2 + b y^2 + c (z^2 + zw + w^2)`.

pub mod classify;
pub mod error;
pub mod exclusions;
pub mod identities;
pub mod qseries;
pub mod repcount;
pub mod cli;

pub use error::{Error, Result};
pub use qseries::TruncatedSeries;
pub use repcount::{QuaternaryForm, TernaryMixedForm};

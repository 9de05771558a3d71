//! Exact adelic arithmetic over `Q`, quadratic fields and `F_q(t)`.

pub mod adele;
pub mod batch;
pub mod classgroup;
pub mod cli;
pub mod domains;
pub mod error;
pub mod idele;
pub mod local;
pub mod sample;
pub mod valuation;

pub use error::{Error, Result};

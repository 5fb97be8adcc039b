pub mod coeffs;
pub mod error;
pub mod rootsys;
pub mod strata;
pub mod uqplus;
pub mod weyl;

pub use error::{Error, Result};

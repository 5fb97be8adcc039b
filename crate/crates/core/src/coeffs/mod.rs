//! Exact arithmetic in the coefficient field Q(q).

mod parse;
mod poly;
mod qint;
mod qrat;

pub use poly::{Poly, Rat};
pub use qint::{q_binomial, q_factorial, q_integer};
pub use qrat::QRat;

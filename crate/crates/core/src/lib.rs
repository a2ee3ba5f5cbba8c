//! Finite set-theoretic solutions of the Yang-Baxter equation and the
//! quadratic algebras, monoids, R-matrices and calculi built from them.
//!
//! Indices are 0-based throughout the library; 1-based numbering only
//! appears in text formats and pretty-printers.

pub mod braidmon;
pub mod diffcalc;
pub mod error;
pub mod growth;
pub mod linalg;
pub mod linr;
pub mod ncgb;
pub mod orbits;
pub mod quadset;
pub mod verseg;

pub use error::{Error, Result};

/// Exact rational scalar used everywhere.
pub type Rat = num_rational::BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(v: i64) -> Rat {
    Rat::from_integer(v.into())
}

//! Perfect matchings of Aztec rectangles with holes on a single row.
//!
//! Closed forms ([`formulas`]) are checked against exact matching counts
//! ([`aztec`]), Schur function identities ([`schur`], [`identities`]) and a
//! colour-exchange bijection on nonintersecting lattice paths ([`paths`]).

pub mod arith;
pub mod aztec;
pub mod cli;
pub mod error;
pub mod formulas;
pub mod identities;
pub mod paths;
pub mod schur;

pub use error::{Error, Result};

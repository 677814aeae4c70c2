//! CSS codes as chain complexes over F2, with automated code surgery.
//!
//! The crate builds codes ([`products`], [`catalog`]), computes their
//! distances ([`distance`]) and performs merges and single-qubit logical
//! measurements by gluing gadget complexes onto them ([`surgery`]).

pub mod catalog;
pub mod codes;
pub mod distance;
pub mod error;
pub mod f2;
pub mod products;
pub mod surgery;

pub use codes::{Basis, CodeParams, CssCode, LogicalBasis, LogicalSubcomplex, SubsystemCode};
pub use error::{Error, Result};
pub use f2::{BitMatrix, BitVec};

//! Exact computations for virtual polytopes over multi-fans: characteristic
//! pairs, volume polynomials, arrangements of affine subspaces and the
//! associated graded algebras.
//!
//! All arithmetic is over arbitrary-precision rationals.

pub mod arrangements;
pub mod cohomology;
pub mod complexes;
pub mod error;
pub mod exact;
pub mod fixtures;
pub mod virtualpoly;

pub use error::{Error, Result};

//! Exact enumeration, generating functions and identity checks for lattice
//! paths confined to horizontal strips.
//!
//! Everything here is exact: integers are arbitrary precision and polynomials
//! carry integer (or polynomial) coefficients. The only floating point code is
//! the trigonometric cross-check of walk counts and the root checks in
//! [`classic::factorization_check_float`].

#![no_std]
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod classic;
pub mod error;
pub mod exactmath;
pub mod formulas;
pub mod genfun;
pub mod paths;
pub mod qseries;
pub mod report;
pub mod suite;

pub use error::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

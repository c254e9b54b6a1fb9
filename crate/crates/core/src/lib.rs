//! Exact and high-precision calculus of differential operators with
//! polynomial coefficients, built around the probabilists' Hermite
//! polynomials and the sl(2,R) representations they carry.
//!
//! * [`weyl`]: normal-ordered operators in one or two variables.
//! * [`polyspace`]: truncated polynomial spaces, operator matrices and
//!   matrix exponentials.
//! * [`hermite`]: Hermite, bivariate Hermite, Legendre and Laguerre
//!   polynomials, each with an independent recurrence oracle.
//! * [`sl2`]: sl(2,R) generator families and a commutation checker.
//! * [`verify`]: named identity checks producing structured reports.
//! * [`cli`]: the `hermops` command line.

pub mod cli;
pub mod error;
pub mod hermite;
pub mod polyspace;
pub mod scalar;
pub mod sl2;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
pub use scalar::{Real, Scalar};

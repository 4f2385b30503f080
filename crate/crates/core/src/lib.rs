#![allow(clippy::neg_cmp_op_on_partial_ord)]

//! Numerical verification of double-integral identities expressed through the
//! Lerch transcendent.
//!
//! The crate is organised in four layers:
//!
//! - [`specfun`]: principal-branch elementary functions, the Lerch transcendent
//!   with several evaluation strategies, Hurwitz zeta and its `s`-derivative,
//!   the `2F1(a,1;a+1;z)` family, modified Bessel `K_ν` and Glaisher's constant.
//! - [`quadrature`]: double-exponential quadrature on the half line, the nested
//!   two-dimensional route and the exact one-dimensional reduction of the
//!   double integral family.
//! - [`catalog`]: the identities themselves, as integrand descriptors paired
//!   with closed-form evaluators.
//! - [`verify`]: per-entry verification records and report generation.

pub mod catalog;
pub mod error;
pub mod quadrature;
pub mod specfun;
pub mod verify;

pub use error::{Error, Result};

/// The universal scalar.
pub type ComplexValue = num_complex::Complex64;

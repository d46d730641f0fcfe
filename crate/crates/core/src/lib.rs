//! Exact-arithmetic kernel for verifying pinwheel decompositions of
//! simply connected 4-manifolds and the surgery bookkeeping around them.
//!
//! Everything in this crate is pure and deterministic: arbitrary-precision
//! integers and rationals, no floating point, no IO. The companion `cli`
//! crate adds file formats and the report front end.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod fpgroups;
pub mod pinwheel;
pub mod swkit;
pub mod torus_actions;
pub mod validate;
pub mod zlin;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

//! Exact Riemann solver and path-conservative finite volume schemes for the
//! one-dimensional shear shallow water (SSW) system.
//!
//! The system is written in the quasi-conservative variables
//! `U = (h, h u, h v, E11, E12, E22)` with a non-conservative product
//! `B(m) dh/dx`. Weak solutions are defined through straight-line paths in
//! `U`-space across each discontinuity, which fixes the generalized
//! Rankine-Hugoniot conditions used by both the exact solver ([`exact`]) and
//! the approximate fluctuation splitting solvers ([`fv`]).
//!
//! The crate is `no_std` and only needs `alloc` for the finite volume grid.

#![no_std]
// Negated comparisons are used so that NaN fails every admissibility check.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod error;
mod linalg;
mod math;

pub mod exact;
pub mod fv;
pub mod model;
pub mod waves;

pub use error::{Error, Result};
pub use model::{ConservedState, ModelParams, PrimitiveState};

//! Schmidt-number certification for two-mode continuous-variable states.
//!
//! Starting from the measurable 4×4 covariance matrix of a bipartite state,
//! this crate reduces it to its local-symplectic standard form, builds one of
//! the two generating Gaussian test-operator families, optimizes the operator
//! coefficients, and compares the resulting expectation value against the
//! ladder of rank-constrained minima `g_r`. An expectation value below `g_r`
//! certifies that the Schmidt number of the state exceeds `r`.
//!
//! Modules follow the pipeline:
//!
//! - [`covariance`]: covariance-matrix validation, symplectic invariants,
//!   standard-form reduction, partial transposition, sample estimation.
//! - [`states`]: closed-form standard forms for squeezed thermal and
//!   phase-randomized squeezed vacuum states.
//! - [`witness`]: the two test-operator families, expectation values, and
//!   coefficient optimization.
//! - [`snbounds`]: the `g_r` bound ladder from symmetric tridiagonal
//!   eigenproblems and the certification verdict.
//! - [`oracle`]: independent truncated-Fock verification via dense operator
//!   matrices and an alternating rank-constrained eigensolver.
//!
//! The crate is `no_std`-compatible: build with
//! `--no-default-features --features libm`. The default features enable
//! `std` math and parallel restarts in the oracle.

#![cfg_attr(not(feature = "std"), no_std)]
// Dense kernels walk matrices by index on purpose; iterator rewrites of
// these loops obscure the math.
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod covariance;
mod linalg;
mod math;
pub mod oracle;
pub mod snbounds;
pub mod states;
pub mod witness;

pub use covariance::{CovarianceMatrix, FamilySelection, StandardForm, SymplecticInvariants};
pub use snbounds::{CertificationReport, GrLadder, SymTridiagonal};
pub use witness::{Family, OptimizationResult, WitnessParams};

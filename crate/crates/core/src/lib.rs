//! Finite-dimensional quantum measurement simulation and uncertainty-relation
//! auditing.
//!
//! The crate simulates indirect measurement models (system ⊗ probe, an
//! interaction unitary, and a pointer observable read off the probe), computes
//! rms measurement noise and disturbance, and audits four uncertainty
//! relations against them: the Robertson preparation bound, the naive
//! noise-disturbance product, and the Ozawa / Fujikawa generalized relations.
//! A scaling experiment tracks how the per-particle bound contracts when
//! identical measurements act on perfectly correlated multi-particle states.
//!
//! Module map:
//! - [`algebra`]: dense complex operators, states, tensor structure, spectral
//!   decomposition, partial trace, entropy.
//! - [`factory`]: spins, truncated oscillators, composite observables,
//!   correlated and product state constructors.
//! - [`measure`]: measurement models (von Neumann coupling, CNOT), noise and
//!   disturbance functionals, composite-measurement decomposition audits.
//! - [`relations`]: the four relation checks, quantum covariance, and the
//!   entanglement-scaling experiment.
//! - [`scenario`], [`report`], [`plot`], [`runner`]: declarative scenario
//!   files, CSV/JSON reports, SVG charts, and the CLI entry points.

pub mod algebra;
pub mod error;
pub mod factory;
pub mod measure;
pub mod plot;
pub mod relations;
pub mod report;
pub mod runner;
pub mod scenario;

pub use error::{Error, Result};

/// Hard cap on the total Hilbert-space dimension. Everything is stored dense;
/// larger spaces are rejected with a structural error.
pub const MAX_TOTAL_DIM: usize = 4096;

/// Max |m[i][j] - conj(m[j][i])| for a matrix to count as Hermitian.
pub const HERMITICITY_TOL: f64 = 1e-12;

/// Max entry of |U†U - I| for a matrix to count as unitary.
pub const UNITARITY_TOL: f64 = 1e-10;

/// Density-matrix eigenvalues may undershoot zero by at most this much.
pub const DENSITY_POSITIVITY_TOL: f64 = 1e-10;

/// Eigenvalues below this are dropped from the entropy sum.
pub const ENTROPY_EIGENVALUE_CUTOFF: f64 = 1e-14;

/// A state is interior-supported when its total probability on the top two
/// levels of every subsystem stays below this threshold. Truncated-ladder
/// commutator identities are only asserted on such states.
pub const INTERIOR_SUPPORT_TOL: f64 = 1e-6;

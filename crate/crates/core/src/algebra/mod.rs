//! Dense complex linear algebra kernel: operators, states, tensor structure,
//! spectral decomposition, evolution, partial trace, and entropy.
//!
//! Index convention is row-major over subsystem slots: slot 0 is the most
//! significant digit of a composite basis index, so `tensor([a, b])` matches
//! the usual Kronecker product `a ⊗ b`.

mod dim;
mod index;
mod operator;
mod state;
mod unitary;

pub use dim::Dim;
pub(crate) use index::SlotEmbedding;
pub use operator::{
    commutator, embed, embed_on_slots, expectation, std_dev, tensor, Operator,
};
pub use state::{
    partial_trace, partial_trace_state, vn_entropy, DensityMatrix, StateVector,
};
pub use unitary::{unitary_from_generator, Unitary};

pub(crate) use unitary::hermitian_eigen;

/// Complex scalar used throughout the crate.
pub type C64 = num_complex::Complex64;

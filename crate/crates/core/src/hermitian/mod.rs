//! Dense complex linear algebra for one to three qubits.
//!
//! Basis convention: particle 1 is the most significant tensor factor, so
//! the computational basis index is `4·b₁ + 2·b₂ + b₃` with `|0⟩ ↦ 0`.

mod jacobi;
mod matrix;
mod operators;

pub use jacobi::{hermitian_eigenvalues, HERMITIAN_INPUT_TOL, OFF_DIAGONAL_TOL};
pub use matrix::{kron, ComplexMatrix, MAX_DIM};
pub use operators::{
    outcome_probability, pauli, trace_distance, DensityMatrix, DichotomicObservable, Outcome, AXIS_TOL, HERMITIAN_TOL,
    INVOLUTION_TOL, PROBABILITY_TOL, PSD_SLACK, TRACE_TOL,
};

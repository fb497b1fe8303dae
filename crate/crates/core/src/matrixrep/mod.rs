//! The exact defining matrix realization of the classical superalgebra and
//! relation checks by direct matrix arithmetic.

mod classical;
mod matrix;
mod realization;
mod span;

pub use classical::{
    check_instance, classical_instances, verify_classical, ClassicalFamily, ClassicalInstance,
    ClassicalReport, ClassicalWitness,
};
pub use matrix::{ExactMatrix, Labels};
pub use realization::{basis_matrix, bracket, green_basis, MatrixError, Realization, MAX_DIM};
pub use span::Span;

//! Exact linear algebra over Q and prime fields.

mod matrix;
mod scalar;
mod subspace;
mod tensor;

pub use matrix::{Matrix, Rref};
pub use scalar::{Field, Scalar, PRIME_BOUND};
pub use subspace::Subspace;
pub use tensor::{
    axpy, decode, encode, kron, kron_all, permute_factors, swap, tensor_vec, unit_vector,
};

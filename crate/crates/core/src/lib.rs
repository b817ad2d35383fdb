//! Exact structure-constant computations for partial, lax and weak
//! (co)actions of finite-dimensional Hopf algebras.
//!
//! All maps are dense matrices over Q or F_p acting on coordinate columns.
//! Tensor products of bases are ordered row-major: `e_i ⊗ e_j` sits at
//! index `i * d2 + j`, and longer tensors nest the same way.

pub mod actions;
pub mod coactions;
pub mod duality;
pub mod error;
pub mod exactlin;
pub mod examples;
pub mod frobenius;
pub mod galois;
pub mod mapfile;
pub mod par;
pub mod presentations;
pub mod random;
pub mod report;
pub mod tensor_over;

pub use error::{Error, Result};

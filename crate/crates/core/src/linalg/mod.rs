//! Exact rational linear algebra kernel.

pub mod invariance;
pub mod matrix;
pub mod minpoly;
pub mod nullspace;
pub mod poly;
pub mod rational;
pub mod signature;

pub use invariance::{invariance_system, invariant_matrices, InvarianceMode};
pub use matrix::RationalMatrix;
pub use minpoly::{characteristic_polynomial, minimal_polynomial};
pub use nullspace::{coordinates, independent_subset, kernel_of_map, nullspace_basis, rank, SpanBuilder};
pub use poly::Polynomial;
pub use rational::{format_rational, parse_rational, rat, ratio, rational_sqrt, Rational};
pub use signature::{congruence_signature, Signature};

//! Exact analysis of real matrix Lie algebras and groups: commutant algebra
//! and its real/complex/quaternionic type, invariant bilinear forms and the
//! classical group that stabilises them, and Lie-algebra structure
//! (center, Killing form, closedness verdict).

pub mod classical;
pub mod commutant;
pub mod error;
pub mod forms;
pub mod linalg;
pub mod rep;
pub mod report;
pub mod structure;
pub mod zoo;

pub use error::{Error, Result};

//! Gradings, derivations and their exponentials.

mod automorphism;
mod derivation;
mod grading;

pub use automorphism::PolyAutomorphism;
pub use derivation::{Derivation, DerivationDegree, DerivationJson};
pub use grading::{Grading, PolyDegree};

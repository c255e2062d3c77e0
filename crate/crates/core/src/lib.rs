//! Commutative algebraic monoid structures on affine spaces.
//!
//! Everything is computed exactly over the rationals: polynomial
//! multiplication maps, their axioms, the catalog of known families, the
//! normalization of commuting derivation pairs on `A^3`, and structure
//! theory (idempotents, nilpotents, group-like powers) on concrete monoids.

pub mod catalog;
pub mod classify;
pub mod derivations;
pub mod error;
pub mod linalg;
pub mod monoids;
pub mod poly;
pub mod rational;
pub mod structure;

pub use derivations::{Derivation, DerivationDegree, Grading, PolyAutomorphism};
pub use catalog::{FamilyDescriptor, FamilyTag};
pub use error::{Error, Result};
pub use monoids::MonoidStructure;
pub use poly::{PolyMap, Polynomial, Ring};
pub use rational::Rational;

//! Exact symbolic kernel for multiplicity-free weight systems, graded
//! supercommutative algebras and their multiplicity-free coverings.

pub mod algebra;
pub mod atlas;
pub mod cli;
pub mod covering;
pub mod error;
pub mod invariants;
pub mod linalg;
pub mod morphism;
pub mod text;
pub mod weights;

pub use error::{Error, Result};

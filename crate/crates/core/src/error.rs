use thiserror::Error;

use crate::text::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} generators, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid weight system: {0}")]
    InvalidWeightSystem(String),

    #[error("weight system is not invariant under the symmetric group")]
    NotSymmetric,

    #[error("weight system does not contain the generator a{0}")]
    MissingGenerator(usize),

    #[error("length {0} is not in the quotient label")]
    LengthNotInLabel(usize),

    #[error("invalid algebra spec: {0}")]
    InvalidSpec(String),

    #[error("algebra mismatch: {0}")]
    SpecMismatch(String),

    #[error("unknown variable: {0}")]
    UnknownVariable(String),

    #[error("the symmetric group does not act on this algebra: {0}")]
    ActionUndefined(String),

    #[error("monomial is not multiplicity-free: {0}")]
    NotMultiplicityFree(String),

    #[error("polynomial is not invariant under the symmetric group")]
    NotInvariant,

    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),

    #[error("no lift exists: {0}")]
    NoLift(String),

    #[error("invalid atlas: {0}")]
    InvalidAtlas(String),

    #[error(transparent)]
    Parse(#[from] ParseError),
}

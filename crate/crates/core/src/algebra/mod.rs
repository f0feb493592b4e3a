//! Graded supercommutative polynomial algebras over exact rationals.

pub mod basis;
mod coefficient;
mod monomial;
mod poly;
mod spec;

pub use coefficient::BaseCoefficient;
pub use monomial::{BaseMonomial, Canonical, FiberMonomial};
pub use poly::Polynomial;
pub use spec::{AlgebraSpec, FiberVar, Grading, ParityRule, VariableNames};

pub type Scalar = num::BigRational;

/// Integer as an exact rational.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(n.into())
}

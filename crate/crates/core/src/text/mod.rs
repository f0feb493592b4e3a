//! Plain-text grammar for weight systems, algebra specs, polynomials,
//! morphisms and atlases.

use std::fmt;

mod lexer;
mod parser;
mod printer;

pub use parser::{parse_document, parse_polynomial, parse_weight, parse_weight_system, Document, Item};
pub use printer::{print_atlas, print_document, print_morphism, print_poly_decl, print_spec, print_weight_system};

/// Syntax or semantic error with a 1-based source location.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl fmt::Display) -> Self {
        ParseError {
            line,
            column,
            message: message.to_string(),
        }
    }
}

#[cfg(test)]
mod tests;

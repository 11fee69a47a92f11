//! Exact arithmetic in towers of quadratic extensions of Q(i).

mod rational;
mod scalar;
mod spec;

pub use rational::{
    format_rational, int, parse_rational, rat, rational_sqrt, squarefree_decomposition, Rational,
};
pub use scalar::TowerScalar;
pub use spec::{FieldSpec, Symbol, MAX_SYMBOLS};

/// Sparse coordinates over square-free monomials, sorted by mask.
pub type Coords = Vec<(u64, Rational)>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("operands live in incompatible field towers")]
    MismatchedSpec,
    #[error("element is a zero divisor in this tower")]
    ZeroDivisor,
    #[error("division by zero")]
    DivisionByZero,
    #[error("symbol {0:?} is already adjoined")]
    DuplicateSymbol(String),
    #[error("unknown symbol {0:?}")]
    UnknownSymbol(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("tower limited to {0} symbols")]
    TooManySymbols(usize),
    #[error("tower lacks a square root of {0}")]
    MissingRadical(String),
}

#[cfg(test)]
mod tests;

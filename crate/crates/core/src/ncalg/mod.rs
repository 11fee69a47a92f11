//! Free-algebra terms, graded presentations and degree-truncated quotients.

mod algebra;
mod elements;
mod graded;
mod params;
mod poly;
mod presentation;
mod word;

pub use algebra::{
    central_subspace, free_rank_dimension, homogeneous_dimension, ideal_membership, is_central,
    regular_sequence_check, Certificate, CertificateTerm, GradedAlgebra, Membership,
    RegularSequenceReport, DEFAULT_BOUND,
};
pub use elements::{
    factor_ring, nilpotent_element, omega1, omega2, theta1, theta2, twisted_factor_ring,
    twisted_relations, twisted_sklyanin_presentation,
};
pub use graded::{Coefficient, GradedQuotient};
pub use params::{validate_parameters, ParamRadicals, ParamViolation, Params};
pub use poly::NcPoly;
pub use presentation::{
    in_span, quotient, sklyanin_presentation, sklyanin_relations, span_coefficients, span_equal,
    span_rank, Presentation,
};
pub use word::Word;

use crate::field::FieldError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum AlgebraError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("invalid parameters: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    InvalidParameters(Vec<ParamViolation>),
    #[error("degree {degree} exceeds the truncation bound {bound}")]
    DegreeExceedsBound { degree: usize, bound: usize },
    #[error("inhomogeneous input: {0}")]
    Inhomogeneous(String),
    #[error("relation is not quadratic: {0}")]
    NotQuadratic(String),
    #[error("element is not central: {0}")]
    NonCentral(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

#[cfg(test)]
mod tests;

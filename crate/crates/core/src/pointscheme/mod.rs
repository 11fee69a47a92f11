//! Points of P^3 and the point scheme of a quadratic algebra, computed
//! through the multilinearized relations.

mod curve;
mod exclusion;
mod known;
mod multilinear;
mod point;

#[cfg(test)]
mod tests;

use thiserror::Error;

use crate::field::FieldError;
use crate::ncalg::AlgebraError;

pub use curve::{curve_membership, curve_point};
pub use exclusion::{exclusion_report, two_zero_exclusion, ExclusionReport, PatternResult};
pub use known::{
    known_point_pairs, known_points, known_points_in, known_points_spec, orbit_report,
    orbit_representatives, pairwise_distinct, Orbit, OrbitReport,
};
pub use multilinear::{coefficient_matrix, multilinearize, successor, MultilinearSystem};
pub use point::{g_action, Point};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum PointError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("algebra: {0}")]
    Algebra(String),
    #[error("all coordinates are zero")]
    ZeroPoint,
    #[error("no successor: the coefficient matrix has full rank")]
    KernelDimZero,
    #[error("successor not unique: kernel has dimension {0}")]
    KernelDimHigh(usize),
    #[error("relation is not quadratic: {0}")]
    NotQuadratic(String),
    #[error("point list is not closed under the group action: missing {0}")]
    NotActionClosed(String),
    #[error("degenerate seed: {0}")]
    DegenerateSeed(String),
    #[error("missing radical: {0}")]
    MissingRadical(String),
}

impl From<AlgebraError> for PointError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::Field(f) => Self::Field(f),
            other => Self::Algebra(other.to_string()),
        }
    }
}

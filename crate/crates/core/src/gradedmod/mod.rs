//! Graded modules given extensionally: dimensions per degree and the
//! action of each generator as a matrix between consecutive degrees.
//!
//! Point modules come from iterating the successor map; fat points of
//! multiplicity 2 come from doubling a point module through the 2×2 matrix
//! model, and doubling once more restricts back to the original algebra.

mod decompose;
mod fat;
mod point_module;
mod slice;


use thiserror::Error;

use crate::field::FieldError;
use crate::ncalg::AlgebraError;
use crate::pointscheme::PointError;

pub use decompose::{
    annihilator_degree1, identify_point, orbit_annihilator, restrict_and_decompose,
    subspace_is_g_invariant, DecompositionReport, Summand,
};
pub use fat::{
    cyclic_codimension_check, double, fat_point, generated_in_degree_zero, group_intertwiner_check,
};
pub use point_module::{point_module, point_slice, slice_kills, theta_kills, PointModuleData};
pub use slice::{Matrix, ModuleSlice};

/// Depth used by module checks unless a caller asks otherwise.
pub const DEFAULT_DEPTH: usize = 5;

#[derive(Clone, Debug, Error, PartialEq)]
pub enum ModuleError {
    #[error(transparent)]
    Point(#[from] PointError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("algebra: {0}")]
    Algebra(String),
    #[error("base point has {0} nonzero coordinates; at least 3 are needed")]
    TooFewNonzero(usize),
    #[error("the zero vector generates nothing")]
    ZeroVector,
    #[error("annihilator has dimension {0}, a point module needs 3")]
    NotPointModule(usize),
    #[error("degree {degree} is outside the slice (depth {depth})")]
    DegreeOutOfRange { degree: usize, depth: usize },
    #[error("relation does not annihilate the slice: {0}")]
    RelationFails(String),
    #[error("decomposition failed: {0}")]
    Decomposition(String),
}

impl From<AlgebraError> for ModuleError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::Field(f) => Self::Field(f),
            other => Self::Algebra(other.to_string()),
        }
    }
}

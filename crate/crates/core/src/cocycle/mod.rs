//! The Klein four-group, its 2-cocycle, twisted presentations, the 2×2
//! matrix model and the grading/coboundary/scaling tables.

mod grading;
mod klein;
mod matrix;
mod scaling;
mod table;

pub use grading::{
    enumerate_gradings, g_translate, standard_grading, twist_poly, twist_presentation,
    GradingAssignment, Perm4,
};
pub use klein::KleinElement;
pub use matrix::{generator_matrix, group_matrix, matrix_model, matrix_mul, PolyMatrix};
pub use scaling::{scaling_isomorphism_check, scaling_table, ScalingRow};
pub use table::{
    coboundary_equivalent, coboundary_table, mu, Coboundary, CoboundaryRow, CocycleTable,
};

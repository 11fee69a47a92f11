//! Exact construction and verification of 4-dimensional Sklyanin algebras
//! and their Klein-four cocycle twists.
//!
//! Layers, bottom up:
//! - [`field`]: exact towers of quadratic extensions of Q(i);
//! - [`linalg`]: sparse exact elimination over any [`linalg::Field`];
//! - [`ncalg`]: words, polynomials, presentations and graded quotients;
//! - [`cocycle`]: the Klein four-group, its cocycle, twists and isomorphism tables;
//! - [`pointscheme`]: multilinearizations, the 20 points and their orbits;
//! - [`gradedmod`]: point modules, fat points and restriction dualities.
//!
//! ```
//! use sklyanin_core::ncalg::{twisted_sklyanin_presentation, GradedAlgebra};
//! use sklyanin_core::pointscheme::{known_points, multilinearize, orbit_report};
//! use sklyanin_core::Params;
//!
//! # fn main() -> Result<(), Box<dyn std::error::Error>> {
//! let p = Params::defaults(); // β = 2, γ = 3, α = -5/7
//! let twist = twisted_sklyanin_presentation(&p)?;
//! assert_eq!(GradedAlgebra::new(&twist, 4)?.dimensions(), [1, 4, 10, 20, 35]);
//!
//! let system = multilinearize(&twist)?;
//! let (_, points) = known_points(&p)?;
//! let orbits = orbit_report(&points, &system)?;
//! assert_eq!(orbits.sizes(), [1, 1, 1, 1, 4, 4, 4, 4]);
//! # Ok(())
//! # }
//! ```

pub mod cocycle;
pub mod field;
pub mod gradedmod;
pub mod linalg;
pub mod ncalg;
pub mod pointscheme;

pub use cocycle::KleinElement;
pub use field::{FieldError, FieldSpec, Rational, TowerScalar};
pub use ncalg::{NcPoly, Params, Presentation, Word};
pub use pointscheme::Point;

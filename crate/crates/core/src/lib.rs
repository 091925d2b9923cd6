//! Exact dynamics of the regular and even continued-fraction maps, their
//! natural extensions and cross-sections of the geodesic flow, cutting
//! sequences in the Farey and even Farey tessellations, and invariant
//! densities.
//!
//! All map evaluations are exact over rationals and real quadratic
//! irrationals; floating point is only used by the Birkhoff-average
//! experiment in [`measure`].

pub mod cf;
pub mod cutting;
pub mod ecf;
pub mod error;
pub mod measure;
pub mod moebius;
pub mod mutants;
pub mod numeric;
pub mod sample;
pub mod section;
pub mod verify;

pub use error::{Error, Result};
pub use moebius::{IntegerMoebius, Lft};
pub use numeric::{BoundaryPoint, QuadraticSurd, Rational};

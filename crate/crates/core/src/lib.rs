//! Extremal length geometry on the flat torus.
//!
//! The Teichmüller space of the torus is the upper half-plane, measured
//! foliations are weighted slopes in `R^2`, and every extremal length is a
//! closed-form quadratic form. On top of that the crate builds the
//! Gardiner–Masur cone with its two lifts, the unified intersection pairing
//! `i(.,.)`, intrinsic extremal length on the cone, the extended Gromov
//! product, the mapping class group action, and a small piecewise-linear
//! metric space (a line with stacked frames) on which the Gromov product
//! fails to extend to the horofunction boundary.

pub mod cone;
pub mod foliation;
pub mod mcg;
pub mod numeric;
pub mod optimize;
pub mod teich;
pub mod walsh;

pub use cone::{ClosurePoint, ConePoint, FunctionVector, Membership, ModelPoint};
pub use foliation::{CurveClass, MeasuredFoliation};
pub use mcg::MappingClass;
pub use numeric::{Real, Tolerance};
pub use teich::{IdealPoint, TeichPoint};
pub use walsh::WalshPoint;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("zero foliation has no projective class")]
    ZeroFoliation,
    #[error("imaginary part must be positive, got {0}")]
    NotInUpperHalfPlane(f64),
    #[error("({0}, {1}) is not a primitive curve class")]
    NotPrimitive(i64, i64),
    #[error("curve family must have N >= 1")]
    EmptyFamily,
    #[error("function vectors are defined on different curve families")]
    FamilyMismatch,
    #[error("determinant must be +1 or -1, got {0}")]
    NotUnimodular(i64),
    #[error("need at least {min} samples, got {got}")]
    TooFewSamples { min: usize, got: usize },
    #[error("neighborhood radius must be positive, got {0}")]
    NonPositiveRadius(f64),
    #[error("cone scale must be nonnegative and finite, got {0}")]
    InvalidScale(f64),
    #[error("frame index must be positive")]
    ZeroFrame,
    #[error("arc position {pos} outside [0, {len}] on frame {n}")]
    ArcOutOfRange { n: u32, pos: f64, len: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;

//! Convexity in the hyperbolic plane, computed in the Poincaré disk.
//!
//! Geometry is generic over a [`Real`] scalar (`f32`, `f64`, or the
//! double-double [`Dd`] for bodies that reach far toward the ideal boundary).
//! The aliases below fix the scalar for the common cases.

pub mod constructions;
pub mod curves;
pub mod dd;
pub mod error;
pub mod hull;
pub mod measure;
pub mod model;
pub mod optim;
pub mod scalar;
pub mod width;

pub use dd::Dd;
pub use error::{GeomError, Result};
pub use scalar::{Real, Tol};

pub type Point = model::HPoint<f64>;
pub type Ideal = model::IdealPoint<f64>;
pub type Iso = model::Isometry<f64>;
pub type Curve = curves::Curve<f64>;
pub type Arc = curves::Arc<f64>;
pub type Region = measure::Region<f64>;
pub type Ball = hull::Ball<f64>;
pub type HBody = hull::HConvexBody<f64>;
pub type CBody = hull::ConvexBody<f64>;
pub type Strip = width::Strip<f64>;
pub type Triangle = constructions::RegularHorocyclicTriangle<f64>;
pub type Cap = constructions::CapDomain<f64>;

pub type PointDd = model::HPoint<Dd>;
pub type CBodyDd = hull::ConvexBody<Dd>;
pub type HBodyDd = hull::HConvexBody<Dd>;

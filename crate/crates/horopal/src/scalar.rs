//! The scalar abstraction shared by every geometric routine.

use core::fmt::{Debug, Display};
use core::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, NumAssignOps, ToPrimitive};

use crate::dd::Dd;

/// A real scalar type the geometry can be computed in.
///
/// Implemented for `f32`, `f64` and the double-double [`Dd`].
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + NumAssignOps
    + Sum
    + Debug
    + Display
    + Default
    + Send
    + Sync
    + 'static
{
    /// Converts an `f64` constant into this type.
    fn lit(x: f64) -> Self;

    /// Lossy conversion to `f64` for reporting.
    fn f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    /// Points whose Euclidean norm reaches `1 - boundary_margin()` are rejected.
    fn boundary_margin() -> Self {
        Self::epsilon() * Self::lit(45.0)
    }

    /// Default absolute tolerance for lengths and angles.
    fn default_tol() -> Self {
        Self::lit(1e-10).max(Self::epsilon() * Self::lit(1e4))
    }
}

impl Real for f32 {
    fn lit(x: f64) -> Self {
        x as f32
    }
}

impl Real for f64 {
    fn lit(x: f64) -> Self {
        x
    }
}

impl Real for Dd {
    fn lit(x: f64) -> Self {
        Dd::of(x)
    }
}

/// Tolerances used by predicates; `Default` picks values suited to the scalar.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tol<T> {
    /// Hyperbolic lengths and distances.
    pub length: T,
    /// Angles in radians.
    pub angle: T,
    /// Euclidean distance under which two intersection points merge into a tangency.
    pub merge: T,
}

impl<T: Real> Default for Tol<T> {
    fn default() -> Self {
        Tol {
            length: T::default_tol(),
            angle: T::default_tol(),
            merge: T::lit(1e-8).max(T::epsilon().sqrt() * T::lit(0.5)),
        }
    }
}

impl<T: Real> Tol<T> {
    pub fn with_length(mut self, length: T) -> Self {
        self.length = length;
        self
    }
}

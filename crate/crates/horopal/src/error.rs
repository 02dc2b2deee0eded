use thiserror::Error;

/// Failures of geometric operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeomError {
    #[error("point ({x}, {y}) is not inside the open unit disk")]
    OutsideDisk { x: f64, y: f64 },
    #[error("degenerate input: {0}")]
    Degenerate(&'static str),
    #[error("expected a {expected} but got a {found}")]
    WrongKind { expected: &'static str, found: &'static str },
    #[error("{what} = {value} is outside its valid range {range}")]
    Range { what: &'static str, value: f64, range: &'static str },
    #[error("point is off the curve (residue {0:e})")]
    OffCurve(f64),
    #[error("geodesic does not support the body (violation {0:e})")]
    NotSupporting(f64),
    #[error("point lies inside the body")]
    Inside,
    #[error("curves have identical supports")]
    Coincident,
    #[error("region boundary is not a closed chain (gap {0:e})")]
    OpenChain(f64),
    #[error("no triangle with these data: cosine {0} is outside [-1, 1]")]
    Domain(f64),
}

pub type Result<T, E = GeomError> = core::result::Result<T, E>;

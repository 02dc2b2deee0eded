//! JSON body specifications.
//!
//! ```json
//! {"kind": "hconvex", "generators": [[0.1, 0.2], [-0.3, 0.0], [0.2, -0.4]], "label": "demo"}
//! ```
//!
//! `kind` is `hconvex` (h-convex hull of the generators), `convex` (convex
//! hull) or `ball` (a single generator as center plus a hyperbolic `radius`).

use std::path::Path;

use horopal::hull::{convex_hull, hconvex_hull, Ball, Body, ConvexBody, HConvexBody};
use horopal::model::HPoint;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Hconvex,
    Convex,
    Ball,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BodySpec {
    pub kind: Kind,
    pub generators: Vec<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radius: Option<f64>,
}

/// A body built from a spec.
#[derive(Clone, Debug)]
pub enum SpecBody {
    H(HConvexBody<f64>),
    C(ConvexBody<f64>),
}

impl SpecBody {
    pub fn as_body(&self) -> &dyn Body<f64> {
        match self {
            SpecBody::H(b) => b,
            SpecBody::C(b) => b,
        }
    }

    pub fn area(&self) -> f64 {
        match self {
            SpecBody::H(b) => b.area(),
            SpecBody::C(b) => b.area(),
        }
    }
}

impl BodySpec {
    pub fn parse(text: &str) -> CliResult<Self> {
        let spec: BodySpec = serde_json::from_str(text)?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn read(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
        Self::parse(&text)
    }

    /// A spec listing the given points.
    pub fn from_points(kind: Kind, points: &[HPoint<f64>], label: Option<String>) -> Self {
        BodySpec { kind, generators: points.iter().map(|p| [p.x(), p.y()]).collect(), label, radius: None }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("spec serializes")
    }

    fn validate(&self) -> CliResult<()> {
        if self.generators.is_empty() {
            return Err(CliError::Spec("generator list is empty".into()));
        }
        for (i, [x, y]) in self.generators.iter().enumerate() {
            let n = x.hypot(*y);
            if !(n < 1.0) {
                return Err(CliError::Spec(format!("generator {i} = [{x}, {y}] has norm {n} >= 1")));
            }
        }
        match (self.kind, self.radius) {
            (Kind::Ball, None) => Err(CliError::Spec("a ball needs a radius".into())),
            (Kind::Ball, Some(r)) if !(r > 0.0 && r.is_finite()) => Err(CliError::Spec(format!("ball radius {r} is not positive"))),
            (Kind::Ball, Some(_)) if self.generators.len() != 1 => Err(CliError::Spec("a ball takes exactly one generator, its center".into())),
            (Kind::Hconvex | Kind::Convex, Some(_)) => Err(CliError::Spec("radius is only valid for kind \"ball\"".into())),
            _ => Ok(()),
        }
    }

    pub fn points(&self) -> CliResult<Vec<HPoint<f64>>> {
        self.generators
            .iter()
            .map(|[x, y]| HPoint::new(*x, *y).map_err(|e| CliError::Spec(format!("generator [{x}, {y}]: {e}"))))
            .collect()
    }

    pub fn build(&self) -> CliResult<SpecBody> {
        let pts = self.points()?;
        Ok(match self.kind {
            Kind::Hconvex => SpecBody::H(hconvex_hull(&pts)?),
            Kind::Convex => SpecBody::C(convex_hull(&pts)?),
            Kind::Ball => SpecBody::H(HConvexBody::ball(Ball::new(pts[0], self.radius.expect("validated"))?)),
        })
    }
}

//! Library behind the `horopal` command: body specifications, reports,
//! SVG scenes and the experiment drivers.

pub mod error;
pub mod experiments;
pub mod render;
pub mod report;
pub mod sample;
pub mod spec;

use std::fmt::Write as _;

use horopal::constructions::{k_r, t_w};
use horopal::hull::{Body, HConvexBody};
use horopal::width::{lassak_width_with, WidthMethod};

use error::{CliError, CliResult};
use render::Scene;
use spec::{BodySpec, SpecBody};

/// Result of the `width` command; `ok` is false when the certificate residue exceeds the tolerance.
#[derive(Clone, Debug)]
pub struct WidthOutput {
    pub text: String,
    pub width: f64,
    pub ok: bool,
}

pub fn cmd_width(spec: &BodySpec, method: WidthMethod, samples: usize, tol: f64) -> CliResult<WidthOutput> {
    let body = spec.build()?;
    let w = lassak_width_with(body.as_body(), method, samples)?;
    let mut text = String::new();
    if let Some(label) = &spec.label {
        let _ = writeln!(text, "label: {label}");
    }
    let _ = writeln!(text, "width: {:.12}", w.width);
    let _ = writeln!(text, "method: {method:?}, sweep {samples}, resolution {:.3e}", w.resolution);
    let ok = match &w.certificate {
        None => {
            let _ = writeln!(text, "degenerate: the body has empty interior");
            true
        }
        Some(c) => {
            let _ = writeln!(text, "touch on line: ({:.12}, {:.12})", c.touch_line.x(), c.touch_line.y());
            let _ = writeln!(text, "touch on hypercycle: ({:.12}, {:.12})", c.touch_hyper.x(), c.touch_hyper.y());
            let _ = writeln!(text, "orthogonality residue: {:.3e}", c.orthogonality_residue);
            let _ = writeln!(text, "tied strips: {}", w.ties.len());
            c.orthogonality_residue <= tol
        }
    };
    Ok(WidthOutput { text, width: w.width, ok })
}

pub fn cmd_hull(spec: &BodySpec) -> CliResult<(String, Scene)> {
    let body = spec.build()?;
    let mut text = String::new();
    let mut scene = Scene::new();
    let b = body.as_body();
    let _ = writeln!(text, "kind: {:?}", spec.kind);
    let _ = writeln!(text, "boundary arcs: {}", b.region().arcs().len());
    for a in b.region().arcs() {
        let s = a.start();
        let _ = writeln!(text, "  {} from ({:.12}, {:.12})", a.curve().kind().name(), s.x(), s.y());
    }
    let _ = writeln!(text, "area: {:.12}", body.area());
    scene.region(b.region(), "steelblue");
    for p in b.points() {
        scene.point(*p, "black");
    }
    if let SpecBody::H(h) = &body {
        if let Ok(inc) = h.incircle() {
            let c = inc.ball.center;
            let _ = writeln!(text, "incircle: center ({:.12}, {:.12}), radius {:.12}", c.x(), c.y(), inc.ball.radius);
            scene.region(&inc.ball.region(), "darkorange");
        }
        if let Ok(cc) = h.circumcircle() {
            let c = cc.center;
            let _ = writeln!(text, "circumcircle: center ({:.12}, {:.12}), radius {:.12}", c.x(), c.y(), cc.radius);
        }
    }
    Ok((text, scene))
}

pub fn cmd_triangle(w: f64) -> CliResult<(String, Scene)> {
    if !(w > 0.0) {
        return Err(CliError::Arg(format!("w = {w} must be positive")));
    }
    let t = t_w(w)?;
    let mut text = String::new();
    let _ = writeln!(text, "width: {:.12}", t.width);
    let _ = writeln!(text, "inradius: {:.12}", t.inradius);
    let _ = writeln!(text, "circumradius: {:.12}", t.circumradius);
    let _ = writeln!(text, "area: {:.12}", t.area());
    let _ = writeln!(text, "half vertex angle: {:.12}", t.aleph);
    for v in t.vertices {
        let _ = writeln!(text, "vertex: ({:.12}, {:.12})", v.x(), v.y());
    }
    let mut scene = Scene::new();
    for s in &t.sides {
        scene.arc(s, "steelblue");
    }
    scene.region(&horopal::hull::Ball::new(t.center, t.inradius)?.region(), "darkorange");
    Ok((text, scene))
}

/// The body of a spec, or by default `K_{0.1}`: its ball, tips and boundary.
pub fn cmd_render(spec: Option<&BodySpec>) -> CliResult<Scene> {
    match spec {
        Some(s) => Ok(cmd_hull(s)?.1),
        None => {
            let k = k_r(0.1f64)?;
            let mut scene = Scene::new();
            let ball = HConvexBody::ball(horopal::hull::Ball::new(horopal::model::HPoint::origin(), 0.1)?);
            scene.region(ball.region(), "darkorange");
            scene.region(k.body.region(), "steelblue");
            for p in k.tips {
                scene.point(p, "black");
            }
            Ok(scene)
        }
    }
}

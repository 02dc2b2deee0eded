//! Lassak width: the width of a body with respect to a supporting geodesic,
//! minimal strips, and the minimal width over all supporting geodesics.
//!
//! Supporting geodesics are parametrized by the direction `θ` of their
//! perpendicular from a frame center inside the body. In that frame the
//! supporting line for `θ` is orthogonal to the diameter `n = e^{iθ}` at the
//! largest Fermi coordinate `D` of the body along it, and the distance of a
//! point with Fermi coordinates `(s, t)` satisfies `sinh d = cosh t · sinh(D - s)`.
//! This covers lines touching smooth boundary points and lines pivoting
//! about vertices alike.

use num_complex::Complex;
use rayon::prelude::*;

use crate::curves::{hypercycle, Arc, Curve, CurveKind, Geodesic, Side};
use crate::error::{GeomError, Result};
use crate::hull::Body;
use crate::model::{dist, HPoint, IdealPoint, Isometry};
use crate::optim::{golden_min, sampled_max};
use crate::scalar::Real;

/// A strip bounded by a geodesic and the hypercycle at distance `width` on `side`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Strip<T> {
    pub line: Curve<T>,
    pub side: Side,
    pub width: T,
    pub hypercycle: Curve<T>,
}

impl<T: Real> Strip<T> {
    pub fn new(line: Geodesic<T>, side: Side, width: T) -> Result<Self> {
        let line = Curve::Geodesic(line);
        Ok(Strip { line, side, width, hypercycle: hypercycle(&line, width, side)? })
    }

    /// Signed distance from the line, positive on the strip side.
    pub fn offset(&self, x: HPoint<T>) -> T {
        let g = self.line.as_geodesic().expect("strip line is a geodesic");
        self.side.sign::<T>() * g.signed_distance(x)
    }

    pub fn contains(&self, x: HPoint<T>, tol: T) -> bool {
        let o = self.offset(x);
        o >= -tol && o <= self.width + tol
    }

    pub fn transform(&self, iso: &Isometry<T>) -> Self {
        let side = if iso.preserves_orientation() { self.side } else { self.side.flip() };
        Strip { line: self.line.transform(iso), side, width: self.width, hypercycle: self.hypercycle.transform(iso) }
    }
}

/// A minimal strip together with the points where the body touches it.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WidthCertificate<T> {
    pub strip: Strip<T>,
    pub touch_line: HPoint<T>,
    pub touch_hyper: HPoint<T>,
    /// Cosine of the angle between the line and the geodesic through the two
    /// touch points; zero when they lie on a common perpendicular.
    pub orthogonality_residue: T,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WidthMethod {
    /// Brute-force sweep over supporting lines.
    Oracle,
    /// Sweep followed by local minimization around the best sweep positions.
    Refine,
}

/// Outcome of a width computation.
#[derive(Clone, Debug, PartialEq)]
pub struct Width<T> {
    pub width: T,
    /// `None` for bodies with empty interior.
    pub certificate: Option<WidthCertificate<T>>,
    /// Largest change of the directional width between neighbouring sweep positions.
    pub resolution: T,
    /// All strips whose width is within tolerance of the minimum, in tie-break order.
    pub ties: Vec<WidthCertificate<T>>,
}

/// Default number of sweep positions.
pub const SWEEP: usize = 720;

fn arc_extreme<T: Real, F: Fn(HPoint<T>) -> T>(arc: &Arc<T>, f: F) -> (HPoint<T>, T) {
    if arc.curve().kind() == CurveKind::Geodesic {
        let (a, b) = (arc.start(), arc.end());
        let (fa, fb) = (f(a), f(b));
        return if fa >= fb { (a, fa) } else { (b, fb) };
    }
    let (t, v) = sampled_max(|t| f(arc.point_at(t)), T::zero(), T::one(), 16, T::lit(1e-13));
    (arc.point_at(t), v)
}

fn body_extreme<T: Real, B: Body<T> + ?Sized, F: Fn(HPoint<T>) -> T>(k: &B, f: F) -> (HPoint<T>, T) {
    let mut best = (HPoint::origin(), T::neg_infinity());
    if k.region().is_empty() {
        for p in k.points() {
            let v = f(*p);
            if v > best.1 {
                best = (*p, v);
            }
        }
        return best;
    }
    for arc in k.region().arcs() {
        let r = arc_extreme(arc, &f);
        if r.1 > best.1 {
            best = r;
        }
    }
    best
}

/// The largest distance of `k` from the geodesic `h`, which must support `k`.
pub fn width_wrt_line<T: Real, B: Body<T> + ?Sized>(k: &B, h: &Curve<T>) -> Result<T> {
    let g = *h.as_geodesic()?;
    let tol = T::lit(1e-8).max(T::default_tol());
    let (_, hi) = body_extreme(k, |x| g.signed_distance(x));
    let (_, lo) = body_extreme(k, |x| -g.signed_distance(x));
    let lo = -lo;
    if lo >= -tol && lo <= tol {
        Ok(hi.max(T::zero()))
    } else if hi <= tol && hi >= -tol {
        Ok((-lo).max(T::zero()))
    } else {
        Err(GeomError::NotSupporting(lo.abs().min(hi.abs()).f64()))
    }
}

/// Quantities of the supporting line in direction `θ`, in the frame where the
/// frame center is the origin.
#[derive(Clone, Copy)]
struct Directional<T> {
    theta: T,
    depth: T,
    width: T,
    touch_line: HPoint<T>,
    touch_hyper: HPoint<T>,
}

fn fermi_st<T: Real>(n: Complex<T>, x: HPoint<T>) -> (T, T) {
    let z = x.c();
    let s = ((z + n).norm() / (z - n).norm()).ln();
    let cross = n.re * z.im - n.im * z.re;
    let sinh_t = T::lit(2.0) * cross / x.defect();
    (s, sinh_t)
}

fn directional<T: Real, B: Body<T> + ?Sized>(k: &B, theta: T) -> Directional<T> {
    let n = Complex::new(theta.cos(), theta.sin());
    let (touch_line, depth) = body_extreme(k, |x| fermi_st(n, x).0);
    let (touch_hyper, v) = body_extreme(k, |x| {
        let (s, sh) = fermi_st(n, x);
        (T::one() + sh * sh).sqrt() * (depth - s).sinh()
    });
    Directional { theta, depth, width: v.asinh(), touch_line, touch_hyper }
}

/// The geodesic orthogonal to the diameter in direction `θ` at signed distance `depth`
/// from the origin, oriented with the origin on its left.
fn support_line<T: Real>(theta: T, depth: T) -> Result<Geodesic<T>> {
    let gd = T::lit(2.0) * (depth / T::lit(2.0)).tanh().atan();
    let h = T::FRAC_PI_2() - gd;
    Geodesic::new(IdealPoint::new(theta - h), IdealPoint::new(theta + h))
}

fn certificate<T: Real>(d: &Directional<T>, back: &Isometry<T>) -> Result<WidthCertificate<T>> {
    let line = support_line(d.theta, d.depth)?;
    let strip = Strip::new(line, Side::Left, d.width.max(T::min_positive_value()))?;
    let t = dist(d.touch_line, d.touch_hyper);
    let a = dist(line.foot(d.touch_hyper), d.touch_line);
    let residue = if t > T::zero() { a.tanh() / t.tanh() } else { T::zero() };
    Ok(WidthCertificate {
        strip: strip.transform(back),
        touch_line: back.apply(d.touch_line),
        touch_hyper: back.apply(d.touch_hyper),
        orthogonality_residue: residue,
    })
}

fn frame<T: Real, B: Body<T> + ?Sized>(k: &B) -> Isometry<T> {
    let verts = k.region().vertices();
    let pts = if verts.is_empty() { k.points().to_vec() } else { verts };
    let (mut sx, mut sy) = (T::zero(), T::zero());
    for p in &pts {
        let (x, y) = p.to_klein();
        sx += x;
        sy += y;
    }
    let m = T::lit(pts.len() as f64);
    let (cx, cy) = (sx / m, sy / m);
    if cx.abs() + cy.abs() <= T::epsilon() {
        return Isometry::identity();
    }
    match HPoint::from_klein(cx, cy) {
        Ok(c) => Isometry::to_origin(c),
        Err(_) => Isometry::identity(),
    }
}

/// Body in a moved frame, borrowing nothing from the original.
struct Moved<T> {
    region: crate::measure::Region<T>,
    points: Vec<HPoint<T>>,
    degenerate: bool,
}

impl<T: Real> Body<T> for Moved<T> {
    fn region(&self) -> &crate::measure::Region<T> {
        &self.region
    }
    fn points(&self) -> &[HPoint<T>] {
        &self.points
    }
    fn is_degenerate(&self) -> bool {
        self.degenerate
    }
}

/// Minimal Lassak width with `SWEEP` sweep positions.
pub fn lassak_width<T: Real, B: Body<T> + ?Sized>(k: &B, method: WidthMethod) -> Result<Width<T>> {
    lassak_width_with(k, method, SWEEP)
}

/// Minimal Lassak width with `m` sweep positions.
pub fn lassak_width_with<T: Real, B: Body<T> + ?Sized>(k: &B, method: WidthMethod, m: usize) -> Result<Width<T>> {
    if k.is_degenerate() {
        return Ok(Width { width: T::zero(), certificate: None, resolution: T::zero(), ties: Vec::new() });
    }
    let m = m.max(8);
    let to = frame(k);
    let back = to.inverse();
    let moved = Moved {
        region: k.region().transform(&to),
        points: k.points().iter().map(|p| to.apply(*p)).collect(),
        degenerate: false,
    };
    let step = T::TAU() / T::lit(m as f64);
    let sweep: Vec<Directional<T>> =
        (0..m).into_par_iter().map(|i| directional(&moved, step * T::lit(i as f64))).collect();
    let resolution = (0..m)
        .map(|i| (sweep[(i + 1) % m].width - sweep[i].width).abs())
        .fold(T::zero(), T::max);
    let grid_min = sweep.iter().map(|d| d.width).fold(T::infinity(), T::min);
    let mut candidates: Vec<Directional<T>> = Vec::new();
    match method {
        WidthMethod::Oracle => {
            candidates.extend(sweep.iter().copied());
        }
        WidthMethod::Refine => {
            let window = grid_min + T::lit(2.0) * resolution + T::default_tol();
            let seeds: Vec<usize> = (0..m)
                .filter(|&i| {
                    let w = sweep[i].width;
                    w <= window && w <= sweep[(i + m - 1) % m].width && w <= sweep[(i + 1) % m].width
                })
                .collect();
            let refined: Vec<Directional<T>> = seeds
                .par_iter()
                .map(|&i| {
                    let c = step * T::lit(i as f64);
                    let (th, _) = golden_min(|th| directional(&moved, th).width, c - step, c + step, T::lit(1e-13));
                    let d = directional(&moved, th);
                    if d.width <= sweep[i].width { d } else { sweep[i] }
                })
                .collect();
            candidates.extend(refined);
            candidates.extend(sweep.iter().copied());
        }
    }
    let best = candidates.iter().map(|d| d.width).fold(T::infinity(), T::min);
    let tie_tol = T::lit(1e-9).max(best * T::lit(1e-12)).max(T::default_tol() * T::lit(10.0));
    let mut near: Vec<&Directional<T>> = candidates.iter().filter(|d| d.width <= best + tie_tol).collect();
    near.sort_by(|a, b| a.width.partial_cmp(&b.width).unwrap());
    let mut distinct: Vec<&Directional<T>> = Vec::new();
    for d in near {
        let same = |e: &&Directional<T>| {
            dist(e.touch_line, d.touch_line) <= T::lit(1e-4) && dist(e.touch_hyper, d.touch_hyper) <= T::lit(1e-4)
        };
        if !distinct.iter().any(same) {
            distinct.push(d);
        }
    }
    let key = |d: &Directional<T>| {
        let p = back.apply(d.touch_line);
        let a = p.y().atan2(p.x());
        if a < T::zero() { a + T::TAU() } else { a }
    };
    distinct.sort_by(|a, b| key(a).partial_cmp(&key(b)).unwrap());
    let ties = distinct.into_iter().map(|d| certificate(d, &back)).collect::<Result<Vec<_>>>()?;
    let certificate = ties.first().copied();
    Ok(Width { width: best, certificate, resolution, ties })
}

/// The strip realizing the minimal width (refined).
pub fn minimal_strip<T: Real, B: Body<T> + ?Sized>(k: &B) -> Result<Strip<T>> {
    lassak_width(k, WidthMethod::Refine)?
        .certificate
        .map(|c| c.strip)
        .ok_or(GeomError::Degenerate("body has empty interior"))
}

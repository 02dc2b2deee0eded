//! Lengths and areas: closed forms, boundary decompositions and quadrature.

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::curves::{Arc, Curve, Geodesic, Horocycle, Horoball, Support};
use crate::error::{GeomError, Result};
use crate::model::{angle, dist, signed_angle, HPoint, Isometry};
use crate::scalar::Real;

/// A region bounded by a closed chain of arcs, counterclockwise.
#[derive(Clone, Debug, PartialEq)]
pub struct Region<T> {
    arcs: Vec<Arc<T>>,
}

impl<T: Real> Region<T> {
    /// Builds a region from a closed chain; consecutive endpoints must agree.
    /// A clockwise chain is reversed.
    pub fn new(arcs: Vec<Arc<T>>) -> Result<Self> {
        let lim = T::lit(1e-7).max(T::default_tol() * T::lit(1e3));
        for i in 0..arcs.len() {
            let j = (i + 1) % arcs.len();
            let gap = dist(arcs[i].end(), arcs[j].start());
            if !(gap <= lim) {
                return Err(GeomError::OpenChain(gap.f64()));
            }
        }
        let r = Region { arcs };
        Ok(if r.signed_area() < T::zero() { r.reversed() } else { r })
    }

    /// A geodesic polygon through the given vertices.
    pub fn polygon(vertices: &[HPoint<T>]) -> Result<Self> {
        let n = vertices.len();
        let arcs = (0..n)
            .map(|i| {
                let (a, b) = (vertices[i], vertices[(i + 1) % n]);
                Arc::new(Curve::Geodesic(Geodesic::through(a, b)?), a, b)
            })
            .collect::<Result<Vec<_>>>()?;
        Region::new(arcs)
    }

    pub fn empty() -> Self {
        Region { arcs: Vec::new() }
    }

    pub fn arcs(&self) -> &[Arc<T>] {
        &self.arcs
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn vertices(&self) -> Vec<HPoint<T>> {
        self.arcs.iter().map(|a| a.start()).collect()
    }

    pub fn reversed(&self) -> Self {
        Region { arcs: self.arcs.iter().rev().map(|a| a.reversed()).collect() }
    }

    pub fn transform(&self, iso: &Isometry<T>) -> Self {
        let r = Region { arcs: self.arcs.iter().map(|a| a.transform(iso)).collect() };
        if iso.preserves_orientation() { r } else { r.reversed() }
    }

    /// Winding number of the boundary around `x`.
    pub fn winding(&self, x: HPoint<T>) -> i32 {
        let total: T = self.arcs.iter().map(|a| arc_winding(a, x.c())).sum();
        (total / T::TAU()).round().to_i32().unwrap_or(0)
    }

    pub fn contains(&self, x: HPoint<T>) -> bool {
        !self.arcs.is_empty() && self.winding(x) != 0
    }

    /// Distance from `x` to the boundary.
    pub fn boundary_distance(&self, x: HPoint<T>) -> T {
        self.arcs.iter().map(|a| a.distance(x)).fold(T::infinity(), T::min)
    }

    /// Closest boundary point.
    pub fn closest_boundary_point(&self, x: HPoint<T>) -> Option<(HPoint<T>, T)> {
        self.arcs
            .iter()
            .map(|a| a.closest(x))
            .min_by(|a, b| a.1.partial_cmp(&b.1).unwrap_or(std::cmp::Ordering::Equal))
    }

    /// Membership with a boundary tolerance.
    pub fn contains_tol(&self, x: HPoint<T>, tol: T) -> bool {
        self.contains(x) || self.boundary_distance(x) <= tol
    }

    /// Signed area (positive for counterclockwise chains) by fan decomposition
    /// into geodesic triangles plus the cap between each arc and its chord.
    pub fn signed_area(&self) -> T {
        if self.arcs.is_empty() {
            return T::zero();
        }
        let o = self.arcs[0].start();
        self.arcs
            .iter()
            .map(|a| signed_triangle_area(o, a.start(), a.end()) + signed_cap_area(a))
            .sum()
    }

    pub fn area(&self) -> T {
        self.signed_area().abs()
    }

    pub fn perimeter(&self) -> T {
        self.arcs.iter().map(|a| a.length()).sum()
    }

    /// Euclidean bounding box `(min, max)` of the boundary in the model.
    pub fn euclid_bbox(&self) -> (Complex<T>, Complex<T>) {
        let mut lo = Complex::new(T::infinity(), T::infinity());
        let mut hi = Complex::new(T::neg_infinity(), T::neg_infinity());
        for a in &self.arcs {
            for p in a.samples(256) {
                lo.re = lo.re.min(p.x());
                lo.im = lo.im.min(p.y());
                hi.re = hi.re.max(p.x());
                hi.im = hi.im.max(p.y());
            }
        }
        (lo, hi)
    }
}

fn cross<T: Real>(a: Complex<T>, b: Complex<T>) -> T {
    a.re * b.im - a.im * b.re
}

/// Contribution of one arc to the winding angle around `x`: the angle
/// subtended by the chord plus a full turn when `x` lies between chord and arc.
fn arc_winding<T: Real>(arc: &Arc<T>, x: Complex<T>) -> T {
    let a = arc.start().c();
    let b = arc.end().c();
    let va = a - x;
    let vb = b - x;
    let mut theta = cross(va, vb).atan2(va.re * vb.re + va.im * vb.im);
    if let Curve::Geodesic(_) = arc.curve() {
        if arc.curve().cline().is_line() {
            return theta;
        }
    }
    let q = arc.curve().cline().normalized();
    if q.is_line() {
        return theta;
    }
    let m = arc.midpoint().c();
    let turn = cross(m - a, b - m);
    if turn == T::zero() {
        return theta;
    }
    let inside = q.a.signum() * q.eval(x) < T::zero();
    let side = cross(b - a, x - a);
    if inside {
        if turn > T::zero() && side < T::zero() {
            theta += T::TAU();
        } else if turn < T::zero() && side > T::zero() {
            theta -= T::TAU();
        }
    }
    theta
}

/// Area of the geodesic triangle `[a, b, c]` as its angle deficit.
pub fn triangle_area<T: Real>(a: HPoint<T>, b: HPoint<T>, c: HPoint<T>) -> Result<T> {
    let tiny = T::epsilon() * T::lit(64.0);
    if a.euclid_dist(b) <= tiny || b.euclid_dist(c) <= tiny || a.euclid_dist(c) <= tiny {
        return Err(GeomError::Coincident);
    }
    let s = angle(b, a, c)? + angle(a, b, c)? + angle(a, c, b)?;
    Ok((T::PI() - s).max(T::zero()))
}

/// Triangle area signed by orientation; zero when two vertices coincide.
pub fn signed_triangle_area<T: Real>(a: HPoint<T>, b: HPoint<T>, c: HPoint<T>) -> T {
    match triangle_area(a, b, c) {
        Ok(v) => {
            let o = signed_angle(b, a, c);
            if o >= T::zero() { v } else { -v }
        }
        Err(_) => T::zero(),
    }
}

/// `V(B(p, r)) = 2π (cosh r - 1)`.
pub fn disk_area<T: Real>(r: T) -> T {
    let h = (r / T::lit(2.0)).sinh();
    T::lit(4.0) * T::PI() * h * h
}

/// Area of the region between a horocyclic arc and its chord of length `d`.
pub fn horocyclic_cap_area<T: Real>(d: T) -> T {
    let a = (d / T::lit(2.0)).sinh();
    T::lit(2.0) * (a - a.atan())
}

/// Unsigned area between an arc and the geodesic chord joining its endpoints.
pub fn cap_area<T: Real>(arc: &Arc<T>) -> T {
    let (a, b) = (arc.start(), arc.end());
    match arc.curve() {
        Curve::Geodesic(_) => T::zero(),
        Curve::Horocycle(_) => horocyclic_cap_area(dist(a, b)),
        Curve::Circle(c) => {
            let (u0, u1) = arc.coords();
            let phi = (u1 - u0).abs();
            let sector = phi * (c.radius().cosh() - T::one());
            let tri = triangle_area(c.center(), a, b).unwrap_or(T::zero());
            if phi <= T::PI() { sector - tri } else { sector + tri }
        }
        Curve::Hypercycle(h) => {
            let (u0, u1) = arc.coords();
            let base = h.base();
            let (fa, fb) = (base.foot(a), base.foot(b));
            let quad = triangle_area(fa, fb, b).unwrap_or(T::zero()) + triangle_area(fa, b, a).unwrap_or(T::zero());
            (u1 - u0).abs() * h.dist().sinh() - quad
        }
    }
}

/// Cap area signed positive when the arc bulges to the right of its chord
/// (outward for a counterclockwise boundary).
pub fn signed_cap_area<T: Real>(arc: &Arc<T>) -> T {
    let c = cap_area(arc);
    if c == T::zero() {
        return c;
    }
    let (a, b) = (arc.start(), arc.end());
    let side = match Geodesic::through(a, b) {
        Ok(g) => g.signed_distance(arc.midpoint()),
        Err(_) => {
            let (u0, u1) = arc.coords();
            u0 - u1
        }
    };
    if side <= T::zero() { c } else { -c }
}

/// Monte-Carlo area estimate with its three-sigma error.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Estimate<T> {
    pub value: T,
    pub error: T,
}

/// Stratified Monte-Carlo integral of the hyperbolic density
/// `(2 / (1 - |x|²))²` over a region, using about `samples` evaluations on a
/// grid over its Euclidean bounding box. Deterministic for a fixed seed.
///
/// Cells that no boundary curve (nor the unit circle) passes through are
/// entirely in or out; their density integral uses a 2×2 Gauss rule. The
/// Monte-Carlo budget goes to the cells the boundary crosses, which carry all
/// of the reported variance.
pub fn area_quadrature<T: Real>(region: &Region<T>, samples: usize, seed: u64) -> Estimate<T> {
    if region.is_empty() {
        return Estimate { value: T::zero(), error: T::zero() };
    }
    let (lo, hi) = region.euclid_bbox();
    let pad = (hi.re - lo.re).max(hi.im - lo.im) * T::lit(1e-3);
    let x0 = (lo.re - pad).max(-T::one());
    let y0 = (lo.im - pad).max(-T::one());
    let x1 = (hi.re + pad).min(T::one());
    let y1 = (hi.im + pad).min(T::one());
    let g = ((samples as f64 / 4.0).sqrt().floor() as usize).max(1);
    let dx = (x1 - x0) / T::lit(g as f64);
    let dy = (y1 - y0) / T::lit(g as f64);
    let cell = dx * dy;
    let reach = (dx * dx + dy * dy).sqrt() * T::lit(0.51);
    let supports: Vec<Support<T>> = region
        .arcs()
        .iter()
        .map(|a| a.curve().support())
        .chain(std::iter::once(Support::Circle { center: Complex::new(T::zero(), T::zero()), radius: T::one() }))
        .collect();
    let density = |px: T, py: T| {
        let d = T::lit(2.0) / (T::one() - px * px - py * py);
        d * d
    };
    let corner = |i: usize, j: usize| (x0 + dx * T::lit(i as f64), y0 + dy * T::lit(j as f64));
    let gauss = T::lit(0.5 - 0.5 / 3f64.sqrt());

    // Clean cells are integrated outright; crossed cells are listed for sampling.
    let rows: Vec<(T, Vec<usize>)> = (0..g)
        .into_par_iter()
        .map(|i| {
            let mut sum = T::zero();
            let mut crossed = Vec::new();
            for j in 0..g {
                let (cx, cy) = corner(i, j);
                let mid = Complex::new(cx + dx / T::lit(2.0), cy + dy / T::lit(2.0));
                if supports.iter().any(|s| support_gap(s, mid) <= reach) {
                    crossed.push(j);
                    continue;
                }
                if mid.norm_sqr() >= T::one() || !region.contains(HPoint::raw(mid.re, mid.im)) {
                    continue;
                }
                let mut f = T::zero();
                for (u, v) in [(gauss, gauss), (gauss, T::one() - gauss), (T::one() - gauss, gauss), (T::one() - gauss, T::one() - gauss)] {
                    f += density(cx + dx * u, cy + dy * v);
                }
                sum += cell * f / T::lit(4.0);
            }
            (sum, crossed)
        })
        .collect();
    let clean: T = rows.iter().map(|r| r.0).sum();
    let crossed: Vec<(usize, usize)> = rows.iter().enumerate().flat_map(|(i, r)| r.1.iter().map(move |j| (i, *j))).collect();
    if crossed.is_empty() {
        return Estimate { value: clean, error: T::zero() };
    }
    let k = (samples.saturating_sub(g * g) / crossed.len()).max(8);
    let kk = T::lit(k as f64);
    let parts: Vec<(T, T)> = crossed
        .par_iter()
        .map(|&(i, j)| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream((i * g + j) as u64);
            let (cx, cy) = corner(i, j);
            let mut s1 = T::zero();
            let mut s2 = T::zero();
            for _ in 0..k {
                let px = cx + dx * T::lit(rng.gen::<f64>());
                let py = cy + dy * T::lit(rng.gen::<f64>());
                if px * px + py * py >= T::one() {
                    continue;
                }
                if region.contains(HPoint::raw(px, py)) {
                    let f = density(px, py);
                    s1 += f;
                    s2 += f * f;
                }
            }
            let mean = s1 / kk;
            let sv = ((s2 - kk * mean * mean) / (kk - T::one())).max(T::zero());
            (cell * mean, cell * cell * sv / kk)
        })
        .collect();
    let value = clean + parts.iter().map(|r| r.0).sum::<T>();
    let var: T = parts.iter().map(|r| r.1).sum();
    Estimate { value, error: T::lit(3.0) * var.sqrt() }
}

/// Euclidean distance from `z` to a support circle or line.
fn support_gap<T: Real>(s: &Support<T>, z: Complex<T>) -> T {
    match *s {
        Support::Circle { center, radius } => ((z - center).norm() - radius).abs(),
        Support::Line { normal, offset } => (z.re * normal.re + z.im * normal.im - offset).abs(),
    }
}

/// Hyperbolic length of the horocyclic arc between `a` and `b`: `2 sinh(d(a,b)/2)`.
pub fn horocyclic_arc_length<T: Real>(a: HPoint<T>, b: HPoint<T>, arc: &Arc<T>) -> Result<T> {
    let h = arc.curve().as_horocycle()?;
    let lim = T::lit(1e-8).max(T::default_tol() * T::lit(100.0));
    for p in [a, b] {
        let off = h.distance(p);
        if off > lim {
            return Err(GeomError::OffCurve(off.f64()));
        }
    }
    Ok(T::lit(2.0) * (dist(a, b) / T::lit(2.0)).sinh())
}

/// Base angle `μ(φ, ℓ)` of the isosceles triangle with apex angle `φ` and legs `ℓ`:
/// `1 = tan μ · tan(φ/2) · cosh ℓ`.
pub fn mu<T: Real>(phi: T, ell: T) -> Result<T> {
    if !(phi > T::zero() && phi < T::PI()) {
        return Err(GeomError::Range { what: "phi", value: phi.f64(), range: "(0, pi)" });
    }
    if !(ell >= T::zero()) {
        return Err(GeomError::Range { what: "ell", value: ell.f64(), range: "[0, inf)" });
    }
    Ok(T::one().atan2((phi / T::lit(2.0)).tan() * ell.cosh()))
}

/// Angle between a horocyclic arc and its chord of length `ℓ`: `arccos(1 / cosh(ℓ/2))`.
pub fn xi<T: Real>(ell: T) -> Result<T> {
    if !(ell >= T::zero()) {
        return Err(GeomError::Range { what: "ell", value: ell.f64(), range: "[0, inf)" });
    }
    Ok((ell / T::lit(2.0)).sinh().atan())
}

/// The threshold `ℓ₀(φ)`: `ξ(ℓ) < μ(φ, ℓ)` exactly for `ℓ < ℓ₀(φ)`.
pub fn ell0<T: Real>(phi: T) -> Result<T> {
    let f = |l: T| -> Result<T> { Ok(xi(l)? - mu(phi, l)?) };
    f(T::one())?;
    let mut hi = T::one();
    while f(hi)? < T::zero() {
        hi *= T::lit(2.0);
        if hi > T::lit(1e4) {
            return Err(GeomError::Domain(phi.f64()));
        }
    }
    let mut lo = T::zero();
    for _ in 0..200 {
        let mid = (lo + hi) / T::lit(2.0);
        if f(mid)? < T::zero() {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= T::epsilon() * hi {
            break;
        }
    }
    Ok((lo + hi) / T::lit(2.0))
}

/// Tangent directions at `x` of a horocycle through `x` (the two opposite unit directions).
fn horocycle_tangents<T: Real>(h: &Horocycle<T>, x: HPoint<T>) -> (T, T) {
    let xi = Isometry::to_origin(x).apply_c(h.ideal().c());
    let n = xi.im.atan2(xi.re);
    (n + T::FRAC_PI_2(), n - T::FRAC_PI_2())
}

/// Direction toward the ideal point of `h`, seen from `x`.
fn ideal_direction<T: Real>(h: &Horocycle<T>, x: HPoint<T>) -> T {
    let xi = Isometry::to_origin(x).apply_c(h.ideal().c());
    xi.im.atan2(xi.re)
}

/// The crossing angle `φ(h, h̃)` at `x`: the angle between the arc of `h̃`
/// leaving the horoball of `h` and the arc of `h` entering the horoball of `h̃`.
pub fn crossing_angle<T: Real>(h: &Horocycle<T>, h2: &Horocycle<T>, x: HPoint<T>) -> T {
    let (dh_in, dh2_out) = crossing_directions(h, h2, x);
    let d = (dh_in - dh2_out).abs() % T::TAU();
    if d > T::PI() { T::TAU() - d } else { d }
}

fn crossing_directions<T: Real>(h: &Horocycle<T>, h2: &Horocycle<T>, x: HPoint<T>) -> (T, T) {
    let n1 = ideal_direction(h, x);
    let n2 = ideal_direction(h2, x);
    let (a, b) = horocycle_tangents(h, x);
    // Entering the horoball of h2: the Busemann function of h2 decreases.
    let h_in = if (a - n2).cos() >= (b - n2).cos() { a } else { b };
    let (c, d) = horocycle_tangents(h2, x);
    let h2_out = if (c - n1).cos() <= (d - n1).cos() { c } else { d };
    (h_in, h2_out)
}

/// Point at chord distance `ell` from `x` along horocycle `h`, leaving `x` in direction `dir`.
fn walk_horocycle<T: Real>(h: &Horocycle<T>, x: HPoint<T>, dir: T, ell: T) -> HPoint<T> {
    let u = h.coord(x);
    let du = T::lit(2.0) * (ell / T::lit(2.0)).sinh() / h.speed();
    let probe = h.point_at(u + du * T::lit(1e-6));
    let d0 = crate::model::direction(x, probe);
    let sign = if (d0 - dir).cos() >= T::zero() { T::one() } else { -T::one() };
    h.point_at(u + sign * du)
}

/// The region `Ω(h, h̃, x, ℓ)` with vertices `x, y, ỹ`, bounded by `[y, ỹ]`
/// and the horocyclic arcs from `x` to `y` on `h` and from `x` to `ỹ` on `h̃`.
pub fn omega_region<T: Real>(h: &Curve<T>, h2: &Curve<T>, x: HPoint<T>, ell: T) -> Result<Region<T>> {
    let (h, h2) = (h.as_horocycle()?, h2.as_horocycle()?);
    let lim = T::lit(1e-8).max(T::default_tol() * T::lit(100.0));
    for c in [h, h2] {
        let off = c.distance(x);
        if off > lim {
            return Err(GeomError::OffCurve(off.f64()));
        }
    }
    let phi = crossing_angle(h, h2, x);
    if phi <= T::lit(1e-9) || phi >= T::PI() - T::lit(1e-9) {
        return Err(GeomError::Degenerate("horocycles are tangent"));
    }
    let l0 = ell0(phi)?;
    if !(ell > T::zero() && ell < l0) {
        return Err(GeomError::Range { what: "ell", value: ell.f64(), range: "(0, ell0(phi))" });
    }
    let (h_in, h2_out) = crossing_directions(h, h2, x);
    let y = walk_horocycle(h, x, h_in + T::PI(), ell);
    let yt = walk_horocycle(h2, x, h2_out + T::PI(), ell);
    let arcs = vec![
        Arc::new(Curve::Horocycle(*h), x, y)?,
        Arc::new(Curve::Geodesic(Geodesic::through(y, yt)?), y, yt)?,
        Arc::new(Curve::Horocycle(*h2), yt, x)?,
    ];
    Region::new(arcs)
}

/// Whether every boundary point of `region` lies in the horoball (checked at arc samples).
pub fn region_in_horoball<T: Real>(region: &Region<T>, ball: &Horoball<T>, tol: T) -> bool {
    region.arcs().iter().all(|a| a.samples(64).into_iter().all(|p| ball.contains(p, tol)))
}

//! Convex and horocyclically convex hulls, inscribed and circumscribed balls,
//! closest points and Hausdorff distance.

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::curves::{horocycles_through, ray_end, Arc, Curve, Geodesic, HCircle, Horoball, Horocycle};
use crate::error::{GeomError, Result};
use crate::measure::Region;
use crate::model::{dist, HPoint, IdealPoint, Isometry};
use crate::optim::{golden_max, nested_golden_max};
use crate::scalar::Real;

/// A closed hyperbolic ball.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Ball<T> {
    pub center: HPoint<T>,
    pub radius: T,
}

impl<T: Real> Ball<T> {
    pub fn new(center: HPoint<T>, radius: T) -> Result<Self> {
        if !(radius > T::zero()) {
            return Err(GeomError::Range { what: "radius", value: radius.f64(), range: "(0, inf)" });
        }
        Ok(Ball { center, radius })
    }

    pub fn contains(&self, x: HPoint<T>, tol: T) -> bool {
        dist(self.center, x) <= self.radius + tol
    }

    pub fn circle(&self) -> HCircle<T> {
        HCircle::new(self.center, self.radius).expect("positive radius")
    }

    /// The boundary as two half circles, counterclockwise.
    pub fn region(&self) -> Region<T> {
        let c = self.circle();
        let a = c.point_at(T::zero());
        let b = c.point_at(T::PI());
        Region::new(vec![
            Arc::circular(c, a, b, true).expect("on circle"),
            Arc::circular(c, b, a, true).expect("on circle"),
        ])
        .expect("closed chain")
    }
}

/// Anything with a boundary chain that the width, area and distance routines can consume.
pub trait Body<T: Real>: Sync {
    fn region(&self) -> &Region<T>;
    /// Generating points (vertices for polygons, apexes for spiked balls).
    fn points(&self) -> &[HPoint<T>];
    /// Empty interior: a point, or a segment.
    fn is_degenerate(&self) -> bool;

    /// Points of the boundary spaced at most `res` apart; the generators for degenerate bodies.
    fn boundary_samples(&self, res: T) -> Vec<HPoint<T>> {
        if self.region().is_empty() {
            return self.points().to_vec();
        }
        self.region().arcs().iter().flat_map(|a| a.samples_res(res)).collect()
    }
}

/// A convex body: the convex hull of finitely many points, or a region with
/// geodesic and circular boundary arcs.
#[derive(Clone, Debug, PartialEq)]
pub struct ConvexBody<T> {
    generators: Vec<HPoint<T>>,
    region: Region<T>,
    degenerate: bool,
}

impl<T: Real> ConvexBody<T> {
    /// Wraps a convex region (the caller guarantees convexity).
    pub fn from_region(generators: Vec<HPoint<T>>, region: Region<T>) -> Self {
        ConvexBody { generators, region, degenerate: false }
    }

    /// The geodesic segment `[p, q]` as a degenerate body.
    pub fn segment(p: HPoint<T>, q: HPoint<T>) -> Result<Self> {
        let g = Curve::Geodesic(Geodesic::through(p, q)?);
        let region = Region::new(vec![Arc::new(g, p, q)?, Arc::new(g, q, p)?])?;
        Ok(ConvexBody { generators: vec![p, q], region, degenerate: true })
    }

    pub fn generators(&self) -> &[HPoint<T>] {
        &self.generators
    }

    pub fn vertices(&self) -> Vec<HPoint<T>> {
        self.region.vertices()
    }

    pub fn contains(&self, x: HPoint<T>) -> bool {
        self.region.contains_tol(x, T::default_tol())
    }

    pub fn area(&self) -> T {
        if self.degenerate { T::zero() } else { self.region.area() }
    }

    pub fn transform(&self, iso: &Isometry<T>) -> Self {
        ConvexBody {
            generators: self.generators.iter().map(|p| iso.apply(*p)).collect(),
            region: self.region.transform(iso),
            degenerate: self.degenerate,
        }
    }
}

impl<T: Real> Body<T> for ConvexBody<T> {
    fn region(&self) -> &Region<T> {
        &self.region
    }
    fn points(&self) -> &[HPoint<T>] {
        &self.generators
    }
    fn is_degenerate(&self) -> bool {
        self.degenerate
    }
}

fn cross<T: Real>(o: (T, T), a: (T, T), b: (T, T)) -> T {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Convex hull via the Klein model, where hyperbolic and Euclidean convexity agree.
pub fn convex_hull<T: Real>(points: &[HPoint<T>]) -> Result<ConvexBody<T>> {
    let mut k: Vec<(T, T, usize)> = points.iter().enumerate().map(|(i, p)| {
        let (x, y) = p.to_klein();
        (x, y, i)
    }).collect();
    k.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap().then(a.1.partial_cmp(&b.1).unwrap()));
    k.dedup_by(|a, b| (a.0 - b.0).abs() <= T::epsilon() && (a.1 - b.1).abs() <= T::epsilon());
    if k.len() < 3 {
        return Err(GeomError::Degenerate("convex hull needs three non-collinear points"));
    }
    let scale = T::lit(1e-14).max(T::epsilon() * T::lit(8.0));
    let mut lower: Vec<(T, T, usize)> = Vec::new();
    for &p in &k {
        while lower.len() >= 2 && cross((lower[lower.len() - 2].0, lower[lower.len() - 2].1), (lower[lower.len() - 1].0, lower[lower.len() - 1].1), (p.0, p.1)) <= scale {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<(T, T, usize)> = Vec::new();
    for &p in k.iter().rev() {
        while upper.len() >= 2 && cross((upper[upper.len() - 2].0, upper[upper.len() - 2].1), (upper[upper.len() - 1].0, upper[upper.len() - 1].1), (p.0, p.1)) <= scale {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() < 3 {
        return Err(GeomError::Degenerate("points are collinear"));
    }
    let verts: Vec<HPoint<T>> = lower.iter().map(|v| points[v.2]).collect();
    Ok(ConvexBody { generators: points.to_vec(), region: Region::polygon(&verts)?, degenerate: false })
}

/// The largest inscribed ball, with the touching points certifying optimality.
#[derive(Clone, Debug, PartialEq)]
pub struct Incircle<T> {
    pub ball: Ball<T>,
    /// Boundary points at distance `radius` from the center (within tolerance).
    pub touch: Vec<HPoint<T>>,
    /// How far the center is from the convex hull of the touch points, measured as
    /// the excess over `π` of the largest angular gap between touch directions.
    pub residue: T,
}

#[derive(Clone, Debug, PartialEq)]
enum Shape<T> {
    Points,
    Ball(Ball<T>),
    Spiked(Ball<T>),
}

/// A horocyclically convex body: an intersection of horoballs (or a ball,
/// or a ball with spikes), with its inscribed and circumscribed balls.
#[derive(Clone, Debug, PartialEq)]
pub struct HConvexBody<T> {
    generators: Vec<HPoint<T>>,
    region: Region<T>,
    shape: Shape<T>,
    degenerate: bool,
    horoballs: Vec<Horoball<T>>,
    incircle: Option<Incircle<T>>,
    circumcircle: Option<Ball<T>>,
}

/// Supporting data of the spike with apex `u` over `ball`: tangency points
/// `x1` (counterclockwise side) and `x2`, and the two horocycles through `u`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpikeFrame<T> {
    pub apex: HPoint<T>,
    pub x1: HPoint<T>,
    pub x2: HPoint<T>,
    pub h1: Horocycle<T>,
    pub h2: Horocycle<T>,
    /// Direction of the apex seen from the ball center.
    pub theta: T,
    /// Half of the angle at the center spanned by the tangency points.
    pub psi: T,
}

/// The two horocycles through `u` supporting `ball`.
pub fn spike_frame<T: Real>(ball: &Ball<T>, u: HPoint<T>) -> Result<SpikeFrame<T>> {
    let d = dist(ball.center, u);
    if d <= ball.radius {
        return Err(GeomError::Inside);
    }
    let theta = crate::model::direction(ball.center, u);
    let back = Isometry::from_origin(ball.center).compose(&Isometry::rotation(theta));
    let a = (d / T::lit(2.0)).tanh();
    let s = (ball.radius / T::lit(2.0)).tanh();
    let cpsi = ((s - a * a) / (a * (T::one() - s))).max(-T::one()).min(T::one());
    let psi = cpsi.acos();
    let tangent = |sign: T| {
        let e = Complex::new(psi.cos(), sign * psi.sin());
        let x = back.apply(HPoint::raw(s * e.re, s * e.im));
        let xi = IdealPoint::from_c(back.apply_c(-e));
        (x, Horocycle::at(x, xi))
    };
    let (x1, h1) = tangent(T::one());
    let (x2, h2) = tangent(-T::one());
    Ok(SpikeFrame { apex: u, x1, x2, h1, h2, theta, psi })
}

fn angle_mod<T: Real>(a: T) -> T {
    let t = T::TAU();
    let r = a % t;
    if r < T::zero() { r + t } else { r }
}

impl<T: Real> HConvexBody<T> {
    fn finish(mut self) -> Self {
        if !self.degenerate {
            self.incircle = Some(self.solve_incircle(None));
            self.circumcircle = Some(self.solve_circumcircle());
        }
        self
    }

    /// The ball `B(center, radius)` as an h-convex body.
    pub fn ball(ball: Ball<T>) -> Self {
        HConvexBody {
            generators: vec![ball.center],
            region: ball.region(),
            shape: Shape::Ball(ball),
            degenerate: false,
            horoballs: Vec::new(),
            incircle: None,
            circumcircle: None,
        }
        .finish()
    }

    /// The h-convex hull of a ball and points. Apexes inside the ball are ignored;
    /// the spikes of the remaining apexes must not overlap.
    pub fn ball_with_apexes(ball: Ball<T>, apexes: &[HPoint<T>]) -> Result<Self> {
        let mut frames: Vec<SpikeFrame<T>> = apexes
            .iter()
            .filter(|u| dist(ball.center, **u) > ball.radius)
            .map(|u| spike_frame(&ball, *u))
            .collect::<Result<_>>()?;
        if frames.is_empty() {
            return Ok(HConvexBody::ball(ball));
        }
        frames.sort_by(|a, b| angle_mod(a.theta).partial_cmp(&angle_mod(b.theta)).unwrap());
        let circle = ball.circle();
        let n = frames.len();
        let mut arcs = Vec::new();
        for i in 0..n {
            let f = &frames[i];
            let next = &frames[(i + 1) % n];
            arcs.push(Arc::new(Curve::Horocycle(f.h2), f.x2, f.apex)?);
            arcs.push(Arc::new(Curve::Horocycle(f.h1), f.apex, f.x1)?);
            let start = f.theta + f.psi;
            let mut gap = angle_mod(next.theta - next.psi - start);
            if n == 1 {
                gap = T::TAU() - T::lit(2.0) * f.psi;
            } else if gap > T::TAU() - T::lit(1e-9) {
                gap = T::zero();
            }
            let limit = T::PI() * T::lit(2.0) - (f.psi + next.psi);
            if n > 1 && gap > limit {
                return Err(GeomError::Degenerate("spikes overlap"));
            }
            if gap > T::lit(1e-12) {
                arcs.push(Arc::circular(circle, f.x1, next.x2, true)?);
            }
        }
        let region = Region::new(arcs)?;
        Ok(HConvexBody {
            generators: frames.iter().map(|f| f.apex).collect(),
            region,
            shape: Shape::Spiked(ball),
            degenerate: false,
            horoballs: Vec::new(),
            incircle: None,
            circumcircle: None,
        }
        .finish())
    }

    pub fn generators(&self) -> &[HPoint<T>] {
        &self.generators
    }

    pub fn vertices(&self) -> Vec<HPoint<T>> {
        if self.region.is_empty() { self.generators.clone() } else { self.region.vertices() }
    }

    /// Supporting horoballs of the boundary arcs (empty unless every arc is horocyclic).
    pub fn horoballs(&self) -> &[Horoball<T>] {
        &self.horoballs
    }

    /// The spanning ball for ball-based bodies.
    pub fn base_ball(&self) -> Option<Ball<T>> {
        match &self.shape {
            Shape::Points => None,
            Shape::Ball(b) | Shape::Spiked(b) => Some(*b),
        }
    }

    pub fn contains(&self, x: HPoint<T>) -> bool {
        self.contains_tol(x, T::default_tol())
    }

    pub fn contains_tol(&self, x: HPoint<T>, tol: T) -> bool {
        match &self.shape {
            Shape::Ball(b) => b.contains(x, tol),
            Shape::Points if self.region.is_empty() => self.generators.iter().any(|g| dist(*g, x) <= tol),
            Shape::Points => self.horoballs.iter().all(|h| h.contains(x, tol)),
            Shape::Spiked(_) => self.region.contains_tol(x, tol),
        }
    }

    /// Signed distance to the boundary: positive inside, negative outside.
    pub fn depth(&self, x: HPoint<T>) -> T {
        match &self.shape {
            Shape::Ball(b) => b.radius - dist(b.center, x),
            Shape::Points if self.region.is_empty() => -self.generators.iter().map(|g| dist(*g, x)).fold(T::infinity(), T::min),
            Shape::Points => self.horoballs.iter().map(|h| h.depth(x)).fold(T::infinity(), T::min),
            Shape::Spiked(_) => {
                let d = self.region.boundary_distance(x);
                if self.region.contains(x) { d } else { -d }
            }
        }
    }

    pub fn area(&self) -> T {
        if self.degenerate { T::zero() } else { self.region.area() }
    }

    /// The closest point `z` of the body to an outside point `y`, and the
    /// horoball through `z` with ideal point beyond `z` on the ray from `y`.
    pub fn closest_point(&self, y: HPoint<T>) -> Result<(HPoint<T>, Horoball<T>)> {
        if self.contains_tol(y, T::zero()) {
            return Err(GeomError::Inside);
        }
        let z = match self.region.closest_boundary_point(y) {
            Some((z, _)) => z,
            None => self.generators[0],
        };
        let xi = ray_end(y, z);
        Ok((z, Horoball::new(Horocycle::at(z, xi))))
    }

    pub fn incircle(&self) -> Result<&Incircle<T>> {
        self.incircle.as_ref().ok_or(GeomError::Degenerate("body has empty interior"))
    }

    pub fn circumcircle(&self) -> Result<Ball<T>> {
        self.circumcircle.ok_or(GeomError::Degenerate("singleton has no circumscribed ball"))
    }

    /// Recomputes the incircle with the search frame centered at `seed`.
    pub fn incircle_from(&self, seed: HPoint<T>) -> Result<Incircle<T>> {
        if self.degenerate {
            return Err(GeomError::Degenerate("body has empty interior"));
        }
        Ok(self.solve_incircle(Some(seed)))
    }

    /// Incircles recomputed from `n` random interior seeds.
    pub fn incircle_restarts(&self, n: usize, seed: u64) -> Result<Vec<Incircle<T>>> {
        let inc = self.incircle()?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = Vec::with_capacity(n);
        while out.len() < n {
            let d = inc.ball.radius * T::lit(rng.gen::<f64>() * 0.9);
            let a = T::lit(rng.gen::<f64>() * std::f64::consts::TAU);
            let s = crate::model::offset(inc.ball.center, a, d);
            out.push(self.incircle_from(s)?);
        }
        Ok(out)
    }

    fn klein_box(&self, frame: &Isometry<T>) -> ((T, T), (T, T)) {
        let mut lo = (T::infinity(), T::infinity());
        let mut hi = (T::neg_infinity(), T::neg_infinity());
        for a in self.region.arcs() {
            for p in a.samples(64) {
                let (x, y) = frame.apply(p).to_klein();
                lo = (lo.0.min(x), lo.1.min(y));
                hi = (hi.0.max(x), hi.1.max(y));
            }
        }
        ((lo.0, hi.0), (lo.1, hi.1))
    }

    fn solve_incircle(&self, seed: Option<HPoint<T>>) -> Incircle<T> {
        if let Shape::Ball(b) = &self.shape {
            let touch = vec![b.circle().point_at(T::zero()), b.circle().point_at(T::PI())];
            return Incircle { ball: *b, touch, residue: T::zero() };
        }
        let frame = seed.map(Isometry::to_origin).unwrap_or_else(Isometry::identity);
        let back = frame.inverse();
        let (bx, by) = self.klein_box(&frame);
        let f = |x: T, y: T| {
            let n2 = x * x + y * y;
            if n2 >= T::one() {
                return T::neg_infinity();
            }
            let p = HPoint::raw(x, y);
            let k = HPoint::from_klein(p.x(), p.y()).unwrap_or(p);
            self.depth(back.apply(k))
        };
        let tol = T::lit(1e-13).max(T::epsilon() * T::lit(100.0));
        let ((x, y), _) = nested_golden_max(f, bx, by, tol);
        let c = back.apply(HPoint::from_klein(x, y).unwrap_or_else(|_| HPoint::origin()));
        let r = self.depth(c);
        let touch = self.touch_points(c, r);
        let residue = angular_gap_excess(c, &touch);
        Incircle { ball: Ball { center: c, radius: r }, touch, residue }
    }

    fn touch_points(&self, c: HPoint<T>, r: T) -> Vec<HPoint<T>> {
        let tol = T::lit(1e-7);
        let mut out: Vec<HPoint<T>> = Vec::new();
        for a in self.region.arcs() {
            let (z, d) = a.closest(c);
            if d <= r + tol && out.iter().all(|q| dist(*q, z) > T::lit(1e-6)) {
                out.push(z);
            }
        }
        out
    }

    fn farthest(&self, c: HPoint<T>) -> T {
        if self.region.is_empty() {
            return self.generators.iter().map(|g| dist(c, *g)).fold(T::zero(), T::max);
        }
        self.region.arcs().iter().map(|a| a.farthest(c).1).fold(T::zero(), T::max)
    }

    fn solve_circumcircle(&self) -> Ball<T> {
        if let Shape::Ball(b) = &self.shape {
            return *b;
        }
        let (bx, by) = self.klein_box(&Isometry::identity());
        let f = |x: T, y: T| {
            if x * x + y * y >= T::one() {
                return T::neg_infinity();
            }
            match HPoint::from_klein(x, y) {
                Ok(p) => -self.farthest(p),
                Err(_) => T::neg_infinity(),
            }
        };
        let tol = T::lit(1e-13).max(T::epsilon() * T::lit(100.0));
        let ((x, y), _) = nested_golden_max(f, bx, by, tol);
        let c = HPoint::from_klein(x, y).unwrap_or_else(|_| HPoint::origin());
        Ball { center: c, radius: self.farthest(c) }
    }

    pub fn transform(&self, iso: &Isometry<T>) -> Self {
        let shape = match &self.shape {
            Shape::Points => Shape::Points,
            Shape::Ball(b) => Shape::Ball(Ball { center: iso.apply(b.center), radius: b.radius }),
            Shape::Spiked(b) => Shape::Spiked(Ball { center: iso.apply(b.center), radius: b.radius }),
        };
        let ball_map = |b: &Ball<T>| Ball { center: iso.apply(b.center), radius: b.radius };
        HConvexBody {
            generators: self.generators.iter().map(|p| iso.apply(*p)).collect(),
            region: self.region.transform(iso),
            shape,
            degenerate: self.degenerate,
            horoballs: self.horoballs.iter().map(|h| Horoball::new(h.boundary.transform(iso))).collect(),
            incircle: self.incircle.as_ref().map(|i| Incircle {
                ball: ball_map(&i.ball),
                touch: i.touch.iter().map(|p| iso.apply(*p)).collect(),
                residue: i.residue,
            }),
            circumcircle: self.circumcircle.as_ref().map(ball_map),
        }
    }
}

impl<T: Real> Body<T> for HConvexBody<T> {
    fn region(&self) -> &Region<T> {
        &self.region
    }
    fn points(&self) -> &[HPoint<T>] {
        &self.generators
    }
    fn is_degenerate(&self) -> bool {
        self.degenerate
    }
}

/// Largest angular gap between the directions from `c` to `pts`, minus `π`
/// (clamped at zero): zero iff `c` lies in the convex hull of `pts`.
pub fn angular_gap_excess<T: Real>(c: HPoint<T>, pts: &[HPoint<T>]) -> T {
    if pts.len() < 2 {
        return T::PI();
    }
    let mut dirs: Vec<T> = pts.iter().map(|p| angle_mod(crate::model::direction(c, *p))).collect();
    dirs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut gap = dirs[0] + T::TAU() - dirs[dirs.len() - 1];
    for w in dirs.windows(2) {
        gap = gap.max(w[1] - w[0]);
    }
    (gap - T::PI()).max(T::zero())
}

fn dedup<T: Real>(points: &[HPoint<T>]) -> Vec<HPoint<T>> {
    let mut out: Vec<HPoint<T>> = Vec::new();
    for p in points {
        if out.iter().all(|q| dist(*p, *q) > T::lit(1e-12)) {
            out.push(*p);
        }
    }
    out
}

/// The h-convex hull of finitely many points: the intersection of all horoballs
/// containing them, bounded by horocyclic arcs between consecutive extreme points.
pub fn hconvex_hull<T: Real>(points: &[HPoint<T>]) -> Result<HConvexBody<T>> {
    let pts = dedup(points);
    if pts.is_empty() {
        return Err(GeomError::Degenerate("no points"));
    }
    if pts.len() == 1 {
        return Ok(HConvexBody {
            generators: pts,
            region: Region::empty(),
            shape: Shape::Points,
            degenerate: true,
            horoballs: Vec::new(),
            incircle: None,
            circumcircle: None,
        });
    }
    let n = pts.len();
    let start = (0..n)
        .max_by(|&a, &b| pts[a].norm2().partial_cmp(&pts[b].norm2()).unwrap())
        .unwrap();
    let tol = T::lit(1e-10).max(T::default_tol());
    let mut cur = start;
    let mut arcs = Vec::new();
    let mut horoballs = Vec::new();
    loop {
        let mut best: Option<(usize, Horocycle<T>, T, T)> = None;
        for j in 0..n {
            if j == cur {
                continue;
            }
            let h = horocycles_through(pts[cur], pts[j])?[0];
            let viol = (0..n)
                .filter(|&k| k != cur && k != j)
                .map(|k| h.signed_distance(pts[k]))
                .fold(T::neg_infinity(), T::max);
            let d = dist(pts[cur], pts[j]);
            let better = match &best {
                None => true,
                Some((_, _, bv, bd)) => {
                    let (v_ok, bv_ok) = (viol <= tol, *bv <= tol);
                    if v_ok != bv_ok {
                        v_ok
                    } else if v_ok {
                        d > *bd
                    } else {
                        viol < *bv
                    }
                }
            };
            if better {
                best = Some((j, h, viol, d));
            }
        }
        let (next, h, _, _) = best.expect("at least two points");
        arcs.push(Arc::new(Curve::Horocycle(h), pts[cur], pts[next])?);
        horoballs.push(Horoball::new(h));
        cur = next;
        if cur == start {
            break;
        }
        assert!(arcs.len() <= n, "h-convex hull produced more arcs than generators");
    }
    let region = Region::new(arcs)?;
    Ok(HConvexBody {
        generators: pts,
        region,
        shape: Shape::Points,
        degenerate: false,
        horoballs,
        incircle: None,
        circumcircle: None,
    }
    .finish())
}

/// Hausdorff distance between two bodies, evaluated on their boundaries
/// (equal to the distance between the bodies for convex sets).
/// Boundary samples are at most `res` apart and the largest gaps are refined.
pub fn hausdorff<T: Real, X: Body<T> + ?Sized, Y: Body<T> + ?Sized>(x: &X, y: &Y, res: T) -> T {
    one_sided(x, y, res).max(one_sided(y, x, res))
}

fn boundary_dist<T: Real, B: Body<T> + ?Sized>(b: &B, p: HPoint<T>) -> T {
    if b.region().is_empty() {
        b.points().iter().map(|q| dist(p, *q)).fold(T::infinity(), T::min)
    } else {
        b.region().boundary_distance(p)
    }
}

fn one_sided<T: Real, X: Body<T> + ?Sized, Y: Body<T> + ?Sized>(x: &X, y: &Y, res: T) -> T {
    if x.region().is_empty() {
        return x.points().iter().map(|p| boundary_dist(y, *p)).fold(T::zero(), T::max);
    }
    let mut best = T::zero();
    for arc in x.region().arcs() {
        let n = (arc.length() / res).ceil().to_usize().unwrap_or(1).max(1);
        let step = T::one() / T::lit(n as f64);
        let vals: Vec<T> = (0..=n).map(|i| boundary_dist(y, arc.point_at(step * T::lit(i as f64)))).collect();
        let (imax, vmax) = vals.iter().enumerate().fold((0, T::neg_infinity()), |acc, (i, v)| if *v > acc.1 { (i, *v) } else { acc });
        let lo = step * T::lit(imax.saturating_sub(1) as f64);
        let hi = (step * T::lit((imax + 1) as f64)).min(T::one());
        let (_, refined) = golden_max(|t| boundary_dist(y, arc.point_at(t)), lo, hi, T::lit(1e-10));
        best = best.max(vmax).max(refined);
    }
    best
}

//! Geodesics, horocycles, hypercycles and hyperbolic circles.
//!
//! Every curve is a generalized Euclidean circle in the model. Besides the
//! Euclidean support (a [`Cline`]) each kind carries its intrinsic data and a
//! natural coordinate along the curve:
//!
//! | kind       | coordinate                                   | speed           |
//! |------------|----------------------------------------------|-----------------|
//! | geodesic   | signed arclength from the point nearest `o`  | 1               |
//! | hypercycle | arclength of the projection onto the base    | `cosh ρ`        |
//! | horocycle  | horizontal coordinate in the half-plane frame | `λ = e^level`  |
//! | circle     | angle at the hyperbolic center               | `sinh r`        |
//!
//! Arcs are intervals of that coordinate, so sampling and arc membership never
//! depend on the conditioning of the Euclidean support.

use num_complex::Complex;

use crate::error::{GeomError, Result};
use crate::model::{direction, dist, offset, HPoint, IdealPoint, Isometry};
use crate::scalar::{Real, Tol};

fn two<T: Real>() -> T {
    T::lit(2.0)
}

/// Generalized circle `a|z|² - 2⟨z, b⟩ + c = 0` (a line when `a = 0`).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Cline<T> {
    pub a: T,
    pub b: Complex<T>,
    pub c: T,
}

/// Euclidean description of a cline.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Support<T> {
    Circle { center: Complex<T>, radius: T },
    /// Points `z` with `⟨z, normal⟩ = offset`, `|normal| = 1`.
    Line { normal: Complex<T>, offset: T },
}

impl<T: Real> Cline<T> {
    pub fn eval(&self, z: Complex<T>) -> T {
        self.a * z.norm_sqr() - two::<T>() * (z.re * self.b.re + z.im * self.b.im) + self.c
    }

    fn scale(&self) -> T {
        self.a.abs().max(self.b.norm()).max(self.c.abs())
    }

    /// The same cline scaled so its largest coefficient has magnitude one.
    pub fn normalized(&self) -> Cline<T> {
        let s = self.scale();
        Cline { a: self.a / s, b: self.b / s, c: self.c / s }
    }

    pub fn is_line(&self) -> bool {
        self.a.abs() <= T::lit(1e-13) * self.b.norm()
    }

    pub fn support(&self) -> Support<T> {
        if self.is_line() {
            let n = self.b.norm();
            Support::Line { normal: self.b / n, offset: self.c / (two::<T>() * n) }
        } else {
            let center = self.b / self.a;
            let r2 = center.norm_sqr() - self.c / self.a;
            Support::Circle { center, radius: r2.max(T::zero()).sqrt() }
        }
    }
}

/// Side of an oriented geodesic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn sign<T: Real>(self) -> T {
        match self {
            Side::Left => T::one(),
            Side::Right => -T::one(),
        }
    }

    pub fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// An oriented geodesic, running from ideal point `from` to ideal point `to`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Geodesic<T> {
    from: IdealPoint<T>,
    to: IdealPoint<T>,
}

impl<T: Real> Geodesic<T> {
    pub fn new(from: IdealPoint<T>, to: IdealPoint<T>) -> Result<Self> {
        if (from.c() - to.c()).norm() <= T::epsilon() * T::lit(64.0) {
            return Err(GeomError::Degenerate("geodesic with coincident ideal points"));
        }
        Ok(Geodesic { from, to })
    }

    /// The diameter traversed in direction `angle`.
    pub fn diameter(angle: T) -> Self {
        Geodesic { from: IdealPoint::new(angle + T::PI()), to: IdealPoint::new(angle) }
    }

    /// The geodesic through `p` and `q`, oriented from `p` toward `q`.
    pub fn through(p: HPoint<T>, q: HPoint<T>) -> Result<Self> {
        if p.euclid_dist(q) <= T::epsilon() * T::lit(64.0) {
            return Err(GeomError::Degenerate("geodesic through coincident points"));
        }
        let phi = direction(p, q);
        let back = Isometry::from_origin(p);
        let (s, c) = phi.sin_cos();
        let fwd = Complex::new(c, s);
        Ok(Geodesic {
            from: IdealPoint::from_c(back.apply_c(-fwd)),
            to: IdealPoint::from_c(back.apply_c(fwd)),
        })
    }

    pub fn from(&self) -> IdealPoint<T> {
        self.from
    }

    pub fn to(&self) -> IdealPoint<T> {
        self.to
    }

    pub fn reversed(&self) -> Self {
        Geodesic { from: self.to, to: self.from }
    }

    /// Half of the counterclockwise angle from `from` to `to`, and the unit
    /// vector bisecting that boundary arc.
    fn half_angle(&self) -> (T, Complex<T>) {
        let mut d = self.to.angle() - self.from.angle();
        if d < T::zero() {
            d += T::TAU();
        }
        let h = d / two::<T>();
        let m = self.from.angle() + h;
        (h, Complex::new(m.cos(), m.sin()))
    }

    /// `sinh` of the signed distance (positive on the left).
    pub fn sinh_signed_distance(&self, z: HPoint<T>) -> T {
        let (h, u) = self.half_angle();
        let zc = z.c();
        let sh = (h / two::<T>()).sin();
        let num = (zc - u).norm_sqr() - two::<T>() * (T::one() + zc.norm_sqr()) * sh * sh;
        num / (z.defect() * h.sin())
    }

    /// Signed distance; positive on the left of the orientation.
    pub fn signed_distance(&self, z: HPoint<T>) -> T {
        self.sinh_signed_distance(z).asinh()
    }

    pub fn distance(&self, z: HPoint<T>) -> T {
        self.signed_distance(z).abs()
    }

    pub fn cline(&self) -> Cline<T> {
        let (h, u) = self.half_angle();
        Cline { a: h.cos(), b: u, c: h.cos() }
    }

    /// The point of the geodesic nearest to the origin.
    pub fn nearest_to_origin(&self) -> HPoint<T> {
        let (h, u) = self.half_angle();
        let k = h.cos() / (T::one() + h.sin());
        HPoint::raw(u.re * k, u.im * k)
    }

    /// An isometry mapping this geodesic onto the real diameter with
    /// `from ↦ -1` and `to ↦ 1`; the left side goes to the upper half.
    pub fn axis_frame(&self) -> Isometry<T> {
        let t = Isometry::to_origin(self.nearest_to_origin());
        let w = t.apply_c(self.to.c());
        Isometry::rotation(-w.im.atan2(w.re)).compose(&t)
    }

    /// Fermi coordinates `(s, t)`: `s` the signed arclength of the foot from
    /// the point nearest the origin, `t` the signed distance.
    pub fn fermi(&self, z: HPoint<T>) -> (T, T) {
        let w = self.axis_frame().apply_c(z.c());
        (fermi_s(w), self.signed_distance(z))
    }

    /// The point with Fermi coordinates `(s, t)`.
    pub fn from_fermi(&self, s: T, t: T) -> HPoint<T> {
        let w = Complex::new(T::zero(), (t / two::<T>()).tanh());
        let slide = Isometry::from_origin(HPoint::raw((s / two::<T>()).tanh(), T::zero()));
        self.axis_frame().inverse().apply(slide.apply(HPoint::from_c(w)))
    }

    pub fn point_at(&self, s: T) -> HPoint<T> {
        self.from_fermi(s, T::zero())
    }

    /// Orthogonal projection onto the geodesic.
    pub fn foot(&self, z: HPoint<T>) -> HPoint<T> {
        let w = self.axis_frame().apply_c(z.c());
        self.point_at(fermi_s(w))
    }

    pub fn contains(&self, z: HPoint<T>, tol: T) -> bool {
        self.distance(z) <= tol
    }

    pub fn transform(&self, iso: &Isometry<T>) -> Self {
        Geodesic { from: iso.apply_ideal(self.from), to: iso.apply_ideal(self.to) }
    }
}

/// Projection coordinate along the real diameter: `ln(|w + 1| / |w - 1|)`.
pub(crate) fn fermi_s<T: Real>(w: Complex<T>) -> T {
    let one = Complex::new(T::one(), T::zero());
    ((w + one).norm() / (w - one).norm()).ln()
}

/// A horocycle: the level set `B_ξ(z) = level` of the Busemann function
/// `B_ξ(z) = ln(|ξ - z|² / (1 - |z|²))`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Horocycle<T> {
    ideal: IdealPoint<T>,
    level: T,
}

/// Busemann function of the ideal point `xi`; decreases toward `xi`.
pub fn busemann<T: Real>(xi: IdealPoint<T>, z: HPoint<T>) -> T {
    ((xi.c() - z.c()).norm_sqr() / z.defect()).ln()
}

impl<T: Real> Horocycle<T> {
    /// The horocycle through `z` with ideal point `ideal`.
    pub fn at(z: HPoint<T>, ideal: IdealPoint<T>) -> Self {
        Horocycle { ideal, level: busemann(ideal, z) }
    }

    pub fn from_level(ideal: IdealPoint<T>, level: T) -> Self {
        Horocycle { ideal, level }
    }

    pub fn ideal(&self) -> IdealPoint<T> {
        self.ideal
    }

    pub fn level(&self) -> T {
        self.level
    }

    /// Signed distance, positive outside the horoball.
    pub fn signed_distance(&self, z: HPoint<T>) -> T {
        busemann(self.ideal, z) - self.level
    }

    pub fn distance(&self, z: HPoint<T>) -> T {
        self.signed_distance(z).abs()
    }

    /// Euclidean center parameter: the support circle is centered at `t ξ` with radius `1 - t`.
    fn t(&self) -> T {
        T::one() / (T::one() + self.level.exp())
    }

    pub fn cline(&self) -> Cline<T> {
        let t = self.t();
        Cline { a: T::one(), b: self.ideal.c() * t, c: two::<T>() * t - T::one() }
    }

    /// The point of the horocycle nearest to the origin.
    pub fn nearest_to_origin(&self) -> HPoint<T> {
        HPoint::from_c(self.ideal.c() * (two::<T>() * self.t() - T::one()))
    }

    /// The closest point: the intersection with the geodesic from `z` to the ideal point.
    pub fn foot(&self, z: HPoint<T>) -> HPoint<T> {
        let shift = self.signed_distance(z);
        let m = Isometry::to_origin(z);
        let xi = m.apply_c(self.ideal.c());
        let k = (shift / two::<T>()).tanh();
        m.inverse().apply(HPoint::from_c(xi * k))
    }

    fn frame(&self) -> Isometry<T> {
        Isometry::rotation(-self.ideal.angle())
    }

    /// Horizontal coordinate in the upper half-plane frame sending `ξ` to `∞`.
    pub fn coord(&self, z: HPoint<T>) -> T {
        let w = self.frame().apply_c(z.c());
        let one = Complex::new(T::one(), T::zero());
        -two::<T>() * w.im / (one - w).norm_sqr()
    }

    pub fn point_at(&self, x: T) -> HPoint<T> {
        let y = (-self.level).exp();
        let zeta = Complex::new(x, y);
        let i = Complex::new(T::zero(), T::one());
        let w = (zeta - i) / (zeta + i);
        self.frame().inverse().apply(HPoint::from_c(w))
    }

    /// Arclength per unit of [`Horocycle::coord`].
    pub fn speed(&self) -> T {
        self.level.exp()
    }

    pub fn transform(&self, iso: &Isometry<T>) -> Self {
        Horocycle::at(iso.apply(self.nearest_to_origin()), iso.apply_ideal(self.ideal))
    }
}

/// A closed horoball.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Horoball<T> {
    pub boundary: Horocycle<T>,
}

impl<T: Real> Horoball<T> {
    pub fn new(boundary: Horocycle<T>) -> Self {
        Horoball { boundary }
    }

    /// Depth of `z` inside the horoball (negative outside).
    pub fn depth(&self, z: HPoint<T>) -> T {
        -self.boundary.signed_distance(z)
    }

    pub fn contains(&self, z: HPoint<T>, tol: T) -> bool {
        self.depth(z) >= -tol
    }
}

/// Points at distance `dist` from a base geodesic on one side.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Hypercycle<T> {
    base: Geodesic<T>,
    dist: T,
    side: Side,
}

impl<T: Real> Hypercycle<T> {
    pub fn base(&self) -> Geodesic<T> {
        self.base
    }

    pub fn dist(&self) -> T {
        self.dist
    }

    pub fn side(&self) -> Side {
        self.side
    }

    /// Signed distance; positive beyond the hypercycle, away from the base.
    pub fn signed_distance(&self, z: HPoint<T>) -> T {
        self.side.sign::<T>() * self.base.signed_distance(z) - self.dist
    }

    pub fn cline(&self) -> Cline<T> {
        let (h, u) = self.base.half_angle();
        let k = self.side.sign::<T>() * self.dist.sinh() * h.sin();
        Cline { a: h.cos() + k, b: u, c: h.cos() - k }
    }

    pub fn point_at(&self, s: T) -> HPoint<T> {
        self.base.from_fermi(s, self.side.sign::<T>() * self.dist)
    }

    pub fn foot(&self, z: HPoint<T>) -> HPoint<T> {
        let (s, _) = self.base.fermi(z);
        self.point_at(s)
    }

    pub fn transform(&self, iso: &Isometry<T>) -> Self {
        let side = if iso.preserves_orientation() { self.side } else { self.side.flip() };
        Hypercycle { base: self.base.transform(iso), dist: self.dist, side }
    }
}

/// A hyperbolic circle.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HCircle<T> {
    center: HPoint<T>,
    radius: T,
}

impl<T: Real> HCircle<T> {
    pub fn new(center: HPoint<T>, radius: T) -> Result<Self> {
        if !(radius > T::zero()) {
            return Err(GeomError::Range { what: "radius", value: radius.f64(), range: "(0, inf)" });
        }
        Ok(HCircle { center, radius })
    }

    pub fn center(&self) -> HPoint<T> {
        self.center
    }

    pub fn radius(&self) -> T {
        self.radius
    }

    pub fn signed_distance(&self, z: HPoint<T>) -> T {
        dist(self.center, z) - self.radius
    }

    pub fn cline(&self) -> Cline<T> {
        let sh = (self.radius / two::<T>()).sinh();
        let k = sh * sh * self.center.defect();
        Cline { a: T::one() + k, b: self.center.c(), c: self.center.norm2() - k }
    }

    pub fn point_at(&self, phi: T) -> HPoint<T> {
        offset(self.center, phi, self.radius)
    }

    pub fn coord(&self, z: HPoint<T>) -> T {
        direction(self.center, z)
    }

    pub fn foot(&self, z: HPoint<T>) -> HPoint<T> {
        if z.euclid_dist(self.center) <= T::epsilon() {
            return self.point_at(T::zero());
        }
        self.point_at(direction(self.center, z))
    }

    pub fn transform(&self, iso: &Isometry<T>) -> Self {
        HCircle { center: iso.apply(self.center), radius: self.radius }
    }
}

/// Classification tag of a [`Curve`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CurveKind {
    Geodesic,
    Horocycle,
    Hypercycle,
    Circle,
}

impl CurveKind {
    pub fn name(self) -> &'static str {
        match self {
            CurveKind::Geodesic => "geodesic",
            CurveKind::Horocycle => "horocycle",
            CurveKind::Hypercycle => "hypercycle",
            CurveKind::Circle => "circle",
        }
    }
}

/// A classified generalized circle.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Curve<T> {
    Geodesic(Geodesic<T>),
    Horocycle(Horocycle<T>),
    Hypercycle(Hypercycle<T>),
    Circle(HCircle<T>),
}

impl<T: Real> Curve<T> {
    pub fn kind(&self) -> CurveKind {
        match self {
            Curve::Geodesic(_) => CurveKind::Geodesic,
            Curve::Horocycle(_) => CurveKind::Horocycle,
            Curve::Hypercycle(_) => CurveKind::Hypercycle,
            Curve::Circle(_) => CurveKind::Circle,
        }
    }

    pub fn cline(&self) -> Cline<T> {
        match self {
            Curve::Geodesic(g) => g.cline(),
            Curve::Horocycle(h) => h.cline(),
            Curve::Hypercycle(h) => h.cline(),
            Curve::Circle(c) => c.cline(),
        }
    }

    pub fn support(&self) -> Support<T> {
        self.cline().support()
    }

    /// Signed distance with the kind's sign convention: geodesics are positive
    /// on the left, the other kinds are positive on their non-convex side.
    pub fn signed_distance(&self, z: HPoint<T>) -> T {
        match self {
            Curve::Geodesic(g) => g.signed_distance(z),
            Curve::Horocycle(h) => h.signed_distance(z),
            Curve::Hypercycle(h) => h.signed_distance(z),
            Curve::Circle(c) => c.signed_distance(z),
        }
    }

    pub fn distance(&self, z: HPoint<T>) -> T {
        self.signed_distance(z).abs()
    }

    /// Closest point of the (whole) curve.
    pub fn foot(&self, z: HPoint<T>) -> HPoint<T> {
        match self {
            Curve::Geodesic(g) => g.foot(z),
            Curve::Horocycle(h) => h.foot(z),
            Curve::Hypercycle(h) => h.foot(z),
            Curve::Circle(c) => c.foot(z),
        }
    }

    /// Natural coordinate of a point on the curve (see the module table).
    pub fn coord(&self, z: HPoint<T>) -> T {
        match self {
            Curve::Geodesic(g) => g.fermi(z).0,
            Curve::Horocycle(h) => h.coord(z),
            Curve::Hypercycle(h) => h.base.fermi(z).0,
            Curve::Circle(c) => c.coord(z),
        }
    }

    pub fn point_at(&self, u: T) -> HPoint<T> {
        match self {
            Curve::Geodesic(g) => g.point_at(u),
            Curve::Horocycle(h) => h.point_at(u),
            Curve::Hypercycle(h) => h.point_at(u),
            Curve::Circle(c) => c.point_at(u),
        }
    }

    /// Arclength per unit of the natural coordinate.
    pub fn speed(&self) -> T {
        match self {
            Curve::Geodesic(_) => T::one(),
            Curve::Horocycle(h) => h.speed(),
            Curve::Hypercycle(h) => h.dist.cosh(),
            Curve::Circle(c) => c.radius.sinh(),
        }
    }

    pub fn ideal_points(&self) -> Vec<IdealPoint<T>> {
        match self {
            Curve::Geodesic(g) => vec![g.from, g.to],
            Curve::Horocycle(h) => vec![h.ideal],
            Curve::Hypercycle(h) => vec![h.base.from, h.base.to],
            Curve::Circle(_) => vec![],
        }
    }

    pub fn transform(&self, iso: &Isometry<T>) -> Self {
        match self {
            Curve::Geodesic(g) => Curve::Geodesic(g.transform(iso)),
            Curve::Horocycle(h) => Curve::Horocycle(h.transform(iso)),
            Curve::Hypercycle(h) => Curve::Hypercycle(h.transform(iso)),
            Curve::Circle(c) => Curve::Circle(c.transform(iso)),
        }
    }

    pub fn as_geodesic(&self) -> Result<&Geodesic<T>> {
        match self {
            Curve::Geodesic(g) => Ok(g),
            other => Err(GeomError::WrongKind { expected: "geodesic", found: other.kind().name() }),
        }
    }

    pub fn as_horocycle(&self) -> Result<&Horocycle<T>> {
        match self {
            Curve::Horocycle(h) => Ok(h),
            other => Err(GeomError::WrongKind { expected: "horocycle", found: other.kind().name() }),
        }
    }
}

/// The geodesic through two points.
pub fn geodesic_through<T: Real>(p: HPoint<T>, q: HPoint<T>) -> Result<Curve<T>> {
    Ok(Curve::Geodesic(Geodesic::through(p, q)?))
}

/// Distance from a point to a geodesic.
pub fn dist_to_geodesic<T: Real>(p: HPoint<T>, l: &Curve<T>) -> Result<T> {
    Ok(l.as_geodesic()?.distance(p))
}

/// The horocycle through `z` with ideal point `i`.
pub fn horocycle_at<T: Real>(z: HPoint<T>, i: IdealPoint<T>) -> Curve<T> {
    Curve::Horocycle(Horocycle::at(z, i))
}

/// The horoball containing the ball `B(center, radius)` whose boundary is tangent to it at `z`.
pub fn supporting_horocycle<T: Real>(center: HPoint<T>, radius: T, z: HPoint<T>) -> Result<Horoball<T>> {
    let off = (dist(center, z) - radius).abs();
    if off > T::lit(1e-8).max(T::default_tol() * T::lit(100.0)) {
        return Err(GeomError::OffCurve(off.f64()));
    }
    Ok(Horoball::new(Horocycle::at(z, ball_far_ideal(center, z))))
}

/// End of the ray from `z` through `center`, the ideal point opposite to `z` seen from `center`.
pub(crate) fn ball_far_ideal<T: Real>(center: HPoint<T>, z: HPoint<T>) -> IdealPoint<T> {
    let phi = direction(center, z) + T::PI();
    let u = Complex::new(phi.cos(), phi.sin());
    IdealPoint::from_c(Isometry::from_origin(center).apply_c(u))
}

/// End of the geodesic ray from `p` through `q`.
pub fn ray_end<T: Real>(p: HPoint<T>, q: HPoint<T>) -> IdealPoint<T> {
    let phi = direction(p, q);
    IdealPoint::from_c(Isometry::from_origin(p).apply_c(Complex::new(phi.cos(), phi.sin())))
}

/// The hypercycle at distance `rho` from `l` on `side`.
pub fn hypercycle<T: Real>(l: &Curve<T>, rho: T, side: Side) -> Result<Curve<T>> {
    let base = *l.as_geodesic()?;
    if !(rho > T::zero()) {
        return Err(GeomError::Range { what: "rho", value: rho.f64(), range: "(0, inf)" });
    }
    Ok(Curve::Hypercycle(Hypercycle { base, dist: rho, side }))
}

/// Closest point of a horocycle to `p`.
pub fn closest_point_on_horocycle<T: Real>(p: HPoint<T>, h: &Curve<T>) -> Result<HPoint<T>> {
    Ok(h.as_horocycle()?.foot(p))
}

/// The two horocycles through distinct `x`, `y`; the first has its ideal
/// point on the left of the directed segment `x → y`.
pub fn horocycles_through<T: Real>(x: HPoint<T>, y: HPoint<T>) -> Result<[Horocycle<T>; 2]> {
    if x.euclid_dist(y) <= T::epsilon() * T::lit(64.0) {
        return Err(GeomError::Degenerate("horocycles through coincident points"));
    }
    let m = crate::model::midpoint(x, y);
    let frame = Isometry::rotation(-direction(m, y)).compose(&Isometry::to_origin(m));
    let back = frame.inverse();
    let i = Complex::new(T::zero(), T::one());
    let left = IdealPoint::from_c(back.apply_c(i));
    let right = IdealPoint::from_c(back.apply_c(-i));
    Ok([Horocycle::at(x, left), Horocycle::at(x, right)])
}

/// Result of intersecting two curves.
#[derive(Clone, Debug, PartialEq)]
pub struct Intersection<T> {
    pub points: Vec<HPoint<T>>,
    /// Set when two intersection points merged into one (tangency).
    pub tangent: bool,
}

/// Intersection points of two curves inside the open disk.
pub fn intersect<T: Real>(c1: &Curve<T>, c2: &Curve<T>) -> Result<Intersection<T>> {
    intersect_with(c1, c2, Tol::default())
}

pub fn intersect_with<T: Real>(c1: &Curve<T>, c2: &Curve<T>, tol: Tol<T>) -> Result<Intersection<T>> {
    let q1 = c1.cline().normalized();
    let q2 = c2.cline().normalized();
    let same = |s: T| {
        (q1.a - s * q2.a).abs() + (q1.b - q2.b * s).norm() + (q1.c - s * q2.c).abs() <= T::lit(1e-12)
    };
    if same(T::one()) || same(-T::one()) {
        return Err(GeomError::Coincident);
    }
    let raw = cline_intersections(&q1, &q2, tol.merge);
    let lim = T::one() - T::boundary_margin();
    let points: Vec<HPoint<T>> = raw
        .0
        .into_iter()
        .filter(|z| z.norm_sqr() < lim * lim)
        .map(HPoint::from_c)
        .collect();
    Ok(Intersection { points, tangent: raw.1 })
}

fn cline_intersections<T: Real>(q1: &Cline<T>, q2: &Cline<T>, merge: T) -> (Vec<Complex<T>>, bool) {
    // Reduce to a line and a quadric: the radical line for two circles.
    let (quad, line_n, line_k) = if q1.is_line() && q2.is_line() {
        let (n1, k1) = (q1.b, q1.c / two::<T>());
        let (n2, k2) = (q2.b, q2.c / two::<T>());
        let det = n1.re * n2.im - n1.im * n2.re;
        if det.abs() <= T::lit(1e-14) * n1.norm() * n2.norm() {
            return (vec![], false);
        }
        let x = (k1 * n2.im - k2 * n1.im) / det;
        let y = (n1.re * k2 - n2.re * k1) / det;
        return (vec![Complex::new(x, y)], false);
    } else if q2.is_line() {
        (q1, q2.b, q2.c)
    } else if q1.is_line() {
        (q2, q1.b, q1.c)
    } else {
        let (big, small) = if q1.a.abs() >= q2.a.abs() { (q1, q2) } else { (q2, q1) };
        (big, small.b * big.a - big.b * small.a, small.c * big.a - big.c * small.a)
    };
    // Line: -2⟨z, n⟩ + k = 0.
    let nn = line_n.norm();
    if nn <= T::lit(1e-300) {
        return (vec![], false);
    }
    let nh = line_n / nn;
    let d = line_k / (two::<T>() * nn);
    let perp = Complex::new(-nh.im, nh.re);
    let foot = nh * d;
    let beta = perp.re * quad.b.re + perp.im * quad.b.im;
    let gamma = quad.eval(foot);
    let a = quad.a;
    let disc = beta * beta - a * gamma;
    let half_gap = disc.abs().sqrt() / a.abs();
    if half_gap * two::<T>() <= merge {
        return (vec![foot + perp * (beta / a)], true);
    }
    if disc < T::zero() {
        return (vec![], false);
    }
    let sq = disc.sqrt();
    // Stable quadratic roots of a t² - 2 β t + γ = 0.
    let s = if beta >= T::zero() { beta + sq } else { beta - sq };
    let t1 = s / a;
    let t2 = if s == T::zero() { -t1 } else { gamma / s };
    (vec![foot + perp * t1, foot + perp * t2], false)
}

/// A bounded arc of a curve between two points on it.
///
/// The arc is the interval `[u0, u1]` (or `[u1, u0]`) of the curve's natural
/// coordinate. For circles the orientation flag selects which of the two arcs
/// between the endpoints is meant; for the other kinds the bounded arc is unique.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Arc<T> {
    curve: Curve<T>,
    start: HPoint<T>,
    end: HPoint<T>,
    u0: T,
    u1: T,
}

impl<T: Real> Arc<T> {
    fn check_on(curve: &Curve<T>, p: HPoint<T>) -> Result<()> {
        let r = curve.distance(p);
        let lim = T::lit(1e-7).max(T::default_tol() * T::lit(1e3));
        if r > lim || r.is_nan() {
            return Err(GeomError::OffCurve(r.f64()));
        }
        Ok(())
    }

    /// The bounded arc between `start` and `end`; for circles, the shorter one.
    pub fn new(curve: Curve<T>, start: HPoint<T>, end: HPoint<T>) -> Result<Self> {
        match curve {
            Curve::Circle(_) => {
                let a0 = curve.coord(start);
                let mut d = curve.coord(end) - a0;
                let pi = T::PI();
                while d > pi {
                    d -= T::TAU();
                }
                while d <= -pi {
                    d += T::TAU();
                }
                Arc::check_on(&curve, start)?;
                Arc::check_on(&curve, end)?;
                Ok(Arc { curve, start, end, u0: a0, u1: a0 + d })
            }
            _ => {
                Arc::check_on(&curve, start)?;
                Arc::check_on(&curve, end)?;
                Ok(Arc { curve, start, end, u0: curve.coord(start), u1: curve.coord(end) })
            }
        }
    }

    /// A circular arc traversed counterclockwise (`ccw`) or clockwise about the center.
    /// Equal endpoints give the full circle.
    pub fn circular(circle: HCircle<T>, start: HPoint<T>, end: HPoint<T>, ccw: bool) -> Result<Self> {
        let curve = Curve::Circle(circle);
        Arc::check_on(&curve, start)?;
        Arc::check_on(&curve, end)?;
        let a0 = curve.coord(start);
        let tau = T::TAU();
        let mut d = (curve.coord(end) - a0) % tau;
        if ccw {
            if d <= T::zero() {
                d += tau;
            }
        } else if d >= T::zero() {
            d -= tau;
        }
        Ok(Arc { curve, start, end, u0: a0, u1: a0 + d })
    }

    pub fn curve(&self) -> &Curve<T> {
        &self.curve
    }

    pub fn start(&self) -> HPoint<T> {
        self.start
    }

    pub fn end(&self) -> HPoint<T> {
        self.end
    }

    pub fn coords(&self) -> (T, T) {
        (self.u0, self.u1)
    }

    pub fn point_at(&self, t: T) -> HPoint<T> {
        if t <= T::zero() {
            self.start
        } else if t >= T::one() {
            self.end
        } else {
            self.curve.point_at(self.u0 + (self.u1 - self.u0) * t)
        }
    }

    pub fn midpoint(&self) -> HPoint<T> {
        self.point_at(T::lit(0.5))
    }

    pub fn length(&self) -> T {
        (self.u1 - self.u0).abs() * self.curve.speed()
    }

    pub fn reversed(&self) -> Self {
        Arc { curve: self.curve, start: self.end, end: self.start, u0: self.u1, u1: self.u0 }
    }

    /// Parameter `t` of a point on the curve (values outside `[0, 1]` are off the arc).
    pub fn param_of(&self, z: HPoint<T>) -> T {
        let du = self.u1 - self.u0;
        if du == T::zero() {
            return if z.euclid_dist(self.start) <= T::epsilon() { T::zero() } else { T::infinity() };
        }
        let mut rel = self.curve.coord(z) - self.u0;
        if let Curve::Circle(_) = self.curve {
            let tau = T::TAU();
            rel %= tau;
            if du > T::zero() && rel < T::zero() {
                rel += tau;
            }
            if du < T::zero() && rel > T::zero() {
                rel -= tau;
            }
            // Points just before the start wrap around; report them as negative.
            let t = rel / du;
            if t > T::one() {
                let alt = (rel - tau * du.signum()) / du;
                if alt.abs() < t - T::one() {
                    return alt;
                }
            }
            return t;
        }
        rel / du
    }

    /// Closest point of the arc to `z` and its distance.
    pub fn closest(&self, z: HPoint<T>) -> (HPoint<T>, T) {
        let f = self.curve.foot(z);
        let t = self.param_of(f);
        if t >= T::zero() && t <= T::one() {
            return (f, dist(z, f));
        }
        let ds = dist(z, self.start);
        let de = dist(z, self.end);
        if ds <= de {
            (self.start, ds)
        } else {
            (self.end, de)
        }
    }

    pub fn distance(&self, z: HPoint<T>) -> T {
        self.closest(z).1
    }

    /// Farthest point of the arc from `z` and its distance.
    pub fn farthest(&self, z: HPoint<T>) -> (HPoint<T>, T) {
        let ds = dist(z, self.start);
        let de = dist(z, self.end);
        let mut best = if ds >= de { (self.start, ds) } else { (self.end, de) };
        if let Curve::Circle(c) = self.curve {
            if z.euclid_dist(c.center()) > T::epsilon() {
                let far = c.point_at(direction(c.center(), z) + T::PI());
                let t = self.param_of(far);
                if t >= T::zero() && t <= T::one() {
                    let d = dist(z, far);
                    if d > best.1 {
                        best = (far, d);
                    }
                }
            }
        }
        best
    }

    /// `n + 1` points at equal parameter steps, endpoints included.
    pub fn samples(&self, n: usize) -> Vec<HPoint<T>> {
        let n = n.max(1);
        (0..=n).map(|i| self.point_at(T::lit(i as f64) / T::lit(n as f64))).collect()
    }

    /// Samples spaced at most `res` apart in hyperbolic arclength.
    pub fn samples_res(&self, res: T) -> Vec<HPoint<T>> {
        let n = (self.length() / res).ceil().to_usize().unwrap_or(1).max(1);
        self.samples(n)
    }

    pub fn transform(&self, iso: &Isometry<T>) -> Self {
        let curve = self.curve.transform(iso);
        let start = iso.apply(self.start);
        let end = iso.apply(self.end);
        match curve {
            Curve::Circle(_) => {
                let a0 = curve.coord(start);
                let sweep = if iso.preserves_orientation() { self.u1 - self.u0 } else { self.u0 - self.u1 };
                Arc { curve, start, end, u0: a0, u1: a0 + sweep }
            }
            _ => Arc { curve, start, end, u0: curve.coord(start), u1: curve.coord(end) },
        }
    }

    /// Signed Euclidean sweep of the arc about its support center, if the
    /// support is a circle; used for rendering and winding tests.
    pub fn euclid_arc(&self) -> Option<(Complex<T>, T, T, T)> {
        match self.curve.support() {
            Support::Line { .. } => None,
            Support::Circle { center, radius } => {
                if radius > T::lit(1e6) {
                    return None;
                }
                let ang = |p: HPoint<T>| {
                    let v = p.c() - center;
                    v.im.atan2(v.re)
                };
                let a0 = ang(self.start);
                let am = ang(self.midpoint());
                let a1 = ang(self.end);
                let tau = T::TAU();
                let wrap = |x: T| {
                    let mut y = x % tau;
                    if y < T::zero() {
                        y += tau;
                    }
                    y
                };
                let ccw_to_end = wrap(a1 - a0);
                let ccw_to_mid = wrap(am - a0);
                let sweep = if ccw_to_mid <= ccw_to_end || ccw_to_end == T::zero() && self.is_full() {
                    if ccw_to_end == T::zero() { tau } else { ccw_to_end }
                } else {
                    ccw_to_end - tau
                };
                Some((center, radius, a0, sweep))
            }
        }
    }

    /// Direction (angle at `start`) in which the arc leaves its start point.
    pub fn start_direction(&self) -> T {
        let x = self.start;
        let guess = {
            let t = T::lit(1e-4);
            direction(x, self.point_at(t))
        };
        let normal = match self.curve {
            Curve::Geodesic(_) => return direction(x, self.end),
            Curve::Horocycle(h) => {
                let xi = Isometry::to_origin(x).apply_c(h.ideal().c());
                xi.im.atan2(xi.re)
            }
            Curve::Circle(c) => direction(x, c.center()),
            Curve::Hypercycle(h) => {
                let f = h.base().foot(x);
                direction(x, f)
            }
        };
        let half = T::FRAC_PI_2();
        let (a, b) = (normal + half, normal - half);
        if (a - guess).cos() >= (b - guess).cos() {
            a
        } else {
            b
        }
    }

    /// Direction at `end` pointing back into the arc.
    pub fn end_direction(&self) -> T {
        self.reversed().start_direction()
    }

    fn is_full(&self) -> bool {
        matches!(self.curve, Curve::Circle(_)) && (self.u1 - self.u0).abs() >= T::TAU() - T::lit(1e-12)
    }
}

//! Points, distance, isometries and trigonometry of the Poincaré disk.

use num_complex::Complex;

use crate::curves::Geodesic;
use crate::error::{GeomError, Result};
use crate::scalar::Real;

/// A point of the hyperbolic plane, stored as Euclidean coordinates inside the unit disk.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct HPoint<T> {
    x: T,
    y: T,
}

impl<T: Real> HPoint<T> {
    /// Validated constructor; rejects norms at or beyond `1 - T::boundary_margin()`.
    pub fn new(x: T, y: T) -> Result<Self> {
        let n2 = x * x + y * y;
        let lim = T::one() - T::boundary_margin();
        if !(n2 < lim * lim) {
            return Err(GeomError::OutsideDisk { x: x.f64(), y: y.f64() });
        }
        Ok(HPoint { x, y })
    }

    pub fn origin() -> Self {
        HPoint { x: T::zero(), y: T::zero() }
    }

    /// The point at hyperbolic distance `d` from the origin in direction `angle`.
    pub fn polar(d: T, angle: T) -> Result<Self> {
        let s = dist_origin_inverse(d);
        HPoint::new(s * angle.cos(), s * angle.sin())
    }

    pub(crate) fn raw(x: T, y: T) -> Self {
        HPoint { x, y }
    }

    pub(crate) fn from_c(z: Complex<T>) -> Self {
        HPoint { x: z.re, y: z.im }
    }

    /// Converts a mapped complex number back into a point, failing near the boundary.
    pub fn try_from_c(z: Complex<T>) -> Result<Self> {
        HPoint::new(z.re, z.im)
    }

    pub fn x(self) -> T {
        self.x
    }

    pub fn y(self) -> T {
        self.y
    }

    pub fn c(self) -> Complex<T> {
        Complex::new(self.x, self.y)
    }

    pub fn norm2(self) -> T {
        self.x * self.x + self.y * self.y
    }

    pub fn norm(self) -> T {
        self.norm2().sqrt()
    }

    /// `1 - |p|^2`, the conformal factor denominator.
    pub fn defect(self) -> T {
        T::one() - self.norm2()
    }

    pub fn euclid_dist(self, other: Self) -> T {
        (self.x - other.x).hypot(self.y - other.y)
    }

    /// Beltrami–Cayley–Klein coordinates `2p / (1 + |p|^2)`.
    pub fn to_klein(self) -> (T, T) {
        let f = T::lit(2.0) / (T::one() + self.norm2());
        (self.x * f, self.y * f)
    }

    /// Inverse of [`HPoint::to_klein`].
    pub fn from_klein(kx: T, ky: T) -> Result<Self> {
        let k2 = kx * kx + ky * ky;
        if !(k2 < T::one()) {
            return Err(GeomError::OutsideDisk { x: kx.f64(), y: ky.f64() });
        }
        let f = T::one() / (T::one() + (T::one() - k2).sqrt());
        HPoint::new(kx * f, ky * f)
    }

    pub fn to_f64(self) -> HPoint<f64> {
        HPoint { x: self.x.f64(), y: self.y.f64() }
    }

    /// Converts between scalar types without revalidating.
    pub fn cast<U: Real>(self) -> HPoint<U> {
        HPoint { x: U::lit(self.x.f64()), y: U::lit(self.y.f64()) }
    }
}

/// A point of the ideal boundary, stored by its angle in `[0, 2π)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IdealPoint<T> {
    angle: T,
}

impl<T: Real> IdealPoint<T> {
    pub fn new(angle: T) -> Self {
        let tau = T::TAU();
        let mut a = angle % tau;
        if a < T::zero() {
            a += tau;
        }
        if a >= tau {
            a -= tau;
        }
        IdealPoint { angle: a }
    }

    pub fn from_c(z: Complex<T>) -> Self {
        IdealPoint::new(z.im.atan2(z.re))
    }

    pub fn angle(self) -> T {
        self.angle
    }

    pub fn c(self) -> Complex<T> {
        let (s, c) = self.angle.sin_cos();
        Complex::new(c, s)
    }
}

/// Hyperbolic distance, via the cancellation-free form
/// `2 asinh(|p - q| / sqrt((1 - |p|^2)(1 - |q|^2)))`.
pub fn dist<T: Real>(p: HPoint<T>, q: HPoint<T>) -> T {
    let e = p.euclid_dist(q);
    T::lit(2.0) * (e / (p.defect() * q.defect()).sqrt()).asinh()
}

/// Distance from the origin, `2 atanh |p|`.
pub fn dist_origin<T: Real>(p: HPoint<T>) -> T {
    T::lit(2.0) * p.norm().atanh()
}

/// Euclidean norm of a point at hyperbolic distance `d` from the origin:
/// `(e^d - 1)/(e^d + 1) = tanh(d/2)`.
pub fn dist_origin_inverse<T: Real>(d: T) -> T {
    (d / T::lit(2.0)).tanh()
}

/// Angle `∠(p, q, r)` at `q`, in `[0, π]`.
pub fn angle<T: Real>(p: HPoint<T>, q: HPoint<T>, r: HPoint<T>) -> Result<T> {
    let tiny = T::epsilon() * T::lit(16.0);
    if p.euclid_dist(q) <= tiny || r.euclid_dist(q) <= tiny {
        return Err(GeomError::Degenerate("angle vertex coincides with an endpoint"));
    }
    let m = Isometry::to_origin(q);
    let a = m.apply_c(p.c());
    let b = m.apply_c(r.c());
    let cross = a.re * b.im - a.im * b.re;
    let dot = a.re * b.re + a.im * b.im;
    Ok(cross.abs().atan2(dot))
}

/// Oriented angle at `q` turning from the direction of `p` to the direction of `r`, in `(-π, π]`.
pub fn signed_angle<T: Real>(p: HPoint<T>, q: HPoint<T>, r: HPoint<T>) -> T {
    let m = Isometry::to_origin(q);
    let a = m.apply_c(p.c());
    let b = m.apply_c(r.c());
    (a.re * b.im - a.im * b.re).atan2(a.re * b.re + a.im * b.im)
}

/// Direction (as an angle at `p`) of the geodesic from `p` toward `q`.
pub fn direction<T: Real>(p: HPoint<T>, q: HPoint<T>) -> T {
    let z = Isometry::to_origin(p).apply_c(q.c());
    z.im.atan2(z.re)
}

/// The point at distance `d` from `p` in direction `angle` (measured at `p`).
pub fn offset<T: Real>(p: HPoint<T>, angle: T, d: T) -> HPoint<T> {
    let s = dist_origin_inverse(d);
    let (sn, cs) = angle.sin_cos();
    Isometry::from_origin(p).apply(HPoint::raw(s * cs, s * sn))
}

/// The point at distance `t` from `p` along the geodesic toward `q`.
pub fn along<T: Real>(p: HPoint<T>, q: HPoint<T>, t: T) -> HPoint<T> {
    offset(p, direction(p, q), t)
}

/// Hyperbolic midpoint of the segment `[p, q]`.
pub fn midpoint<T: Real>(p: HPoint<T>, q: HPoint<T>) -> HPoint<T> {
    along(p, q, dist(p, q) / T::lit(2.0))
}

/// Third side from two sides and the included angle. Evaluates
/// `cosh a = cosh b cosh c - sinh b sinh c cos α` in the half-angle form
/// `sinh²(a/2) = sinh²((b-c)/2) + sinh b sinh c sin²(α/2)`.
pub fn law_cosines_side<T: Real>(b: T, c: T, alpha: T) -> T {
    let h = ((b - c) / T::lit(2.0)).sinh();
    let s = (alpha / T::lit(2.0)).sin();
    let v = h * h + b.sinh() * c.sinh() * s * s;
    T::lit(2.0) * v.sqrt().asinh()
}

/// Angle `α` opposite side `a`, given the two adjacent angles `β`, `γ`:
/// `cos α = -cos β cos γ + sin β sin γ cosh a`.
pub fn law_cosines_angle<T: Real>(beta: T, gamma: T, a: T) -> Result<T> {
    let v = -beta.cos() * gamma.cos() + beta.sin() * gamma.sin() * a.cosh();
    let slack = T::default_tol();
    if v > T::one() + slack || v < -T::one() - slack {
        return Err(GeomError::Domain(v.f64()));
    }
    Ok(v.max(-T::one()).min(T::one()).acos())
}

/// Angle of parallelism: `sin α = 1 / cosh a`, evaluated as `atan2(1, sinh a)`.
pub fn parallel_angle<T: Real>(a: T) -> T {
    T::one().atan2(a.sinh())
}

/// An isometry of the disk: `z ↦ (a w + b)/(b̄ w + ā)` with `w = z̄` when `conj` is set
/// and `|a|² - |b|² = 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Isometry<T> {
    a: Complex<T>,
    b: Complex<T>,
    conj: bool,
}

impl<T: Real> Isometry<T> {
    pub fn identity() -> Self {
        Isometry { a: Complex::new(T::one(), T::zero()), b: Complex::new(T::zero(), T::zero()), conj: false }
    }

    /// Builds from raw parameters, normalizing `|a|² - |b|² = 1`.
    pub fn from_params(a: Complex<T>, b: Complex<T>, conj: bool) -> Result<Self> {
        let det = a.norm_sqr() - b.norm_sqr();
        if !(det > T::zero()) {
            return Err(GeomError::Degenerate("Möbius parameters do not preserve the disk"));
        }
        let s = det.sqrt();
        Ok(Isometry { a: a / s, b: b / s, conj })
    }

    pub fn params(&self) -> (Complex<T>, Complex<T>, bool) {
        (self.a, self.b, self.conj)
    }

    pub fn preserves_orientation(&self) -> bool {
        !self.conj
    }

    /// Rotation by `phi` about the origin.
    pub fn rotation(phi: T) -> Self {
        let (s, c) = (phi / T::lit(2.0)).sin_cos();
        Isometry { a: Complex::new(c, s), b: Complex::new(T::zero(), T::zero()), conj: false }
    }

    /// Complex conjugation, the reflection in the real diameter.
    pub fn conjugation() -> Self {
        Isometry { conj: true, ..Isometry::identity() }
    }

    /// The transvection along the diameter through `c` sending the origin to `c`:
    /// `z ↦ (z + c)/(c̄ z + 1)`.
    pub fn from_origin(c: HPoint<T>) -> Self {
        let s = c.defect().sqrt();
        Isometry { a: Complex::new(T::one() / s, T::zero()), b: c.c() / s, conj: false }
    }

    /// Inverse of [`Isometry::from_origin`]: sends `c` to the origin.
    pub fn to_origin(c: HPoint<T>) -> Self {
        Isometry::from_origin(HPoint::raw(-c.x, -c.y))
    }

    /// Rotation by `phi` about `center`.
    pub fn rotation_about(center: HPoint<T>, phi: T) -> Self {
        Isometry::from_origin(center)
            .compose(&Isometry::rotation(phi))
            .compose(&Isometry::to_origin(center))
    }

    pub fn apply_c(&self, z: Complex<T>) -> Complex<T> {
        let w = if self.conj { z.conj() } else { z };
        (self.a * w + self.b) / (self.b.conj() * w + self.a.conj())
    }

    /// Image of a point. The result is not revalidated: images of valid
    /// points are inside the disk up to rounding.
    pub fn apply(&self, p: HPoint<T>) -> HPoint<T> {
        HPoint::from_c(self.apply_c(p.c()))
    }

    pub fn apply_ideal(&self, i: IdealPoint<T>) -> IdealPoint<T> {
        IdealPoint::from_c(self.apply_c(i.c()))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Isometry<T>) -> Isometry<T> {
        let (a2, b2) = if self.conj { (other.a.conj(), other.b.conj()) } else { (other.a, other.b) };
        let a = self.a * a2 + self.b * b2.conj();
        let b = self.a * b2 + self.b * a2.conj();
        let det = (a.norm_sqr() - b.norm_sqr()).sqrt();
        Isometry { a: a / det, b: b / det, conj: self.conj ^ other.conj }
    }

    pub fn inverse(&self) -> Isometry<T> {
        if self.conj {
            Isometry { a: self.a, b: -self.b.conj(), conj: true }
        } else {
            Isometry { a: self.a.conj(), b: -self.b, conj: false }
        }
    }
}

/// The orientation-preserving translation along the geodesic through `p` and `q`
/// sending `p` to `q` (identity when `p = q`).
pub fn translate<T: Real>(p: HPoint<T>, q: HPoint<T>) -> Isometry<T> {
    let back = Isometry::to_origin(p);
    let q1 = back.apply(q);
    Isometry::from_origin(p).compose(&Isometry::from_origin(q1)).compose(&back)
}

/// Reflection through a geodesic.
pub fn reflect<T: Real>(l: &Geodesic<T>) -> Isometry<T> {
    let frame = l.axis_frame();
    frame.inverse().compose(&Isometry::conjugation()).compose(&frame)
}

//! Named constructions: regular horocyclic triangles, spikes, cap domains and
//! the thin convex bodies `K_r` of large width and small area.

use crate::curves::{horocycles_through, intersect, Arc, Curve, Geodesic, HCircle, Horoball, Horocycle};
use crate::dd::Dd;
use crate::error::{GeomError, Result};
use crate::hull::{hconvex_hull, spike_frame, Ball, Body, ConvexBody, HConvexBody};
use crate::measure::{xi, Region};
use crate::model::{angle, dist, HPoint, IdealPoint, Isometry};
use crate::optim::bisect;
use crate::scalar::Real;

fn two<T: Real>() -> T {
    T::lit(2.0)
}

fn third_turn<T: Real>(j: usize) -> T {
    T::TAU() * T::lit(j as f64) / T::lit(3.0)
}

/// The intersection of three horoballs tangent to a common incircle at equally
/// spaced points.
#[derive(Clone, Debug, PartialEq)]
pub struct RegularHorocyclicTriangle<T> {
    pub center: HPoint<T>,
    pub inradius: T,
    pub circumradius: T,
    /// Minimal Lassak width, `inradius + circumradius`.
    pub width: T,
    /// Vertex `j` lies in direction `2πj/3` from the center.
    pub vertices: [HPoint<T>; 3],
    /// Midpoint of the side opposite vertex `j`, where that side touches the incircle.
    pub side_midpoints: [HPoint<T>; 3],
    /// Side `j` runs from vertex `j + 1` to vertex `j + 2` through `side_midpoints[j]`.
    pub sides: [Arc<T>; 3],
    pub horoballs: [Horoball<T>; 3],
    /// Angle at a vertex between an adjacent side and the segment to the center.
    pub aleph: T,
}

/// The regular horocyclic triangle centered at the origin with inradius `r`.
pub fn regular_triangle_from_inradius<T: Real>(r: T) -> Result<RegularHorocyclicTriangle<T>> {
    if !(r > T::zero()) {
        return Err(GeomError::Range { what: "inradius", value: r.f64(), range: "(0, inf)" });
    }
    let s = (r / two::<T>()).tanh();
    let dir = |j: usize| {
        let a = third_turn::<T>(j);
        (a.cos(), a.sin())
    };
    let horoballs: [Horoball<T>; 3] = core::array::from_fn(|j| {
        let (c, sn) = dir(j);
        let z = HPoint::raw(-s * c, -s * sn);
        Horoball::new(Horocycle::at(z, IdealPoint::new(third_turn::<T>(j))))
    });
    let side_midpoints: [HPoint<T>; 3] = core::array::from_fn(|j| {
        let (c, sn) = dir(j);
        HPoint::raw(-s * c, -s * sn)
    });
    let mut vertices = [HPoint::origin(); 3];
    for j in 0..3 {
        let (k, m) = ((j + 1) % 3, (j + 2) % 3);
        let hits = intersect(&Curve::Horocycle(horoballs[k].boundary), &Curve::Horocycle(horoballs[m].boundary))?;
        vertices[j] = *hits
            .points
            .iter()
            .max_by(|a, b| horoballs[j].depth(**a).partial_cmp(&horoballs[j].depth(**b)).unwrap())
            .ok_or(GeomError::Degenerate("horocycles of the triangle do not meet"))?;
    }
    let sides: [Arc<T>; 3] = {
        let mk = |j: usize| Arc::new(Curve::Horocycle(horoballs[j].boundary), vertices[(j + 1) % 3], vertices[(j + 2) % 3]);
        [mk(0)?, mk(1)?, mk(2)?]
    };
    let center = HPoint::origin();
    let circumradius = (0..3).map(|j| dist(center, vertices[j])).sum::<T>() / T::lit(3.0);
    let chord = dist(vertices[0], side_midpoints[1]);
    let aleph = angle(side_midpoints[1], vertices[0], center)? + xi(chord)?;
    Ok(RegularHorocyclicTriangle {
        center,
        inradius: r,
        circumradius,
        width: r + circumradius,
        vertices,
        side_midpoints,
        sides,
        horoballs,
        aleph,
    })
}

impl<T: Real> RegularHorocyclicTriangle<T> {
    pub fn region(&self) -> Region<T> {
        Region::new(self.sides.to_vec()).expect("sides form a closed chain")
    }

    /// The triangle as the h-convex hull of its vertices.
    pub fn body(&self) -> Result<HConvexBody<T>> {
        hconvex_hull(&self.vertices)
    }

    pub fn area(&self) -> T {
        self.region().area()
    }

    pub fn transform(&self, iso: &Isometry<T>) -> Self {
        let map3 = |a: &[HPoint<T>; 3]| core::array::from_fn(|j| iso.apply(a[j]));
        RegularHorocyclicTriangle {
            center: iso.apply(self.center),
            inradius: self.inradius,
            circumradius: self.circumradius,
            width: self.width,
            vertices: map3(&self.vertices),
            side_midpoints: map3(&self.side_midpoints),
            sides: core::array::from_fn(|j| self.sides[j].transform(iso)),
            horoballs: core::array::from_fn(|j| Horoball::new(self.horoballs[j].boundary.transform(iso))),
            aleph: self.aleph,
        }
    }
}

/// The regular horocyclic triangle of minimal width `w`, by bisection on the inradius.
pub fn t_w<T: Real>(w: T) -> Result<RegularHorocyclicTriangle<T>> {
    if !(w > T::zero()) {
        return Err(GeomError::Range { what: "w", value: w.f64(), range: "(0, inf)" });
    }
    let lo = T::lit(1e-6).min(w / T::lit(4.0));
    let hi = w / two::<T>() - T::lit(1e-6).min(w / T::lit(8.0));
    let width = |r: T| regular_triangle_from_inradius(r).map(|t| t.width).unwrap_or(T::nan());
    let tol = T::epsilon() * w * T::lit(4.0);
    let r = bisect(|r| width(r) - w, lo, hi, tol, 200);
    regular_triangle_from_inradius(r)
}

/// Inradius of `T_w`.
pub fn inradius_of_width<T: Real>(w: T) -> Result<T> {
    t_w(w).map(|t| t.inradius)
}

/// The region between a ball and the two horocycles through an outside apex
/// that support the ball.
#[derive(Clone, Debug, PartialEq)]
pub struct Spike<T> {
    pub ball: Ball<T>,
    pub apex: HPoint<T>,
    /// Tangency points; `x1` follows the apex counterclockwise around the ball center.
    pub x1: HPoint<T>,
    pub x2: HPoint<T>,
    /// Horocyclic arcs from the apex to `x1` and to `x2`.
    pub sides: [Arc<T>; 2],
    /// The arc of the ball's circle between the tangency points that faces the apex.
    pub inner: Arc<T>,
    pub region: Region<T>,
}

pub fn spike<T: Real>(ball: Ball<T>, u: HPoint<T>) -> Result<Spike<T>> {
    let f = spike_frame(&ball, u)?;
    let a1 = Arc::new(Curve::Horocycle(f.h1), u, f.x1)?;
    let a2 = Arc::new(Curve::Horocycle(f.h2), u, f.x2)?;
    let inner = Arc::circular(ball.circle(), f.x1, f.x2, false)?;
    let region = Region::new(vec![a2.reversed(), a1, inner])?;
    Ok(Spike { ball, apex: u, x1: f.x1, x2: f.x2, sides: [a1, a2], inner, region })
}

impl<T: Real> Spike<T> {
    /// Closed-spike membership with slack `tol`.
    pub fn contains(&self, x: HPoint<T>, tol: T) -> bool {
        self.region.contains_tol(x, tol)
    }
}

/// The cap domain `C_w(ρ)`: the h-convex hull of `B(p, ρ)` and three points at
/// distance `w - ρ` from `p` in directions `0, 2π/3, 4π/3`, with its sixth
/// `Γ_w(ρ)` cut by the cone between directions `0` and `π/3`, and the
/// horocyclic domain `Δ_w(ρ) ⊆ Γ_w(ρ)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CapDomain<T> {
    pub w: T,
    pub rho: T,
    /// Inradius of `T_w`, the smallest admissible `ρ`.
    pub r: T,
    pub center: HPoint<T>,
    pub q: [HPoint<T>; 3],
    pub m: [HPoint<T>; 3],
    /// Tangency point of the supporting horocycle through `q[0]` on the side of `m[0]`.
    pub v: HPoint<T>,
    /// Angle `∠(m, p, v)`.
    pub alpha: T,
    pub c: HConvexBody<T>,
    pub gamma: Region<T>,
    pub delta: Region<T>,
    /// The horocycle through `q[0]` and `m[0]` whose horoball contains `p`.
    pub h: Horocycle<T>,
    pub delta_minus: T,
    pub delta_plus: T,
}

pub fn cap_domain<T: Real>(w: T, rho: T) -> Result<CapDomain<T>> {
    let r = inradius_of_width(w)?;
    cap_domain_with_inradius(w, r, rho)
}

/// As [`cap_domain`], with the inradius `r` of `T_w` already known.
pub fn cap_domain_with_inradius<T: Real>(w: T, r: T, rho: T) -> Result<CapDomain<T>> {
    let slack = T::lit(1e-12).max(T::epsilon() * T::lit(100.0));
    let half = w / two::<T>();
    if !(rho >= r - slack && rho <= half + slack) {
        return Err(GeomError::Range { what: "rho", value: rho.f64(), range: "[r(T_w), w/2]" });
    }
    let rho = rho.max(r).min(half);
    let p = HPoint::origin();
    let q: [HPoint<T>; 3] = core::array::from_fn(|j| HPoint::polar(w - rho, third_turn::<T>(j)).expect("inside"));
    let m: [HPoint<T>; 3] =
        core::array::from_fn(|j| HPoint::polar(rho, third_turn::<T>(j) + T::FRAC_PI_3()).expect("inside"));
    let ball = Ball::new(p, rho)?;
    let at_half = half - rho <= slack;
    let c = if at_half { HConvexBody::ball(ball) } else { HConvexBody::ball_with_apexes(ball, &q)? };

    let (v, alpha, gamma_arcs) = if at_half {
        let arc = Arc::circular(ball.circle(), q[0], m[0], true)?;
        (q[0], T::FRAC_PI_3(), vec![arc])
    } else {
        let f = spike_frame(&ball, q[0])?;
        let alpha = (T::FRAC_PI_3() - f.psi).max(T::zero());
        let hor = Arc::new(Curve::Horocycle(f.h1), q[0], f.x1)?;
        if alpha <= slack * T::lit(1e3) {
            (f.x1, T::zero(), vec![hor])
        } else {
            (f.x1, alpha, vec![hor, Arc::circular(ball.circle(), f.x1, m[0], true)?])
        }
    };
    let close = gamma_arcs.last().unwrap().end();
    let mut arcs = vec![Arc::new(Curve::Geodesic(Geodesic::through(p, q[0])?), p, q[0])?];
    arcs.extend(gamma_arcs);
    arcs.push(Arc::new(Curve::Geodesic(Geodesic::through(close, p)?), close, p)?);
    let gamma = Region::new(arcs)?;

    let h = *horocycles_through(q[0], m[0])?
        .iter()
        .max_by(|a, b| Horoball::new(**a).depth(p).partial_cmp(&Horoball::new(**b).depth(p)).unwrap())
        .unwrap();
    let delta = Region::new(vec![
        Arc::new(Curve::Geodesic(Geodesic::through(p, q[0])?), p, q[0])?,
        Arc::new(Curve::Horocycle(h), q[0], m[0])?,
        Arc::new(Curve::Geodesic(Geodesic::through(m[0], p)?), m[0], p)?,
    ])?;
    let ell = dist(q[0], m[0]);
    let bulge = xi(ell)?;
    let delta_plus = angle(q[0], m[0], p)? + bulge;
    let delta_minus = angle(m[0], q[0], p)? + bulge;
    Ok(CapDomain { w, rho, r, center: p, q, m, v, alpha, c, gamma, delta, h, delta_minus, delta_plus })
}

/// The angles `(δ−, δ+)` of the arc of `h(ρ)` with `[q, p]` at `q` and with `[m, p]` at `m`.
pub fn delta_angles<T: Real>(w: T, rho: T) -> Result<(T, T)> {
    let r = inradius_of_width(w)?;
    if !(rho > r && rho < w / two::<T>()) {
        return Err(GeomError::Range { what: "rho", value: rho.f64(), range: "(r(T_w), w/2)" });
    }
    let d = cap_domain_with_inradius(w, r, rho)?;
    Ok((d.delta_minus, d.delta_plus))
}

/// The distance `g(r)` along a perpendicular at which a point reaches distance
/// `1/r` from the perpendicular erected at distance `r`, by root-finding.
///
/// The far point sits at `1 - |b| ≈ 2e^{-g}`, so scalars coarser than [`Dd`]
/// solve in `Dd` and round the root.
pub fn g_of_r<T: Real>(r: T) -> Result<T> {
    if !(r > T::zero() && r < T::lit(0.5)) {
        return Err(GeomError::Range { what: "r", value: r.f64(), range: "(0, 1/2)" });
    }
    if T::epsilon().f64() > Dd::EPSILON.f64() {
        return g_root(Dd::of(r.f64())).map(|g| T::lit(g.f64()));
    }
    g_root(r)
}

fn g_root<T: Real>(r: T) -> Result<T> {
    let target = T::one() / r;
    let l2 = Curve::Geodesic(Geodesic::new(
        IdealPoint::new(-T::FRAC_PI_2()),
        IdealPoint::new(T::FRAC_PI_2()),
    )?
    .transform(&Isometry::from_origin(HPoint::polar(r, T::zero())?)));
    let reach = |t: T| -> Result<T> {
        let b1 = HPoint::polar(t, T::FRAC_PI_2())?;
        Ok(crate::curves::dist_to_geodesic(b1, &l2)? - target)
    };
    let hi = (target.sinh() / r.sinh()).acosh() + T::one();
    reach(hi).map_err(|_| GeomError::Range { what: "g(r)", value: hi.f64(), range: "representable distances" })?;
    let tol = T::epsilon() * hi * T::lit(16.0);
    Ok(bisect(|t| reach(t).unwrap_or(T::nan()), T::one(), hi, tol, 400))
}

/// Closed form of `g(r)`: `sinh(1/r) = sinh(r) cosh g`.
pub fn g_closed_form<T: Real>(r: T) -> T {
    ((T::one() / r).sinh() / r.sinh()).acosh()
}

/// The convex hull `K_r` of `B(o, r)` and the two points at distance `g(r)`
/// from the origin on the real axis, with its exact area.
#[derive(Clone, Debug, PartialEq)]
pub struct KBody<T> {
    pub r: T,
    pub g: T,
    pub tips: [HPoint<T>; 2],
    pub body: ConvexBody<T>,
    pub area: T,
}

pub fn k_r<T: Real>(r: T) -> Result<KBody<T>> {
    let g = g_of_r(r)?;
    let cos_a = r.tanh() / g.tanh();
    let a = cos_a.acos();
    let b = (r.sinh() / g.sinh()).asin();
    let p = HPoint::polar(g, T::zero())?;
    let q = HPoint::polar(g, T::PI())?;
    let circle = HCircle::new(HPoint::origin(), r)?;
    let t = |phi: T| circle.point_at(phi);
    let (t1, t2, t3, t4) = (t(a), t(T::PI() - a), t(T::PI() + a), t(-a));
    let seg = |x: HPoint<T>, y: HPoint<T>| -> Result<Arc<T>> {
        let g = if x.norm2() <= y.norm2() { Geodesic::through(x, y)? } else { Geodesic::through(y, x)?.reversed() };
        Arc::new(Curve::Geodesic(g), x, y)
    };
    let region = Region::new(vec![
        seg(p, t1)?,
        Arc::circular(circle, t1, t2, true)?,
        seg(t2, q)?,
        seg(q, t3)?,
        Arc::circular(circle, t3, t4, true)?,
        seg(t4, p)?,
    ])?;
    let area = T::lit(4.0) * (T::FRAC_PI_2() - a - b) + two::<T>() * (T::PI() - two::<T>() * a) * (r.cosh() - T::one());
    let body = ConvexBody::from_region(vec![p, q, t1, t2, t3, t4], region);
    Ok(KBody { r, g, tips: [p, q], body, area })
}

/// Upper bound `4(π/2 − α_{2r})` for the area of `K_r`.
pub fn k_r_area_bound<T: Real>(r: T) -> T {
    T::lit(4.0) * (T::FRAC_PI_2() - crate::model::parallel_angle(two::<T>() * r))
}

/// Apexes `u_1, u_2, u_3` of pairwise disjoint spikes over the incircle
/// `B(p, ϱ)` of an h-convex body `k` of width at least `w > 2ϱ`, each in `k` at
/// distance `w − ϱ` from `p`.
///
/// Three incircle touch points `z_j` surrounding `p` give supporting horoballs
/// `Ξ_j`; the point `x_j` of `k` farthest from the tangent line at `z_j` has
/// distance at least `w` from it, and `u_j` is taken on the segment `[p, x_j]`.
pub fn three_spikes<T: Real>(k: &HConvexBody<T>, w: T) -> Result<[HPoint<T>; 3]> {
    let inc = k.incircle()?;
    let (p, rho) = (inc.ball.center, inc.ball.radius);
    if !(two::<T>() * rho < w) {
        return Err(GeomError::Range { what: "inradius", value: rho.f64(), range: "(0, w/2)" });
    }
    let z = surrounding_triple(p, &inc.touch)?;
    let mut out = [p; 3];
    for j in 0..3 {
        let dir = crate::model::direction(z[j], p);
        let tangent = Geodesic::through(z[j], crate::model::offset(z[j], dir + T::FRAC_PI_2(), T::one()))?;
        let (x, far) = k
            .region()
            .arcs()
            .iter()
            .map(|a| {
                let (t, v) = crate::optim::sampled_max(|t| tangent.distance(a.point_at(t)), T::zero(), T::one(), 32, T::lit(1e-12));
                (a.point_at(t), v)
            })
            .fold((p, T::neg_infinity()), |acc, c| if c.1 > acc.1 { c } else { acc });
        if far < w - T::lit(1e-6) {
            return Err(GeomError::Range { what: "width", value: far.f64(), range: "[w, inf)" });
        }
        out[j] = crate::model::along(p, x, w - rho);
    }
    let ball = Ball::new(p, rho)?;
    let frames = out.iter().map(|u| spike_frame(&ball, *u)).collect::<Result<Vec<_>>>()?;
    for a in 0..3 {
        for b in (a + 1)..3 {
            let gap = (frames[a].theta - frames[b].theta).sin().atan2((frames[a].theta - frames[b].theta).cos()).abs();
            if gap < frames[a].psi + frames[b].psi - T::lit(1e-9) {
                return Err(GeomError::Degenerate("extracted spikes overlap"));
            }
        }
    }
    Ok(out)
}

fn surrounding_triple<T: Real>(p: HPoint<T>, touch: &[HPoint<T>]) -> Result<[HPoint<T>; 3]> {
    let n = touch.len();
    let mut best: Option<([HPoint<T>; 3], T)> = None;
    for a in 0..n {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                let t = [touch[a], touch[b], touch[c]];
                let gap = crate::hull::angular_gap_excess(p, &t);
                let score = -gap;
                if best.as_ref().is_none_or(|(_, s)| score > *s) {
                    best = Some((t, score));
                }
            }
        }
    }
    match best {
        Some((t, s)) if s >= -T::lit(1e-6) => Ok(t),
        _ => Err(GeomError::Degenerate("incircle touch points do not surround the center")),
    }
}

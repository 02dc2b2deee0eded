use std::f64::consts::PI;

use horopal::curves::*;
use horopal::dd::Dd;
use horopal::model::*;
use num_traits::Float;
use proptest::prelude::*;

fn pt() -> impl Strategy<Value = HPoint<f64>> {
    (0.0f64..3.0, -PI..PI).prop_map(|(d, a)| HPoint::polar(d, a).unwrap())
}

fn on_cline(c: &Curve<f64>, p: HPoint<f64>) -> f64 {
    let q = c.cline();
    let s = q.a.abs().max(q.b.norm()).max(q.c.abs());
    q.eval(p.c()).abs() / s
}

#[test]
fn geodesic_signed_distance_matches_fermi() {
    let g = Geodesic::through(HPoint::new(0.2, 0.1).unwrap(), HPoint::new(-0.3, 0.5).unwrap()).unwrap();
    for &(s, t) in &[(0.0, 0.5), (1.0, -0.7), (-2.0, 2.0), (3.0, 0.0)] {
        let p = g.from_fermi(s, t);
        let (s1, t1) = g.fermi(p);
        assert!((s - s1).abs() < 1e-9 && (t - t1).abs() < 1e-9, "{s} {t} -> {s1} {t1}");
        assert!((dist(p, g.foot(p)) - t.abs()).abs() < 1e-9);
    }
}

#[test]
fn geodesic_left_is_positive() {
    let g = Geodesic::<f64>::diameter(0.0);
    assert!(g.signed_distance(HPoint::new(0.0, 0.4).unwrap()) > 0.0);
    assert!((g.signed_distance(HPoint::new(0.0, 0.4).unwrap()) - (1.4f64 / 0.6).ln()).abs() < 1e-14);
}

#[test]
fn reflection_fixes_geodesic() {
    let g = Geodesic::through(HPoint::new(0.2, 0.1).unwrap(), HPoint::new(0.5, 0.6).unwrap()).unwrap();
    let r = reflect(&g);
    let p = HPoint::new(-0.3, 0.2).unwrap();
    let q = r.apply(p);
    assert!((g.signed_distance(p) + g.signed_distance(q)).abs() < 1e-12);
    let on = g.point_at(0.7);
    assert!(dist(r.apply(on), on) < 1e-12);
    assert!(!r.preserves_orientation());
}

#[test]
fn wrong_kind_is_reported() {
    let h = horocycle_at(HPoint::<f64>::origin(), IdealPoint::new(0.0));
    assert!(dist_to_geodesic(HPoint::origin(), &h).is_err());
    assert!(hypercycle(&h, 1.0, Side::Left).is_err());
    let g = geodesic_through(HPoint::origin(), HPoint::new(0.1, 0.0).unwrap()).unwrap();
    assert!(hypercycle(&g, 0.0, Side::Left).is_err());
    assert!(closest_point_on_horocycle(HPoint::origin(), &g).is_err());
}

#[test]
fn horocycle_through_origin() {
    let h = Horocycle::at(HPoint::<f64>::origin(), IdealPoint::new(0.0));
    assert!(h.level().abs() < 1e-15);
    let p = h.point_at(0.8);
    assert!(h.distance(p) < 1e-14);
    // Support circle centered at 1/2 with radius 1/2.
    assert!(((p.c() - num_complex::Complex::new(0.5, 0.0)).norm() - 0.5).abs() < 1e-14);
    // Horocyclic arclength between points at distance d is 2 sinh(d/2).
    let q = h.point_at(-0.3);
    let arc = Arc::new(Curve::Horocycle(h), q, p).unwrap();
    let d = dist(p, q);
    assert!((arc.length() - 2.0 * (d / 2.0).sinh()).abs() < 1e-12);
}

#[test]
fn supporting_horocycle_of_ball() {
    let c = HPoint::new(0.1, -0.2).unwrap();
    let z = offset(c, 1.0, 0.8);
    let hb = supporting_horocycle(c, 0.8, z).unwrap();
    assert!(hb.contains(c, 0.0));
    for k in 0..64 {
        let w = offset(c, k as f64 * PI / 32.0, 0.8);
        assert!(hb.contains(w, 1e-12));
    }
    assert!(supporting_horocycle(c, 0.5, z).is_err());
}

#[test]
fn horocycles_through_pair() {
    let x = HPoint::new(0.1, 0.3).unwrap();
    let y = HPoint::new(-0.4, -0.2).unwrap();
    let [l, r] = horocycles_through(x, y).unwrap();
    for h in [l, r] {
        assert!(h.distance(x) < 1e-12 && h.distance(y) < 1e-12);
    }
    let g = Geodesic::through(x, y).unwrap();
    let xi_l = l.ideal().c();
    let xi_r = r.ideal().c();
    let cross = |z: num_complex::Complex<f64>| {
        let p = HPoint::new(z.re * 0.999, z.im * 0.999).unwrap();
        g.signed_distance(p)
    };
    assert!(cross(xi_l) > 0.0 && cross(xi_r) < 0.0);
}

#[test]
fn intersections_lie_on_both() {
    let a = Curve::Circle(HCircle::new(HPoint::new(0.1, 0.0).unwrap(), 1.0).unwrap());
    let b = Curve::Horocycle(Horocycle::at(HPoint::new(-0.2, 0.3).unwrap(), IdealPoint::new(2.0)));
    let c = Curve::Hypercycle(match hypercycle(&geodesic_through(HPoint::new(0.0, -0.1).unwrap(), HPoint::new(0.3, 0.2).unwrap()).unwrap(), 0.4, Side::Right).unwrap() { Curve::Hypercycle(h) => h, _ => unreachable!() });
    let d = geodesic_through(HPoint::new(-0.5, 0.1).unwrap(), HPoint::new(0.4, 0.05).unwrap()).unwrap();
    let curves = [a, b, c, d];
    let mut found = 0;
    for i in 0..4 {
        for j in 0..4 {
            if i == j {
                assert!(intersect(&curves[i], &curves[j]).is_err());
                continue;
            }
            let x = intersect(&curves[i], &curves[j]).unwrap();
            for p in &x.points {
                assert!(curves[i].distance(*p) < 1e-9, "{i} {j}");
                assert!(curves[j].distance(*p) < 1e-9, "{i} {j}");
                found += 1;
            }
        }
    }
    assert!(found >= 8);
}

#[test]
fn tangent_horocycles_flagged() {
    // Two horocycles tangent at the origin.
    let h1 = Curve::Horocycle(Horocycle::at(HPoint::<f64>::origin(), IdealPoint::new(0.0)));
    let h2 = Curve::Horocycle(Horocycle::at(HPoint::<f64>::origin(), IdealPoint::new(PI)));
    let x = intersect(&h1, &h2).unwrap();
    assert!(x.tangent);
    assert_eq!(x.points.len(), 1);
    assert!(x.points[0].norm() < 1e-9);
}

#[test]
fn circular_arcs() {
    let c = HCircle::new(HPoint::new(0.2, 0.2).unwrap(), 0.5).unwrap();
    let p = c.point_at(0.0);
    let q = c.point_at(PI / 2.0);
    let short = Arc::new(Curve::Circle(c), p, q).unwrap();
    let long = Arc::circular(c, p, q, false).unwrap();
    let circ = 2.0 * PI * 0.5f64.sinh();
    assert!((short.length() - circ / 4.0).abs() < 1e-12);
    assert!((long.length() - 3.0 * circ / 4.0).abs() < 1e-12);
    let far = c.point_at(PI);
    assert!(long.param_of(far) > 0.0 && long.param_of(far) < 1.0);
    assert!(!(short.param_of(far) >= 0.0 && short.param_of(far) <= 1.0));
    let full = Arc::circular(c, p, p, true).unwrap();
    assert!((full.length() - circ).abs() < 1e-12);
    let (_, dmax) = full.farthest(c.center());
    assert!((dmax - 0.5).abs() < 1e-12);
    let z = HPoint::new(-0.5, -0.3).unwrap();
    let (f, df) = full.farthest(z);
    assert!((df - (dist(z, c.center()) + 0.5)).abs() < 1e-9, "{f:?}");
}

#[test]
fn off_curve_endpoints_rejected() {
    let g = geodesic_through(HPoint::<f64>::origin(), HPoint::new(0.3, 0.0).unwrap()).unwrap();
    assert!(Arc::new(g, HPoint::origin(), HPoint::new(0.3, 0.01).unwrap()).is_err());
}

#[test]
fn dd_geodesic_far_from_origin() {
    // A point 40 units out: 1 - |p| is about 8e-18, beyond f64 resolution.
    let d = Dd::of(40.0);
    let p = HPoint::<Dd>::polar(d, Dd::of(0.3)).unwrap();
    let q = HPoint::<Dd>::polar(Dd::of(0.5), Dd::of(2.0)).unwrap();
    assert!((dist(HPoint::origin(), p) - d).abs() < Dd::of(1e-12));
    let g = Geodesic::through(q, p).unwrap();
    assert!(g.distance(p) < Dd::of(1e-12));
    let o = HPoint::<Dd>::origin();
    let f = g.foot(o);
    assert!(g.distance(f) < Dd::of(1e-25));
    assert!((dist(o, f) - g.distance(o)).abs() < Dd::of(1e-25));
}

proptest! {
    #[test]
    fn curves_consistent_with_clines(p in pt(), q in pt(), rho in 0.05f64..2.0, r in 0.05f64..2.0, a in -PI..PI) {
        prop_assume!(dist(p, q) > 1e-2);
        let g = geodesic_through(p, q).unwrap();
        let h = horocycle_at(p, IdealPoint::new(a));
        let hc = hypercycle(&g, rho, Side::Left).unwrap();
        let c = Curve::Circle(HCircle::new(p, r).unwrap());
        for curve in [g, h, hc, c] {
            for u in [-1.0, -0.2, 0.0, 0.6, 1.5] {
                let z = curve.point_at(u);
                if z.norm() < 0.999 {
                    prop_assert!(curve.distance(z) < 1e-7, "{:?}", curve.kind());
                    prop_assert!(on_cline(&curve, z) < 1e-7, "{:?}", curve.kind());
                    prop_assert!((curve.coord(z) - u).abs() < 1e-6 * (1.0 + dist_origin(z).exp()), "{:?}", curve.kind());
                }
            }
        }
    }

    #[test]
    fn foot_is_closest(p in pt(), q in pt(), z in pt(), a in -PI..PI) {
        prop_assume!(dist(p, q) > 1e-2);
        let curves = [geodesic_through(p, q).unwrap(), horocycle_at(p, IdealPoint::new(a)), Curve::Circle(HCircle::new(p, 0.7).unwrap())];
        for c in curves {
            let f = c.foot(z);
            prop_assert!(c.distance(f) < 1e-7);
            prop_assert!((dist(z, f) - c.distance(z)).abs() < 1e-7 * (1.0 + c.distance(z)));
            let u = c.coord(f);
            for du in [-1e-3, 1e-3] {
                prop_assert!(dist(z, c.point_at(u + du)) >= dist(z, f) - 1e-9);
            }
        }
    }

    #[test]
    fn transforms_commute(p in pt(), q in pt(), c in pt(), phi in -PI..PI, refl in any::<bool>()) {
        prop_assume!(dist(p, q) > 1e-2);
        let mut m = Isometry::from_origin(c).compose(&Isometry::rotation(phi));
        if refl { m = m.compose(&Isometry::conjugation()); }
        let g = geodesic_through(p, q).unwrap();
        let curves = [g, horocycle_at(p, IdealPoint::new(phi)), hypercycle(&g, 0.5, Side::Right).unwrap()];
        let z = along(p, q, 0.3);
        for cv in curves {
            let img = cv.transform(&m);
            let d0 = cv.signed_distance(z);
            let d1 = img.signed_distance(m.apply(z));
            prop_assert!((d0 - d1).abs() < 1e-6, "{:?} {} {}", cv.kind(), d0, d1);
        }
    }

    #[test]
    fn arc_samples_on_curve(p in pt(), q in pt(), a in -PI..PI) {
        prop_assume!(dist(p, q) > 1e-2);
        let h = horocycle_at(p, IdealPoint::new(a));
        let hh = match h { Curve::Horocycle(x) => x, _ => unreachable!() };
        let other = hh.point_at(hh.coord(p) + 0.7);
        let arc = Arc::new(h, p, other).unwrap();
        let pts = arc.samples_res(0.01);
        let chord: f64 = pts.windows(2).map(|w| dist(w[0], w[1])).sum();
        prop_assert!((chord - arc.length()).abs() < 1e-4 * arc.length());
        for w in pts.windows(2) {
            prop_assert!(dist(w[0], w[1]) <= 0.01 + 1e-12);
        }
    }
}

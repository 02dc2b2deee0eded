use std::f64::consts::PI;

use horopal::curves::*;
use horopal::measure::*;
use horopal::model::*;
use proptest::prelude::*;

fn ball_region(c: HPoint<f64>, r: f64) -> Region<f64> {
    let circle = HCircle::new(c, r).unwrap();
    let a = circle.point_at(0.0);
    let b = circle.point_at(PI);
    Region::new(vec![Arc::circular(circle, a, b, true).unwrap(), Arc::circular(circle, b, a, true).unwrap()]).unwrap()
}

/// Hyperbolic length of an arc by integrating the line element over a fine subdivision.
fn line_element_length(arc: &Arc<f64>, n: usize) -> f64 {
    let pts: Vec<_> = arc.samples(n);
    pts.windows(2)
        .map(|w| {
            let m = (w[0].c() + w[1].c()) * 0.5;
            2.0 * (w[1].c() - w[0].c()).norm() / (1.0 - m.norm_sqr())
        })
        .sum()
}

#[test]
fn disk_area_closed_form() {
    assert_eq!(disk_area(0.0f64), 0.0);
    assert!((disk_area(1.0f64) - 2.0 * PI * (1f64.cosh() - 1.0)).abs() < 1e-14);
    assert!((disk_area(1.0f64) - 3.41231).abs() < 1e-4);
    for i in 1..40 {
        let r = i as f64 * 0.05;
        assert!(disk_area(r) < 2.0 * PI * r * r);
    }
}

#[test]
fn disk_region_area_and_quadrature() {
    let c = HPoint::new(0.2, -0.1).unwrap();
    let reg = ball_region(c, 1.0);
    assert!((reg.area() - disk_area(1.0)).abs() < 1e-12);
    let q = area_quadrature(&reg, 1_000_000, 7);
    assert!((q.value - disk_area(1.0)).abs() <= q.error, "{q:?}");
    assert!(q.error < 0.01);
    assert_eq!(area_quadrature(&Region::<f64>::empty(), 1000, 0).value, 0.0);
}

#[test]
fn triangle_area_known() {
    // Right angle at the origin, equal legs b chosen so both other angles are π/6:
    // cos β = cosh b · sin γ gives cosh b = cot(π/6).
    let beta = PI / 6.0;
    let b = (beta.cos() / beta.sin()).acosh();
    let p = HPoint::origin();
    let q = HPoint::polar(b, 0.0).unwrap();
    let r = HPoint::polar(b, PI / 2.0).unwrap();
    assert!((angle(p, q, r).unwrap() - beta).abs() < 1e-12);
    assert!((triangle_area(p, q, r).unwrap() - PI / 6.0).abs() < 1e-12);
    let collinear = triangle_area(p, q, HPoint::polar(2.0 * b, 0.0).unwrap()).unwrap();
    assert!(collinear.abs() < 1e-12);
    assert!(triangle_area(p, p, q).is_err());
}

#[test]
fn triangle_quadrature_matches_deficit() {
    let v: [HPoint<f64>; 3] = [HPoint::new(0.1, 0.1).unwrap(), HPoint::new(0.7, 0.0).unwrap(), HPoint::new(-0.2, 0.8).unwrap()];
    let reg = Region::polygon(&v).unwrap();
    let exact = triangle_area(v[0], v[1], v[2]).unwrap();
    assert!((reg.area() - exact).abs() < 1e-12);
    let q = area_quadrature(&reg, 400_000, 3);
    assert!((q.value - exact).abs() <= q.error, "{q:?} vs {exact}");
}

#[test]
fn horocyclic_cap_against_quadrature() {
    let h = Horocycle::at(HPoint::<f64>::origin(), IdealPoint::new(1.0));
    let a = h.point_at(-0.8);
    let b = h.point_at(0.9);
    let arc = Arc::new(Curve::Horocycle(h), a, b).unwrap();
    let chord = Arc::new(Curve::Geodesic(Geodesic::through(b, a).unwrap()), b, a).unwrap();
    let reg = Region::new(vec![arc, chord]).unwrap();
    let exact: f64 = horocyclic_cap_area(dist(a, b));
    assert!((reg.area() - exact).abs() < 1e-12);
    let q = area_quadrature(&reg, 400_000, 11);
    assert!((q.value - exact).abs() <= q.error, "{q:?} vs {exact}");
}

#[test]
fn horocyclic_arc_length_oracle() {
    let h = Horocycle::at(HPoint::<f64>::new(0.1, 0.2).unwrap(), IdealPoint::new(2.0));
    let x = h.point_at(h.coord(HPoint::new(0.1, 0.2).unwrap()));
    // Find y on h at chord distance 1 from x.
    let u0 = h.coord(x);
    let du = 2.0 * (0.5f64).sinh() / h.speed();
    let y = h.point_at(u0 + du);
    assert!((dist(x, y) - 1.0).abs() < 1e-12);
    let arc = Arc::new(Curve::Horocycle(h), x, y).unwrap();
    let l = horocyclic_arc_length(x, y, &arc).unwrap();
    assert!((l - 1.042190).abs() < 1e-6);
    let integrated = line_element_length(&arc, 200_000);
    assert!((l - integrated).abs() < 1e-8, "{l} vs {integrated}");
    assert!((arc.length() - l).abs() < 1e-12);
    assert!(horocyclic_arc_length(x, HPoint::origin(), &arc).is_err());
    assert_eq!(horocyclic_arc_length(x, x, &arc).unwrap(), 0.0);
}

#[test]
fn nested_horocycle_lengths_scale() {
    let xi = IdealPoint::new(0.3);
    let outer = Horocycle::at(HPoint::<f64>::new(-0.2, 0.0).unwrap(), xi);
    for eta in [0.1, 0.5, 1.0] {
        let inner = Horocycle::from_level(xi, outer.level() - eta);
        let a = outer.point_at(-0.4);
        let b = outer.point_at(0.7);
        let (a2, b2) = (inner.foot(a), inner.foot(b));
        let l = Arc::new(Curve::Horocycle(outer), a, b).unwrap().length();
        let l2 = Arc::new(Curve::Horocycle(inner), a2, b2).unwrap().length();
        assert!((l - eta.exp() * l2).abs() < 1e-8);
        assert!((horocyclic_arc_length(a, b, &Arc::new(Curve::Horocycle(outer), a, b).unwrap()).unwrap() - l).abs() < 1e-8);
    }
}

#[test]
fn mu_and_xi_values() {
    // Isosceles triangle with apex angle π/2 and legs 1, measured directly.
    let apex = HPoint::origin();
    let (b, c) = (HPoint::polar(1.0, 0.0).unwrap(), HPoint::polar(1.0, PI / 2.0).unwrap());
    let base_angle = angle(apex, b, c).unwrap();
    assert!((mu(PI / 2.0, 1.0f64).unwrap() - base_angle).abs() < 1e-12);
    assert!((mu(PI / 2.0, 1.0f64).unwrap() - 0.5750062).abs() < 1e-6);
    assert!((mu(0.8, 0.0f64).unwrap() - (PI / 2.0 - 0.4)).abs() < 1e-14);
    assert!(mu(0.0f64, 1.0).is_err() && mu(PI, 1.0f64).is_err());
    assert!((xi(2.0f64).unwrap() - 0.8657695).abs() < 1e-6);
    assert!(xi(1e-9f64).unwrap() < 1e-9);
    let mut last = -1.0;
    for i in 1..50 {
        let l = i as f64 * 0.1;
        let v = xi(l).unwrap();
        assert!(v > last);
        last = v;
        assert!(mu(1.0, l).unwrap() < mu(1.0, l - 0.1).unwrap());
    }
}

#[test]
fn xi_is_the_arc_chord_angle() {
    let h = Horocycle::at(HPoint::<f64>::new(0.3, -0.1).unwrap(), IdealPoint::new(4.0));
    let x = h.point_at(0.2);
    let du = 2.0 * (1.0f64).sinh() / h.speed();
    let y = h.point_at(0.2 + du);
    assert!((dist(x, y) - 2.0).abs() < 1e-12);
    let arc = Arc::new(Curve::Horocycle(h), x, y).unwrap();
    let t = arc.start_direction();
    let c = direction(x, y);
    let a = ((t - c + PI).rem_euclid(2.0 * PI) - PI).abs();
    assert!((a - xi(2.0).unwrap()).abs() < 1e-8, "{a}");
}

#[test]
fn ell0_threshold() {
    let mut last = 0.0;
    for phi in [1.4, 1.0, 0.5, 0.2, 0.05] {
        let l0 = ell0(phi).unwrap();
        assert!(xi(l0 * 0.99).unwrap() < mu(phi, l0 * 0.99).unwrap());
        assert!(xi(l0 * 1.01).unwrap() >= mu(phi, l0 * 1.01).unwrap());
        assert!(l0 > last);
        last = l0;
    }
}

fn crossing_pair(seed: f64) -> (Curve<f64>, Curve<f64>, HPoint<f64>) {
    let x = HPoint::polar(0.3 + 0.2 * seed.sin().abs(), seed).unwrap();
    let h = Horocycle::at(x, IdealPoint::new(seed * 1.7));
    let h2 = Horocycle::at(x, IdealPoint::new(seed * 1.7 + 0.6 + 0.5 * seed.cos().abs()));
    (Curve::Horocycle(h), Curve::Horocycle(h2), x)
}

#[test]
fn omega_area_and_angle() {
    for k in 0..20 {
        let (h, h2, x) = crossing_pair(k as f64 * 0.37 + 0.1);
        let (hh, hh2) = (*h.as_horocycle().unwrap(), *h2.as_horocycle().unwrap());
        let phi = crossing_angle(&hh, &hh2, x);
        let ell = 0.5 * ell0(phi).unwrap();
        let om = omega_region(&h, &h2, x, ell).unwrap();
        let v = om.vertices();
        let (y, yt) = (v[1], v[2]);
        let (y, yt) = if om.arcs()[0].curve().kind() == CurveKind::Horocycle && dist(om.arcs()[0].start(), x) < 1e-12 { (y, yt) } else { (v[2], v[1]) };
        let tri = triangle_area(x, y, yt).unwrap();
        assert!((om.area() - tri).abs() < 1e-6, "{} vs {}", om.area(), tri);
        assert!((angle(y, x, yt).unwrap() - phi).abs() < 1e-8);
        let om2 = omega_region(&h2, &h, x, ell).unwrap();
        assert!((om.area() - om2.area()).abs() < 1e-9);
        let bigger = omega_region(&h, &h2, x, 0.8 * ell0(phi).unwrap()).unwrap();
        assert!(bigger.area() > om.area());
        assert!(omega_region(&h, &h2, x, 1.1 * ell0(phi).unwrap()).is_err());
    }
}

#[test]
fn omega_rejects_tangent() {
    let h1 = Curve::Horocycle(Horocycle::at(HPoint::<f64>::origin(), IdealPoint::new(0.0)));
    let h2 = Curve::Horocycle(Horocycle::at(HPoint::<f64>::origin(), IdealPoint::new(PI)));
    assert!(omega_region(&h1, &h2, HPoint::origin(), 0.1).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]
    #[test]
    fn areas_are_isometry_invariant(c in (0.0f64..1.5, -PI..PI), phi in -PI..PI, refl in any::<bool>()) {
        let cp = HPoint::polar(c.0, c.1).unwrap();
        let mut m = Isometry::from_origin(cp).compose(&Isometry::rotation(phi));
        if refl { m = m.compose(&Isometry::conjugation()); }
        let h = Horocycle::at(HPoint::<f64>::new(0.1, 0.0).unwrap(), IdealPoint::new(2.0));
        let a = h.point_at(-0.5);
        let b = h.point_at(0.6);
        let circ = HCircle::new(HPoint::new(-0.1, -0.1).unwrap(), 0.6).unwrap();
        let reg = Region::new(vec![
            Arc::new(Curve::Horocycle(h), a, b).unwrap(),
            Arc::new(Curve::Geodesic(Geodesic::through(b, circ.center()).unwrap()), b, circ.center()).unwrap(),
            Arc::new(Curve::Geodesic(Geodesic::through(circ.center(), a).unwrap()), circ.center(), a).unwrap(),
        ]).unwrap();
        let img = reg.transform(&m);
        prop_assert!((reg.area() - img.area()).abs() < 1e-9);
        prop_assert!(img.signed_area() > 0.0);
        let inside = reg.vertices().iter().fold(num_complex::Complex::new(0.0, 0.0), |s, p| s + p.c()) / 3.0;
        let ip = HPoint::new(inside.re, inside.im).unwrap();
        prop_assert_eq!(reg.contains(ip), img.contains(m.apply(ip)));
    }

    #[test]
    fn split_additivity(t in 0.2f64..0.8) {
        // Split a disk-sector-like region along a chord.
        let c = HPoint::<f64>::new(0.05, 0.1).unwrap();
        let circle = HCircle::new(c, 0.9).unwrap();
        let a = circle.point_at(0.0);
        let b = circle.point_at(2.0);
        let m = circle.point_at(2.0 * t);
        let seg = |p: HPoint<f64>, q: HPoint<f64>| Arc::new(Curve::Geodesic(Geodesic::through(p, q).unwrap()), p, q).unwrap();
        let whole = Region::new(vec![Arc::circular(circle, a, b, true).unwrap(), seg(b, c), seg(c, a)]).unwrap();
        let p1 = Region::new(vec![Arc::circular(circle, a, m, true).unwrap(), seg(m, c), seg(c, a)]).unwrap();
        let p2 = Region::new(vec![Arc::circular(circle, m, b, true).unwrap(), seg(b, c), seg(c, m)]).unwrap();
        prop_assert!((whole.area() - p1.area() - p2.area()).abs() < 1e-12);
        prop_assert!((whole.area() - 2.0 * (0.9f64.cosh() - 1.0)).abs() < 1e-12);
    }
}

#[test]
fn quadrature_error_bar_covers_the_exact_area() {
    let v: [HPoint<f64>; 3] = [HPoint::new(-0.4, -0.3).unwrap(), HPoint::new(0.6, -0.1).unwrap(), HPoint::new(0.0, 0.7).unwrap()];
    let reg = Region::polygon(&v).unwrap();
    let exact = triangle_area(v[0], v[1], v[2]).unwrap();
    let covered = (0..40).filter(|s| {
        let q = area_quadrature(&reg, 40_000, *s);
        (q.value - exact).abs() <= q.error
    });
    assert!(covered.count() >= 37);
}

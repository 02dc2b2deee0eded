use std::f64::consts::PI;

use horopal::model::*;
use proptest::prelude::*;

fn pt() -> impl Strategy<Value = HPoint<f64>> {
    (0.0f64..4.0, -PI..PI).prop_map(|(d, a)| HPoint::polar(d, a).unwrap())
}

fn iso() -> impl Strategy<Value = Isometry<f64>> {
    (pt(), -PI..PI, any::<bool>()).prop_map(|(c, phi, refl)| {
        let mut m = Isometry::from_origin(c).compose(&Isometry::rotation(phi));
        if refl {
            m = m.compose(&Isometry::conjugation());
        }
        m
    })
}

#[test]
fn distance_from_origin() {
    let p = HPoint::new(0.5, 0.0).unwrap();
    assert!((dist(HPoint::origin(), p) - 3f64.ln()).abs() < 1e-15);
    assert!((dist_origin(p) - 3f64.ln()).abs() < 1e-15);
    assert!((dist_origin_inverse(3f64.ln()) - 0.5).abs() < 1e-15);
}

#[test]
fn rejects_boundary() {
    assert!(HPoint::new(1.0, 0.0).is_err());
    assert!(HPoint::new(0.8, 0.7).is_err());
    assert!(HPoint::new(0.6, 0.79).is_ok());
}

#[test]
fn klein_round_trip() {
    let p = HPoint::new(0.3, -0.6).unwrap();
    let (kx, ky) = p.to_klein();
    let q = HPoint::from_klein(kx, ky).unwrap();
    assert!(p.euclid_dist(q) < 1e-15);
}

#[test]
fn right_triangle_trig() {
    // Legs b, c at a right angle: cosh a = cosh b cosh c.
    let (b, c) = (0.7f64, 1.3f64);
    let a = law_cosines_side(b, c, PI / 2.0);
    assert!((a.cosh() - b.cosh() * c.cosh()).abs() < 1e-13);
    let p = HPoint::origin();
    let q = HPoint::polar(b, 0.0).unwrap();
    let r = HPoint::polar(c, PI / 2.0).unwrap();
    assert!((dist(q, r) - a).abs() < 1e-13);
    let beta = angle(p, q, r).unwrap();
    let gamma = angle(p, r, q).unwrap();
    assert!((law_cosines_angle(beta, gamma, a).unwrap() - PI / 2.0).abs() < 1e-12);
    assert!(law_cosines_angle(1.5, 1.5, 5.0).is_err());
}

#[test]
fn parallel_angle_limits() {
    assert!((parallel_angle(0.0f64) - PI / 2.0).abs() < 1e-15);
    let a = 1.2f64;
    assert!((parallel_angle(a).sin() - 1.0 / a.cosh()).abs() < 1e-15);
}

#[test]
fn degenerate_angle() {
    let p = HPoint::new(0.1, 0.2).unwrap();
    assert!(angle(p, p, HPoint::origin()).is_err());
}

proptest! {
    #[test]
    fn metric_axioms(p in pt(), q in pt(), r in pt()) {
        let (pq, qr, pr) = (dist(p, q), dist(q, r), dist(p, r));
        prop_assert!((pq - dist(q, p)).abs() <= 1e-12 * (1.0 + pq));
        prop_assert!(pr <= pq + qr + 1e-10);
        prop_assert!(dist(p, p) == 0.0);
    }

    #[test]
    fn isometries_preserve_distance(m in iso(), p in pt(), q in pt()) {
        let d0 = dist(p, q);
        let d1 = dist(m.apply(p), m.apply(q));
        prop_assert!((d0 - d1).abs() <= 1e-9 * (1.0 + d0.exp()));
    }

    #[test]
    fn compose_and_inverse(m in iso(), n in iso(), p in pt()) {
        let mn = m.compose(&n);
        let a = mn.apply(p);
        let b = m.apply(n.apply(p));
        prop_assert!(dist(a, b) < 1e-7);
        let back = m.inverse().apply(m.apply(p));
        prop_assert!(dist(back, p) < 1e-7);
    }

    #[test]
    fn offset_lands_at_distance(p in pt(), a in -PI..PI, d in 0.0f64..5.0) {
        let q = offset(p, a, d);
        prop_assert!((dist(p, q) - d).abs() < 1e-8 * (1.0 + dist_origin(q).exp()));
        if d > 1e-3 {
            prop_assert!(((direction(p, q) - a + PI).rem_euclid(2.0 * PI) - PI).abs() < 1e-8);
        }
    }

    #[test]
    fn midpoint_is_equidistant(p in pt(), q in pt()) {
        let m = midpoint(p, q);
        prop_assert!((dist(p, m) - dist(q, m)).abs() < 1e-8);
        prop_assert!((dist(p, m) * 2.0 - dist(p, q)).abs() < 1e-8);
    }

    #[test]
    fn translate_moves_p_to_q(p in pt(), q in pt(), r in pt()) {
        let t = translate(p, q);
        prop_assert!(dist(t.apply(p), q) < 1e-7);
        prop_assert!(t.preserves_orientation());
        prop_assert!((dist(t.apply(r), q) - dist(r, p)).abs() < 1e-6);
    }

    #[test]
    fn angle_sum_below_pi(p in pt(), q in pt(), r in pt()) {
        prop_assume!(dist(p, q) > 1e-3 && dist(q, r) > 1e-3 && dist(p, r) > 1e-3);
        let s = angle(q, p, r).unwrap() + angle(p, q, r).unwrap() + angle(p, r, q).unwrap();
        prop_assert!(s <= PI + 1e-9);
    }
}

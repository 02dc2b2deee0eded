use std::f64::consts::PI;

use horopal::curves::*;
use horopal::hull::*;
use horopal::model::*;
use horopal::width::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_hull(rng: &mut ChaCha8Rng, n: usize, spread: f64) -> (Vec<HPoint<f64>>, HConvexBody<f64>) {
    let pts: Vec<_> = (0..n)
        .map(|_| HPoint::polar(spread * rng.gen::<f64>().sqrt(), rng.gen::<f64>() * 2.0 * PI).unwrap())
        .collect();
    let h = hconvex_hull(&pts).unwrap();
    (pts, h)
}

fn boundary<B: Body<f64>>(k: &B, n_per_arc: usize) -> Vec<HPoint<f64>> {
    k.region().arcs().iter().flat_map(|a| a.samples(n_per_arc)).collect()
}

/// Width with respect to `g` by sampling, or `None` if `g` does not support the samples.
fn sampled_width(samples: &[HPoint<f64>], g: &Geodesic<f64>) -> Option<f64> {
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for p in samples {
        let d = g.signed_distance(*p);
        lo = lo.min(d);
        hi = hi.max(d);
    }
    if lo >= -1e-9 {
        Some(hi)
    } else if hi <= 1e-9 {
        Some(-lo)
    } else {
        None
    }
}

/// Minimal width over tangent lines at boundary samples and over lines pivoting at vertices.
fn brute_force_width<B: Body<f64>>(k: &B) -> f64 {
    let samples = boundary(k, 200);
    let mut best = f64::INFINITY;
    for arc in k.region().arcs() {
        for i in 1..200 {
            let t = i as f64 / 200.0;
            let p = arc.point_at(t);
            let g = Geodesic::through(p, arc.point_at(t + 1e-7)).unwrap();
            if let Some(w) = sampled_width(&samples, &g) {
                best = best.min(w);
            }
        }
    }
    for v in k.region().vertices() {
        for j in 0..1440 {
            let phi = j as f64 * PI / 1440.0;
            let g = Geodesic::through(v, offset(v, phi, 0.5)).unwrap();
            if let Some(w) = sampled_width(&samples, &g) {
                best = best.min(w);
            }
        }
    }
    best
}

#[test]
fn ball_width_is_the_diameter() {
    for (x, y, r) in [(0.0f64, 0.0f64, 0.5f64), (0.3, -0.2, 1.0), (-0.6, 0.1, 0.25)] {
        let b = HConvexBody::ball(Ball::new(HPoint::new(x, y).unwrap(), r).unwrap());
        let w = lassak_width(&b, WidthMethod::Refine).unwrap();
        assert!((w.width - 2.0 * r).abs() < 1e-8, "{} vs {}", w.width, 2.0 * r);
        let z = b.base_ball().unwrap().circle().point_at(0.7);
        let tangent = Geodesic::through(z, b.base_ball().unwrap().circle().point_at(0.7 + 1e-7)).unwrap();
        let wl = width_wrt_line(&b, &Curve::Geodesic(tangent)).unwrap();
        assert!((wl - 2.0 * r).abs() < 1e-6);
    }
}

#[test]
fn segment_on_line_has_zero_width() {
    let a = HPoint::new(-0.3, 0.0).unwrap();
    let b = HPoint::new(0.5, 0.0).unwrap();
    let s = ConvexBody::segment(a, b).unwrap();
    let w = width_wrt_line(&s, &Curve::Geodesic(Geodesic::diameter(0.0))).unwrap();
    assert!(f64::abs(w) < 1e-12);
    let lw = lassak_width(&s, WidthMethod::Refine).unwrap();
    assert_eq!(lw.width, 0.0);
    assert!(lw.certificate.is_none());
    assert!(minimal_strip(&s).is_err());
}

#[test]
fn non_supporting_line_is_rejected() {
    let b = HConvexBody::ball(Ball::new(HPoint::origin(), 0.5).unwrap());
    assert!(width_wrt_line(&b, &Curve::Geodesic(Geodesic::diameter(0.3))).is_err());
}

#[test]
fn width_wrt_line_matches_dense_sampling() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..10 {
        let (_, h) = random_hull(&mut rng, 6, 0.9);
        let w = lassak_width(&h, WidthMethod::Refine).unwrap();
        let cert = w.certificate.unwrap();
        let line = cert.strip.line;
        let samples = boundary(&h, 10_000 / h.region().arcs().len());
        let sampled = sampled_width(&samples, line.as_geodesic().unwrap()).unwrap();
        let exact = width_wrt_line(&h, &line).unwrap();
        assert!((sampled - exact).abs() < 1e-6);
        assert!((exact - w.width).abs() < 1e-9);
    }
}

#[test]
fn refine_matches_brute_force_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..6 {
        let (pts, h) = random_hull(&mut rng, 5, 1.0);
        let w = lassak_width(&h, WidthMethod::Refine).unwrap().width;
        let bf = brute_force_width(&h);
        assert!(w <= bf + 1e-5, "refine {w} above brute force {bf}");
        assert!(bf - w < 2e-3, "refine {w} brute force {bf}");
        if let Ok(c) = convex_hull(&pts) {
            let wc = lassak_width(&c, WidthMethod::Refine).unwrap().width;
            let bfc = brute_force_width(&c);
            assert!(wc <= bfc + 1e-5 && bfc - wc < 2e-3, "convex refine {wc} brute force {bfc}");
        }
    }
}

#[test]
fn strip_contains_body_and_certificate_is_orthogonal() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..15 {
        let (_, h) = random_hull(&mut rng, 7, 1.0);
        let w = lassak_width(&h, WidthMethod::Refine).unwrap();
        let c = w.certificate.unwrap();
        assert!(c.orthogonality_residue < 1e-6, "residue {}", c.orthogonality_residue);
        assert!((dist(c.touch_line, c.touch_hyper) - w.width).abs() < 1e-6);
        let strip = minimal_strip(&h).unwrap();
        for p in boundary(&h, 10_000 / h.region().arcs().len()) {
            assert!(strip.contains(p, 1e-8));
        }
        let hyp = strip.hypercycle;
        let g = strip.line.as_geodesic().unwrap();
        for k in -5..=5 {
            let p = match hyp {
                Curve::Hypercycle(hc) => hc.point_at(k as f64 * 0.4),
                _ => unreachable!(),
            };
            assert!((g.distance(p) - strip.width).abs() < 1e-10);
        }
    }
}

#[test]
fn refine_never_exceeds_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    for _ in 0..20 {
        let (_, h) = random_hull(&mut rng, 6, 1.2);
        let o = lassak_width(&h, WidthMethod::Oracle).unwrap();
        let r = lassak_width(&h, WidthMethod::Refine).unwrap();
        assert!(r.width <= o.width);
        assert!(o.width - r.width <= 2.0 * o.resolution);
    }
}

#[test]
fn width_is_monotone_under_inclusion() {
    let mut rng = ChaCha8Rng::seed_from_u64(25);
    for _ in 0..15 {
        let (pts, big) = random_hull(&mut rng, 8, 1.0);
        let small = hconvex_hull(&pts[..5]).unwrap();
        let ws = lassak_width(&small, WidthMethod::Refine).unwrap();
        let wb = lassak_width(&big, WidthMethod::Refine).unwrap();
        assert!(ws.width <= wb.width + 2.0 * wb.resolution.max(ws.resolution));
    }
}

#[test]
fn width_is_continuous_in_the_generators() {
    let mut rng = ChaCha8Rng::seed_from_u64(26);
    let eps = 1e-3;
    for _ in 0..10 {
        let (pts, h) = random_hull(&mut rng, 6, 1.0);
        let moved: Vec<_> = pts.iter().map(|p| offset(*p, rng.gen::<f64>() * 2.0 * PI, eps * rng.gen::<f64>())).collect();
        let h2 = hconvex_hull(&moved).unwrap();
        let a = lassak_width(&h, WidthMethod::Refine).unwrap();
        let b = lassak_width(&h2, WidthMethod::Refine).unwrap();
        assert!((a.width - b.width).abs() <= 2.0 * eps + a.resolution.max(b.resolution));
    }
}

#[test]
fn symmetric_body_reports_ties() {
    // Hull of a regular triangle's vertices has three equal minimal strips.
    let pts: Vec<_> = (0..3).map(|j| HPoint::polar(1.0, 2.0 * PI * j as f64 / 3.0 + 0.1).unwrap()).collect();
    let h = hconvex_hull(&pts).unwrap();
    let w = lassak_width(&h, WidthMethod::Refine).unwrap();
    assert!(w.ties.len() >= 3, "ties {}", w.ties.len());
    for t in &w.ties {
        assert!((t.strip.width - w.width).abs() < 1e-8);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn width_is_isometry_invariant(seed in 0u64..500, a in -0.5f64..0.5, b in -0.5f64..0.5, phi in 0.0f64..std::f64::consts::TAU, flip in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (_, h) = random_hull(&mut rng, 6, 1.0);
        let mut iso = Isometry::from_origin(HPoint::new(a, b).unwrap()).compose(&Isometry::rotation(phi));
        if flip {
            iso = iso.compose(&Isometry::conjugation());
        }
        let w1 = lassak_width(&h, WidthMethod::Refine).unwrap().width;
        let w2 = lassak_width(&h.transform(&iso), WidthMethod::Refine).unwrap().width;
        prop_assert!((w1 - w2).abs() < 1e-8, "{} vs {}", w1, w2);
    }
}

//! Acceptance criteria, one line each, without the libtest harness: the
//! verdict lines always print; exits nonzero if any criterion fails.

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use horopal::constructions::{cap_domain_with_inradius, t_w};
use horopal::measure::{area_quadrature, disk_area, Region};
use horopal::model::{angle, dist, HPoint, Isometry};
use horopal::width::{lassak_width, WidthMethod};
use horopal_cli::experiments::{monotone, nopal, pal, stability, steinhagen};
use horopal_cli::report::Report;
use horopal_cli::sample::{random_hconvex, trial_rng, uniform_in_ball};
use rand::Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn failed_checks(rep: &Report, names: &[&str]) -> Vec<String> {
    names
        .iter()
        .map(|n| rep.check_named(n).unwrap_or_else(|| panic!("report {} has no check {n}", rep.id)))
        .filter(|c| !c.passed)
        .map(|c| format!("{} ({})", c.name, c.detail))
        .collect()
}

fn from_checks(rep: &Report, names: &[&str]) -> Outcome {
    let bad = failed_checks(rep, names);
    let detail = names.iter().map(|n| format!("{}: {}", n, rep.check_named(n).unwrap().detail)).collect::<Vec<_>>().join("; ");
    if bad.is_empty() {
        outcome(true, detail)
    } else {
        outcome(false, format!("failed {}", bad.join("; ")))
    }
}

fn ac1() -> Outcome {
    let mut rng = trial_rng(1, 0);
    let mut worst_tri: f64 = f64::NEG_INFINITY;
    let mut worst_bound: f64 = f64::NEG_INFINITY;
    for _ in 0..10_000 {
        let pt = |rng: &mut rand_chacha::ChaCha8Rng| {
            let r = 0.99 * rng.gen::<f64>().sqrt();
            let a = rng.gen::<f64>() * 2.0 * PI;
            HPoint::new(r * a.cos(), r * a.sin()).unwrap()
        };
        let (p, q, s) = (pt(&mut rng), pt(&mut rng), pt(&mut rng));
        worst_tri = worst_tri.max(dist(p, s) - dist(p, q) - dist(q, s));
        let e = p.euclid_dist(q);
        let theta = p.norm().max(q.norm());
        let d = dist(p, q);
        worst_bound = worst_bound.max(2.0 * e - d).max(d - 2.0 * e / (1.0 - theta * theta));
    }
    outcome(
        worst_tri <= 1e-12 && worst_bound <= 1e-12,
        format!("10^4 triples; worst triangle excess {worst_tri:.3e}, worst bound excess {worst_bound:.3e}"),
    )
}

fn ac2() -> Outcome {
    let ball = horopal::hull::Ball::new(HPoint::origin(), 1.0).unwrap().region();
    let q = area_quadrature(&ball, 1_000_000, 2);
    let exact = disk_area(1.0f64);
    let disk_ok = (q.value - exact).abs() <= q.error;
    let mut rng = trial_rng(2, 0);
    let mut worst: f64 = 0.0;
    for i in 0..50 {
        let v = loop {
            let v = [uniform_in_ball(&mut rng, 1.5), uniform_in_ball(&mut rng, 1.5), uniform_in_ball(&mut rng, 1.5)];
            let a = [angle(v[1], v[0], v[2]), angle(v[2], v[1], v[0]), angle(v[0], v[2], v[1])];
            if a.iter().all(|x| x.as_ref().is_ok_and(|x| *x > 1e-3)) {
                break v;
            }
        };
        let deficit = PI - angle(v[1], v[0], v[2]).unwrap() - angle(v[2], v[1], v[0]).unwrap() - angle(v[0], v[2], v[1]).unwrap();
        let q = area_quadrature(&Region::polygon(&v).unwrap(), 600_000, 100 + i);
        worst = worst.max((q.value - deficit).abs());
    }
    outcome(
        disk_ok && worst < 1e-4,
        format!("disk: |{:.8} - {:.8}| vs 3 sigma {:.2e}; worst triangle quadrature error {worst:.3e}", q.value, exact, q.error),
    )
}

fn ac3() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for w in [0.5f64, 1.0, 2.0] {
        let t = t_w(w).unwrap();
        let body = t.body().unwrap();
        let lw = lassak_width(&body, WidthMethod::Refine).unwrap().width;
        let r = body.incircle().unwrap().ball.radius;
        let big_r = body.circumcircle().unwrap().radius;
        let c = cap_domain_with_inradius(w, t.inradius, t.inradius).unwrap();
        let q = area_quadrature(&c.delta, 400_000, 3);
        let e1 = (lw - w).abs();
        let e2 = (lw - (r + big_r)).abs();
        let e3 = (6.0 * q.value - t.area()).abs();
        ok &= e1 < 1e-5 && e2 < 1e-8 && e3 <= 6.0 * q.error;
        parts.push(format!("w={w}: |w(T)-w| {e1:.1e}, |w-(r+R)| {e2:.1e}, |6V(Delta)-V(T)| {e3:.1e} <= {:.1e}", 6.0 * q.error));
    }
    outcome(ok, parts.join("; "))
}

fn ac4() -> Outcome {
    let rep = nopal::run(&nopal::DEFAULT_RS).unwrap();
    let a = rep.column("area");
    let half = a[3] < 0.5 * a[0];
    let base = from_checks(&rep, &["width >= 1/r", "area <= 4(pi/2 - alpha(2r))", "area strictly decreasing as r decreases"]);
    let w = rep.column("width");
    outcome(base.pass && half, format!("widths {w:?}; V(K_0.025)/V(K_0.2) = {:.6}; {}", a[3] / a[0], base.detail))
}

fn ac5() -> Outcome {
    let rep = steinhagen::run(500, 8, 0, 1e-4).unwrap();
    from_checks(&rep, &["r(K) >= r(T_w(K))", "T_1 is an equality case"])
}

fn ac6() -> Outcome {
    let rep = pal::run(500, 8, 0, 1e-3, 400_000).unwrap();
    from_checks(&rep, &["V(K) >= V(T_w(K))", "V(B(p, 1/2)) > V(T_1) by 3 sigma"])
}

fn ac7(rep: &Report) -> Outcome {
    from_checks(
        rep,
        &["V(Delta) nondecreasing", "V(Delta) endpoint gap > 3 sigma", "alpha strictly increasing", "delta- < delta+ < pi/2 inside the grid"],
    )
}

fn ac8() -> Outcome {
    let rep = stability::run(1.0, &stability::DEFAULT_EPS).unwrap();
    from_checks(
        &rep,
        &["cap family slope of delta vs eps in [0.4, 0.65]", "cap family delta/sqrt(eps) within 10x", "bump family delta/eps within 3x"],
    )
}

fn ac9(rep: &Report) -> Outcome {
    from_checks(rep, &["V(Gamma \\ Delta) / alpha^2 bounded below", "alpha / (rho - r) bounded below"])
}

fn ac10() -> Outcome {
    let mut worst_gap: f64 = f64::NEG_INFINITY;
    let mut worst_iso: f64 = 0.0;
    for i in 0..100 {
        let mut rng = trial_rng(10, i);
        let (k, _, _) = random_hconvex(&mut rng, 7, 1.5);
        let o = lassak_width(&k, WidthMethod::Oracle).unwrap();
        let r = lassak_width(&k, WidthMethod::Refine).unwrap();
        worst_gap = worst_gap.max((o.width - r.width).abs() / (2.0 * o.resolution));
        let iso = Isometry::from_origin(uniform_in_ball(&mut rng, 1.0)).compose(&Isometry::rotation(rng.gen::<f64>() * 2.0 * PI));
        let moved = k.transform(&iso);
        worst_iso = worst_iso.max((lassak_width(&moved, WidthMethod::Refine).unwrap().width - r.width).abs());
    }
    outcome(
        worst_gap <= 1.0 && worst_iso < 1e-8,
        format!("100 bodies; max |oracle - refine| / (2 resolution) {worst_gap:.3}; max isometry change {worst_iso:.2e}"),
    )
}

fn timed<F: FnOnce() -> Outcome>(f: F) -> (Outcome, Duration) {
    let s = Instant::now();
    let o = f();
    (o, s.elapsed())
}

fn main() {
    let mut all = true;
    let mut line = |n: usize, limit_s: u64, (o, t): (Outcome, Duration)| {
        let in_time = t < Duration::from_secs(limit_s);
        let pass = o.pass && in_time;
        all &= pass;
        let late = if in_time { String::new() } else { format!(" [over the {limit_s}s limit]") };
        println!("AC{n} {}: {} ({:.1}s){late}", if pass { "PASS" } else { "FAIL" }, o.detail, t.as_secs_f64());
    };
    line(1, 5, timed(ac1));
    line(2, 60, timed(ac2));
    line(3, 120, timed(ac3));
    line(4, 120, timed(ac4));
    line(5, 600, timed(ac5));
    line(6, 1200, timed(ac6));
    // The cap-domain grid is shared by the two criteria that read it.
    let s = Instant::now();
    let mono = monotone::run(1.0, 64, 200_000, 0).unwrap();
    let grid_time = s.elapsed();
    let (o7, t7) = timed(|| ac7(&mono));
    line(7, 600, (o7, grid_time + t7));
    line(8, 900, timed(ac8));
    let (o9, t9) = timed(|| ac9(&mono));
    line(9, 600, (o9, grid_time + t9));
    line(10, 600, timed(ac10));
    if !all {
        std::process::exit(1);
    }
}

//! Area versus the regular horocyclic triangle of the same width.

use horopal::constructions::t_w;
use horopal::hull::{Ball, HConvexBody};
use horopal::measure::area_quadrature;
use horopal::model::HPoint;
use rayon::prelude::*;

use crate::error::CliResult;
use crate::experiments::{aligned_hausdorff, compare_with_tw, Comparison};
use crate::report::Report;
use crate::sample::{random_hconvex, trial_rng};
use crate::spec::{BodySpec, Kind};

pub const SPREAD: f64 = 1.5;

/// Area ratios below this are compared with the aligned `T_w` in the report.
pub const NEAR_EQUALITY: f64 = 1.01;

/// Columns: `trial, width, area, area_tw, ratio, hausdorff` where `hausdorff`
/// is the distance to the aligned `T_w` for near-equality trials and NaN otherwise.
pub fn run(trials: usize, n_points: usize, seed: u64, tol: f64, samples: usize) -> CliResult<Report> {
    let mut rep = Report::new("pal", &["trial", "width", "area", "area_tw", "ratio", "hausdorff"]);
    rep.seed = Some(seed);
    rep.param("trials", trials);
    rep.param("points", n_points);
    rep.param("tol", tol);
    rep.param("samples", samples);
    let rows: Vec<CliResult<(Comparison, f64, usize, BodySpec)>> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let mut rng = trial_rng(seed, i as u64);
            let (k, pts, redraws) = random_hconvex(&mut rng, n_points, SPREAD);
            let c = compare_with_tw(&k)?;
            let h = if c.area_ratio() < NEAR_EQUALITY { aligned_hausdorff(&k, &t_w(c.width)?, 1e-3)?.0 } else { f64::NAN };
            Ok((c, h, redraws, BodySpec::from_points(Kind::Hconvex, &pts, Some(format!("pal seed {seed} trial {i}")))))
        })
        .collect();
    let mut worst: Option<(f64, BodySpec)> = None;
    let mut redrawn = 0;
    for (i, row) in rows.into_iter().enumerate() {
        let (c, h, redraws, spec) = row?;
        redrawn += redraws;
        let ratio = c.area_ratio();
        rep.row(vec![i as f64, c.width, c.area, c.area_tw, ratio, h]);
        if worst.as_ref().is_none_or(|(w, _)| ratio < *w) {
            worst = Some((ratio, spec));
        }
    }
    rep.param("redrawn", redrawn);
    if let Some((ratio, spec)) = worst {
        let ok = ratio >= 1.0 - tol;
        let mut detail = format!("min ratio {ratio:.12}");
        if !ok {
            detail.push_str(&format!("; witness {}", spec.to_json()));
        }
        rep.check("V(K) >= V(T_w(K))", ok, detail);
    }
    let b = ball_margin(1.0, samples, seed)?;
    rep.check(
        "V(B(p, 1/2)) > V(T_1) by 3 sigma",
        b.gap > 3.0 * b.sigma,
        format!("gap {:.6e}, sigma {:.3e}", b.gap, b.sigma),
    );
    Ok(rep)
}

/// The ball of width `w` against `T_w`, by quadrature of both regions.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BallMargin {
    pub area_ball: f64,
    pub area_tw: f64,
    /// Quadrature difference `V(B) - V(T_w)`.
    pub gap: f64,
    /// Standard deviation of `gap`.
    pub sigma: f64,
}

pub fn ball_margin(w: f64, samples: usize, seed: u64) -> CliResult<BallMargin> {
    let ball = HConvexBody::ball(Ball::new(HPoint::origin(), w / 2.0)?);
    let t = t_w(w)?;
    let eb = area_quadrature(horopal::hull::Body::region(&ball), samples, seed);
    let et = area_quadrature(&t.region(), samples, seed.wrapping_add(1));
    // Estimate errors are three standard deviations.
    let sigma = ((eb.error / 3.0).powi(2) + (et.error / 3.0).powi(2)).sqrt();
    Ok(BallMargin { area_ball: eb.value, area_tw: et.value, gap: eb.value - et.value, sigma })
}

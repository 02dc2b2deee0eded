//! Inradius versus the regular horocyclic triangle of the same width.

use horopal::constructions::t_w;
use horopal::hull::{Ball, HConvexBody};
use horopal::model::HPoint;
use rayon::prelude::*;

use crate::error::CliResult;
use crate::experiments::{compare_with_tw, Comparison};
use crate::report::Report;
use crate::sample::{random_hconvex, trial_rng};
use crate::spec::{BodySpec, Kind};

pub const SPREAD: f64 = 1.5;

/// Columns: `trial, width, inradius, inradius_tw, ratio, redraws`.
pub fn run(trials: usize, n_points: usize, seed: u64, tol: f64) -> CliResult<Report> {
    let mut rep = Report::new("steinhagen", &["trial", "width", "inradius", "inradius_tw", "ratio", "redraws"]);
    rep.seed = Some(seed);
    rep.param("trials", trials);
    rep.param("points", n_points);
    rep.param("tol", tol);
    let rows: Vec<CliResult<(Comparison, usize, BodySpec)>> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let mut rng = trial_rng(seed, i as u64);
            let (k, pts, redraws) = random_hconvex(&mut rng, n_points, SPREAD);
            Ok((compare_with_tw(&k)?, redraws, BodySpec::from_points(Kind::Hconvex, &pts, Some(format!("steinhagen seed {seed} trial {i}")))))
        })
        .collect();
    let mut worst: Option<(f64, BodySpec)> = None;
    let mut redrawn = 0;
    for (i, row) in rows.into_iter().enumerate() {
        let (c, redraws, spec) = row?;
        redrawn += redraws;
        let ratio = c.inradius_ratio();
        rep.row(vec![i as f64, c.width, c.inradius, c.inradius_tw, ratio, redraws as f64]);
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
        rep.check("r(K) >= r(T_w(K))", ok, detail);
    }
    let t = compare_with_tw(&t_w(1.0)?.body()?)?;
    rep.check("T_1 is an equality case", (t.inradius_ratio() - 1.0).abs() < 1e-6, format!("ratio {:.12}", t.inradius_ratio()));
    let b = compare_with_tw(&HConvexBody::ball(Ball::new(HPoint::origin(), 0.5)?))?;
    rep.check("ball B(o, 1/2) exceeds T_1", b.inradius_ratio() > 1.0, format!("ratio {:.12}", b.inradius_ratio()));
    Ok(rep)
}

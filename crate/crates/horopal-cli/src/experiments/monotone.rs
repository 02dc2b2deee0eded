//! The sixth `Δ_w(ρ)` of the cap domain grows with `ρ`; companion angle and
//! area-ratio tables.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3};

use horopal::constructions::{cap_domain_with_inradius, inradius_of_width, t_w};
use horopal::measure::area_quadrature;
use rayon::prelude::*;

use crate::error::{CliError, CliResult};
use crate::experiments::min_max;
use crate::report::Report;

pub const COLUMNS: [&str; 10] = [
    "rho",
    "area_delta",
    "area_delta_mc",
    "mc_error",
    "area_gamma",
    "alpha",
    "delta_minus",
    "delta_plus",
    "gap_over_alpha2",
    "alpha_over_drho",
];

/// Columns as in [`COLUMNS`]; `mc_error` is three standard deviations and the
/// two ratio columns are NaN at `ρ = r` where `α` vanishes.
pub fn run(w: f64, grid: usize, samples: usize, seed: u64) -> CliResult<Report> {
    if !(w > 0.0) || grid < 2 {
        return Err(CliError::Arg(format!("need w > 0 and grid >= 2, got w = {w}, grid = {grid}")));
    }
    let r = inradius_of_width(w)?;
    let mut rep = Report::new("monotone", &COLUMNS);
    rep.seed = Some(seed);
    rep.param("w", w);
    rep.param("grid", grid);
    rep.param("samples", samples);
    rep.param("r", r);
    let rows: Vec<CliResult<(Vec<f64>, bool)>> = (0..grid)
        .into_par_iter()
        .map(|i| {
            let rho = if i + 1 == grid { w / 2.0 } else { r + (w / 2.0 - r) * i as f64 / (grid - 1) as f64 };
            let c = cap_domain_with_inradius(w, r, rho)?;
            let (vd, vg) = (c.delta.area(), c.gamma.area());
            let mc = area_quadrature(&c.delta, samples, seed.wrapping_add(i as u64));
            let inside = c.delta.arcs().iter().flat_map(|a| a.samples(50)).all(|x| c.gamma.contains_tol(x, 1e-9)) && vd <= vg + 1e-12;
            let (gap_ratio, alpha_ratio) = if i == 0 { (f64::NAN, f64::NAN) } else { ((vg - vd) / (c.alpha * c.alpha), c.alpha / (rho - r)) };
            Ok((vec![rho, vd, mc.value, mc.error, vg, c.alpha, c.delta_minus, c.delta_plus, gap_ratio, alpha_ratio], inside))
        })
        .collect();
    let mut contained = true;
    for row in rows {
        let (row, inside) = row?;
        contained &= inside;
        rep.row(row);
    }
    let n = grid;
    let (vd, mc, err, alpha) = (rep.column("area_delta"), rep.column("area_delta_mc"), rep.column("mc_error"), rep.column("alpha"));
    let (dm, dp) = (rep.column("delta_minus"), rep.column("delta_plus"));

    let worst_step = vd.windows(2).map(|p| p[1] - p[0]).fold(f64::INFINITY, f64::min);
    rep.check("V(Delta) nondecreasing", worst_step >= -1e-12, format!("smallest step {worst_step:.3e}"));
    let gap = mc[n - 1] - mc[0];
    let sigma = ((err[0] / 3.0).powi(2) + (err[n - 1] / 3.0).powi(2)).sqrt();
    rep.check("V(Delta) endpoint gap > 3 sigma", gap > 3.0 * sigma, format!("gap {gap:.6e}, sigma {sigma:.3e}"));
    rep.check("Delta inside Gamma", contained, "boundary samples and areas");
    let vt = t_w(w)?.area();
    let closed = (6.0 * vd[0] - vt).abs();
    let quad = (6.0 * mc[0] - vt).abs();
    rep.check(
        "6 V(Delta(r)) = V(T_w)",
        closed < 1e-9 && quad <= 6.0 * err[0],
        format!("closed form off by {closed:.3e}, quadrature off by {quad:.3e} (error {:.3e})", 6.0 * err[0]),
    );
    let inc = alpha.windows(2).all(|p| p[1] > p[0]);
    rep.check("alpha strictly increasing", inc, format!("alpha(r) = {:.3e}, alpha(w/2) = {:.12}", alpha[0], alpha[n - 1]));
    rep.check(
        "alpha endpoints 0 and pi/3",
        alpha[0].abs() < 1e-9 && (alpha[n - 1] - FRAC_PI_3).abs() < 1e-12,
        format!("{:.3e}, {:.12}", alpha[0], alpha[n - 1]),
    );
    let bad: Vec<usize> = (1..n - 1).filter(|&i| !(dm[i] < dp[i] && dp[i] < FRAC_PI_2)).collect();
    rep.check("delta- < delta+ < pi/2 inside the grid", bad.is_empty(), format!("violations at grid indices {bad:?}"));
    for (col, name) in [("gap_over_alpha2", "V(Gamma \\ Delta) / alpha^2 bounded below"), ("alpha_over_drho", "alpha / (rho - r) bounded below")] {
        let v: Vec<f64> = rep.column(col)[1..].to_vec();
        let (lo, hi) = min_max(&v);
        rep.check(name, lo > 0.0 && lo.is_finite(), format!("min {lo:.6e}, max {hi:.6e}, min/max {:.4}", lo / hi));
    }
    Ok(rep)
}

//! Numerical checks of the extremal properties of regular horocyclic triangles.

use horopal::constructions::{t_w, RegularHorocyclicTriangle};
use horopal::hull::{hausdorff, HConvexBody};
use horopal::model::Isometry;
use horopal::optim::golden_min;
use horopal::width::{lassak_width, WidthMethod};

use crate::error::CliResult;

pub mod monotone;
pub mod nopal;
pub mod pal;
pub mod stability;
pub mod steinhagen;

pub const NAMES: [&str; 5] = ["nopal", "steinhagen", "pal", "monotone", "stability"];

/// A body measured against `T_w` for its own width `w`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Comparison {
    pub width: f64,
    pub inradius: f64,
    pub inradius_tw: f64,
    pub area: f64,
    pub area_tw: f64,
}

impl Comparison {
    pub fn inradius_ratio(&self) -> f64 {
        self.inradius / self.inradius_tw
    }

    pub fn area_ratio(&self) -> f64 {
        self.area / self.area_tw
    }
}

pub fn compare_with_tw(k: &HConvexBody<f64>) -> CliResult<Comparison> {
    let width = lassak_width(k, WidthMethod::Refine)?.width;
    let t = t_w(width)?;
    Ok(Comparison { width, inradius: k.incircle()?.ball.radius, inradius_tw: t.inradius, area: k.area(), area_tw: t.area() })
}

/// Hausdorff distance from `k` to the nearest congruent copy of `t` whose
/// incircle center matches that of `k`: both are centered at the origin and
/// the copy is rotated (and possibly reflected) to minimize the distance.
/// Returns the distance and the rotation angle.
pub fn aligned_hausdorff(k: &HConvexBody<f64>, t: &RegularHorocyclicTriangle<f64>, res: f64) -> CliResult<(f64, f64)> {
    let k0 = k.transform(&Isometry::to_origin(k.incircle()?.ball.center));
    let t0 = t.body()?.transform(&Isometry::to_origin(t.center));
    let third = std::f64::consts::TAU / 3.0;
    let mut best = (f64::INFINITY, 0.0);
    for mirror in [false, true] {
        let base = if mirror { t0.transform(&Isometry::conjugation()) } else { t0.clone() };
        let f = |phi: f64| hausdorff(&k0, &base.transform(&Isometry::rotation(phi)), res);
        let n = 24;
        let step = third / n as f64;
        let grid: Vec<f64> = (0..n).map(|i| f(step * i as f64)).collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|a, b| grid[*a].total_cmp(&grid[*b]));
        // Refine around the two best grid cells.
        for &i in order.iter().take(2) {
            let c = step * i as f64;
            let (phi, v) = golden_min(&f, c - step, c + step, 1e-9);
            if v < best.0 {
                best = (v, phi);
            }
        }
    }
    Ok(best)
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn loglog_slope(x: &[f64], y: &[f64]) -> f64 {
    let lx: Vec<f64> = x.iter().map(|v| v.ln()).collect();
    let ly: Vec<f64> = y.iter().map(|v| v.ln()).collect();
    let n = lx.len() as f64;
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let sxy: f64 = lx.iter().zip(&ly).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = lx.iter().map(|a| (a - mx) * (a - mx)).sum();
    sxy / sxx
}

pub fn min_max(v: &[f64]) -> (f64, f64) {
    v.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), x| (lo.min(*x), hi.max(*x)))
}

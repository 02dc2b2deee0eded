//! Convex bodies of large width and small area: `K_r` for a grid of `r`.

use horopal::constructions::{k_r, k_r_area_bound};
use horopal::width::{lassak_width, WidthMethod};
use horopal::{Dd, Real};

use crate::error::{CliError, CliResult};
use crate::report::Report;

pub const DEFAULT_RS: [f64; 4] = [0.2, 0.1, 0.05, 0.025];

/// Columns: `r, g, width, inv_r, area, area_bound`.
///
/// Computed in double-double: the tips of `K_r` sit at `1 - |x| ≈ 2e^{-g(r)}`
/// with `g(0.025) ≈ 44`.
pub fn run(rs: &[f64]) -> CliResult<Report> {
    let mut rep = Report::new("nopal", &["r", "g", "width", "inv_r", "area", "area_bound"]);
    rep.param("rs", rs.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(";"));
    for &r in rs {
        if !(r > 0.0 && r < 0.5) {
            return Err(CliError::Arg(format!("r = {r} is outside (0, 1/2)")));
        }
    }
    let rows: Vec<CliResult<Vec<f64>>> = {
        use rayon::prelude::*;
        rs.par_iter()
            .map(|&r| {
                let k = k_r(Dd::of(r))?;
                let w = lassak_width(&k.body, WidthMethod::Refine)?.width;
                Ok(vec![r, k.g.f64(), w.f64(), 1.0 / r, k.area.f64(), k_r_area_bound(Dd::of(r)).f64()])
            })
            .collect()
    };
    for row in rows {
        rep.row(row?);
    }
    let (w, inv_r, area, bound) = (rep.column("width"), rep.column("inv_r"), rep.column("area"), rep.column("area_bound"));
    // The minimal strip of K_r has width exactly 1/r.
    let bad: Vec<String> = rs.iter().zip(w.iter().zip(&inv_r)).filter(|(_, (w, i))| **w < **i * (1.0 - 1e-9)).map(|(r, (w, _))| format!("r={r}: w={w}")).collect();
    rep.check("width >= 1/r", bad.is_empty(), if bad.is_empty() { "all rows".to_string() } else { bad.join(", ") });
    let bad: Vec<String> = rs.iter().zip(area.iter().zip(&bound)).filter(|(_, (a, b))| a > b).map(|(r, (a, b))| format!("r={r}: V={a} > {b}")).collect();
    rep.check("area <= 4(pi/2 - alpha(2r))", bad.is_empty(), if bad.is_empty() { "all rows".to_string() } else { bad.join(", ") });
    let mut order: Vec<usize> = (0..rs.len()).collect();
    order.sort_by(|a, b| rs[*b].total_cmp(&rs[*a]));
    let decreasing = order.windows(2).all(|p| area[p[1]] < area[p[0]]);
    rep.check("area strictly decreasing as r decreases", decreasing, format!("areas by decreasing r: {:?}", order.iter().map(|i| area[*i]).collect::<Vec<_>>()));
    Ok(rep)
}

//! Distance to the nearest `T_w` for bodies of width at least `w` whose area
//! exceeds `V(T_w)` by a factor `1 + ε`.
//!
//! Two families are measured. The cap family is `C_w(ρ)` with `ρ` tuned to
//! the area excess; the bump family is the h-convex hull of `T_w` and one point
//! beyond a vertex, pushed out until the area excess is reached. Bump bodies
//! contain `T_w` and so have width at least `w`; cap domains strictly between
//! the endpoints are thinner than `w`, which the `width` column shows.

use horopal::constructions::{cap_domain_with_inradius, t_w, RegularHorocyclicTriangle};
use horopal::hull::{hconvex_hull, HConvexBody};
use horopal::model::{along, dist};
use horopal::optim::bisect;
use horopal::width::{lassak_width, WidthMethod};
use rayon::prelude::*;

use crate::error::{CliError, CliResult};
use crate::experiments::{aligned_hausdorff, loglog_slope, min_max};
use crate::report::Report;

pub const DEFAULT_EPS: [f64; 5] = [0.005, 0.01, 0.02, 0.05, 0.1];

/// Resolution of the Hausdorff evaluation.
const RES: f64 = 1e-3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Cap,
    Bump,
}

/// A member of a family with its tuning parameter (`ρ` or the push distance).
pub fn member(family: Family, t: &RegularHorocyclicTriangle<f64>, w: f64, eps: f64) -> CliResult<(HConvexBody<f64>, f64)> {
    let target = (1.0 + eps) * t.area();
    match family {
        Family::Cap => {
            let area = |rho: f64| cap_domain_with_inradius(w, t.inradius, rho).map(|c| c.c.area());
            let top = area(w / 2.0)?;
            if top < target {
                return Err(CliError::Arg(format!("eps = {eps} exceeds the cap family's largest excess {}", top / t.area() - 1.0)));
            }
            let rho = bisect(|rho| area(rho).map_or(f64::NAN, |a| a - target), t.inradius, w / 2.0, 1e-15, 200);
            Ok((cap_domain_with_inradius(w, t.inradius, rho)?.c, rho))
        }
        Family::Bump => {
            let v = t.vertices[0];
            let reach = dist(t.center, v);
            let body = |s: f64| hconvex_hull(&[t.vertices[0], t.vertices[1], t.vertices[2], along(t.center, v, reach + s)]);
            let mut hi = 0.1;
            while body(hi)?.area() < target {
                hi *= 2.0;
                if hi > 50.0 {
                    return Err(CliError::Arg(format!("eps = {eps} is out of reach for the bump family")));
                }
            }
            let s = bisect(|s| if s > 0.0 { body(s).map_or(f64::NAN, |k| k.area() - target) } else { t.area() - target }, 0.0, hi, 1e-15, 200);
            Ok((body(s)?, s))
        }
    }
}

/// Columns: `family` (0 cap, 1 bump), `eps, param, width, area_excess, delta,
/// delta_over_sqrt_eps, delta_over_eps`.
pub fn run(w: f64, eps: &[f64]) -> CliResult<Report> {
    if !(w > 0.0) || eps.len() < 2 || eps.iter().any(|e| !(*e > 0.0 && *e <= 1.0)) {
        return Err(CliError::Arg("need w > 0 and at least two eps values in (0, 1]".into()));
    }
    let t = t_w(w)?;
    let mut rep = Report::new("stability", &["family", "eps", "param", "width", "area_excess", "delta", "delta_over_sqrt_eps", "delta_over_eps"]);
    rep.param("w", w);
    rep.param("eps", eps.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(";"));
    let jobs: Vec<(Family, f64)> = [Family::Cap, Family::Bump].iter().flat_map(|f| eps.iter().map(move |e| (*f, *e))).collect();
    let rows: Vec<CliResult<Vec<f64>>> = jobs
        .par_iter()
        .map(|&(family, e)| {
            let (k, param) = member(family, &t, w, e)?;
            let (delta, _) = aligned_hausdorff(&k, &t, RES)?;
            let code = if family == Family::Cap { 0.0 } else { 1.0 };
            let width = lassak_width(&k, WidthMethod::Refine)?.width;
            Ok(vec![code, e, param, width, k.area() / t.area() - 1.0, delta, delta / e.sqrt(), delta / e])
        })
        .collect();
    for row in rows {
        rep.row(row?);
    }
    let pick = |code: f64, col: &str| -> Vec<f64> {
        let fam = rep.column("family");
        rep.column(col).into_iter().zip(fam).filter(|(_, f)| *f == code).map(|(v, _)| v).collect()
    };
    let (ce, cd, cs) = (pick(0.0, "eps"), pick(0.0, "delta"), pick(0.0, "delta_over_sqrt_eps"));
    let (be, bd, bl) = (pick(1.0, "eps"), pick(1.0, "delta"), pick(1.0, "delta_over_eps"));
    let slope = loglog_slope(&ce, &cd);
    rep.check("cap family slope of delta vs eps in [0.4, 0.65]", (0.4..=0.65).contains(&slope), format!("slope {slope:.4}"));
    let (lo, hi) = min_max(&cs);
    rep.check("cap family delta/sqrt(eps) within 10x", hi <= 10.0 * lo, format!("min {lo:.6e}, max {hi:.6e}"));
    let (lo, hi) = min_max(&bl);
    rep.check(
        "bump family delta/eps within 3x",
        hi <= 3.0 * lo,
        format!("min {lo:.6e}, max {hi:.6e}, slope {:.4}", loglog_slope(&be, &bd)),
    );
    Ok(rep)
}

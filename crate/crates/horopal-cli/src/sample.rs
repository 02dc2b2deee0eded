use horopal::hull::{hconvex_hull, Body, HConvexBody};
use horopal::model::HPoint;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Independent stream for trial `trial` of a run seeded with `seed`.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// A point uniform (for hyperbolic area) in the ball `B(o, radius)`: the area
/// inside distance `d` grows like `cosh d - 1`.
pub fn uniform_in_ball<R: Rng>(rng: &mut R, radius: f64) -> HPoint<f64> {
    let u: f64 = rng.gen();
    let d = (1.0 + u * (radius.cosh() - 1.0)).acosh();
    HPoint::polar(d, rng.gen::<f64>() * std::f64::consts::TAU).expect("radius is finite")
}

/// The h-convex hull of `n` uniform points of `B(o, radius)`, redrawing
/// degenerate samples. Returns the body, its generators and the number of redraws.
pub fn random_hconvex<R: Rng>(rng: &mut R, n: usize, radius: f64) -> (HConvexBody<f64>, Vec<HPoint<f64>>, usize) {
    let mut redraws = 0;
    loop {
        let pts: Vec<_> = (0..n).map(|_| uniform_in_ball(rng, radius)).collect();
        match hconvex_hull(&pts) {
            Ok(k) if !k.is_degenerate() && pts.iter().all(|p| k.contains_tol(*p, 1e-9)) => return (k, pts, redraws),
            _ => redraws += 1,
        }
    }
}

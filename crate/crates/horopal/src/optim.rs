//! One- and two-dimensional derivative-free solvers.

use crate::scalar::Real;

fn inv_phi<T: Real>() -> T {
    (T::lit(5.0).sqrt() - T::one()) / T::lit(2.0)
}

/// Maximizes a unimodal `f` on `[a, b]` by golden-section search until the
/// bracket is shorter than `tol`. Returns `(argmax, max)`.
pub fn golden_max<T: Real, F: FnMut(T) -> T>(mut f: F, mut a: T, mut b: T, tol: T) -> (T, T) {
    let g = inv_phi::<T>();
    let mut c = b - g * (b - a);
    let mut d = a + g * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    for _ in 0..400 {
        if (b - a).abs() <= tol {
            break;
        }
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = f(d);
        }
    }
    if fc >= fd {
        (c, fc)
    } else {
        (d, fd)
    }
}

/// Minimizing counterpart of [`golden_max`].
pub fn golden_min<T: Real, F: FnMut(T) -> T>(mut f: F, a: T, b: T, tol: T) -> (T, T) {
    let (x, v) = golden_max(|t| -f(t), a, b, tol);
    (x, -v)
}

/// Maximizes `f` over a sampled grid of `n + 1` points on `[a, b]`, then
/// refines around the best sample by golden section; suited to functions
/// with a single interior maximum that may also peak at an endpoint.
pub fn sampled_max<T: Real, F: FnMut(T) -> T>(mut f: F, a: T, b: T, n: usize, tol: T) -> (T, T) {
    let n = n.max(2);
    let step = (b - a) / T::lit(n as f64);
    let mut best = (a, f(a));
    let mut best_i = 0;
    for i in 1..=n {
        let t = if i == n { b } else { a + step * T::lit(i as f64) };
        let v = f(t);
        if v > best.1 {
            best = (t, v);
            best_i = i;
        }
    }
    let lo = if best_i == 0 { a } else { a + step * T::lit(best_i as f64 - 1.0) };
    let hi = if best_i == n { b } else { a + step * T::lit(best_i as f64 + 1.0) };
    let r = golden_max(&mut f, lo, hi, tol);
    if r.1 > best.1 {
        r
    } else {
        best
    }
}

/// Maximizes a quasi-concave `f(x, y)` over the box by nested golden sections.
pub fn nested_golden_max<T: Real, F: Fn(T, T) -> T>(f: F, x: (T, T), y: (T, T), tol: T) -> ((T, T), T) {
    let inner = |xv: T| golden_max(|yv| f(xv, yv), y.0, y.1, tol);
    let (bx, _) = golden_max(|xv| inner(xv).1, x.0, x.1, tol);
    let (by, v) = inner(bx);
    ((bx, by), v)
}

/// Root of a continuous `f` with a sign change on `[a, b]` by bisection.
pub fn bisect<T: Real, F: FnMut(T) -> T>(mut f: F, mut a: T, mut b: T, tol: T, max_iter: usize) -> T {
    let fa = f(a);
    for _ in 0..max_iter {
        let m = (a + b) / T::lit(2.0);
        if (b - a).abs() <= tol {
            return m;
        }
        let fm = f(m);
        if (fm < T::zero()) == (fa < T::zero()) {
            a = m;
        } else {
            b = m;
        }
    }
    (a + b) / T::lit(2.0)
}

//! Bracketing root finders.
//!
//! [`brent`] refines a single sign-change bracket; [`scan_roots`] pre-scans a
//! uniform grid for sign changes and refines every bracket it finds.

use alloc::vec::Vec;

/// Stopping rule for [`brent`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Convergence {
    /// Stop once `|f(x)| <= f_tol`.
    pub f_tol: f64,
    /// Stop once the bracket is narrower than this (absolute, in x units).
    pub x_tol: f64,
    pub max_iterations: usize,
}

impl Default for Convergence {
    fn default() -> Self {
        Convergence { f_tol: 1e-10, x_tol: 0.0, max_iterations: 80 }
    }
}

/// A refined root.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Root {
    pub x: f64,
    pub fx: f64,
    pub iterations: usize,
    pub converged: bool,
}

/// Brent's method (inverse quadratic interpolation with bisection fallback)
/// on `[lo, hi]`. Returns `None` when the end points do not bracket a sign
/// change.
pub fn brent<F>(mut f: F, lo: f64, hi: f64, conv: &Convergence) -> Option<Root>
where
    F: FnMut(f64) -> f64,
{
    let (mut a, mut b) = (lo, hi);
    let (mut fa, mut fb) = (f(a), f(b));
    if !fa.is_finite() || !fb.is_finite() {
        return None;
    }
    if fa == 0.0 {
        return Some(Root { x: a, fx: fa, iterations: 0, converged: true });
    }
    if fb == 0.0 {
        return Some(Root { x: b, fx: fb, iterations: 0, converged: true });
    }
    if (fa > 0.0) == (fb > 0.0) {
        return None;
    }

    let (mut c, mut fc) = (a, fa);
    let mut d = b - a;
    let mut e = d;
    for iter in 0..conv.max_iterations {
        if (fb > 0.0) == (fc > 0.0) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol1 = 2.0 * f64::EPSILON * b.abs() + 0.5 * conv.x_tol;
        let xm = 0.5 * (c - b);
        if fb.abs() <= conv.f_tol || xm.abs() <= tol1 || fb == 0.0 {
            return Some(Root { x: b, fx: fb, iterations: iter, converged: true });
        }
        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                let qa = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * xm * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            }
            p = p.abs();
            let min1 = 3.0 * xm * q - (tol1 * q).abs();
            let min2 = (e * q).abs();
            if 2.0 * p < min1.min(min2) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += if d.abs() > tol1 { d } else { tol1.copysign(xm) };
        fb = f(b);
        if !fb.is_finite() {
            return None;
        }
    }
    Some(Root { x: b, fx: fb, iterations: conv.max_iterations, converged: fb.abs() <= conv.f_tol })
}

/// Scans `[lo, hi]` on `intervals` uniform cells and refines every sign
/// change with [`brent`]. `f` may return `None` where it is undefined; cells
/// touching an undefined node are skipped. Roots come back sorted and
/// deduplicated.
pub fn scan_roots<F>(mut f: F, lo: f64, hi: f64, intervals: usize, conv: &Convergence) -> Vec<Root>
where
    F: FnMut(f64) -> Option<f64>,
{
    let intervals = intervals.max(1);
    let node = |i: usize| {
        if i == intervals {
            hi
        } else {
            lo + (hi - lo) * (i as f64) / (intervals as f64)
        }
    };
    let values: Vec<Option<f64>> = (0..=intervals).map(|i| f(node(i)).filter(|v| v.is_finite())).collect();

    let mut roots: Vec<Root> = Vec::new();
    for i in 0..intervals {
        let (x0, x1) = (node(i), node(i + 1));
        let (Some(f0), Some(f1)) = (values[i], values[i + 1]) else {
            continue;
        };
        if f0 == 0.0 {
            roots.push(Root { x: x0, fx: 0.0, iterations: 0, converged: true });
            continue;
        }
        if f1 == 0.0 || (f0 > 0.0) == (f1 > 0.0) {
            if f1 == 0.0 && i + 1 == intervals {
                roots.push(Root { x: x1, fx: 0.0, iterations: 0, converged: true });
            }
            continue;
        }
        // The closure is total inside a cell whose end points are defined.
        let refined = brent(|x| f(x).unwrap_or(f64::NAN), x0, x1, conv);
        if let Some(r) = refined {
            roots.push(r);
        }
    }
    roots.sort_by(|a, b| a.x.total_cmp(&b.x));
    roots.dedup_by(|a, b| (a.x - b.x).abs() <= 1e-12 * (1.0 + b.x.abs()));
    roots
}

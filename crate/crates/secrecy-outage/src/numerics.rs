//! Quadrature and root refinement used by the bound engine.
//!
//! Gauss-Legendre rules of order 15 and 31 are computed once at first use by
//! Newton iteration on the Legendre recurrence and cached. Integration is
//! adaptive: each interval is evaluated with both rules and with the
//! high-order rule on its two halves; the error estimate is the worse of the
//! two disagreements. The rule pair alone can agree by accident on boundary
//! layers far narrower than the interval, so acceptance always requires the
//! h-refinement check too. Intervals that miss their share of the tolerance
//! are bisected. Root refinement is plain bisection on a sign change.

use std::sync::OnceLock;

use crate::error::Error;
use crate::Result;

/// Absolute tolerance used by the bound and outage integrals.
pub const DEFAULT_QUAD_TOL: f64 = 1e-10;

/// Absolute x-tolerance for root refinement.
pub const ROOT_XTOL: f64 = 1e-12;

const LOW_ORDER: usize = 15;
const HIGH_ORDER: usize = 31;
const MAX_INTERVALS: usize = 20_000;

/// Nodes and weights of the `n`-point Gauss-Legendre rule on `[-1, 1]`.
///
/// Newton iteration on `P_n` from the Chebyshev-like initial guess; converges
/// to machine precision in a handful of steps for the orders used here.
fn legendre_nodes(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    let nf = n as f64;
    for k in 0..n {
        let mut x = (std::f64::consts::PI * (k as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0_f64, x);
            for j in 2..=n {
                let jf = j as f64;
                let p2 = ((2.0 * jf - 1.0) * x * p1 - (jf - 1.0) * p0) / jf;
                p0 = p1;
                p1 = p2;
            }
            dp = nf * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() <= 1e-15 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        out.push((x, w));
    }
    out
}

fn rule(order: usize) -> &'static [(f64, f64)] {
    static LOW: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    static HIGH: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    match order {
        LOW_ORDER => LOW.get_or_init(|| legendre_nodes(LOW_ORDER)),
        HIGH_ORDER => HIGH.get_or_init(|| legendre_nodes(HIGH_ORDER)),
        _ => unreachable!("only the two cached orders are used"),
    }
}

fn fixed_quad(f: &dyn Fn(f64) -> f64, a: f64, b: f64, order: usize) -> f64 {
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let mut acc = 0.0;
    for &(x, w) in rule(order) {
        acc += w * f(mid + half * x);
    }
    acc * half
}

/// Adaptive integral of `f` over `[a, b]` to absolute tolerance `abs_tol`.
///
/// Each interval gets a tolerance share proportional to its width; intervals
/// that cannot be subdivided further (width at rounding level, or the global
/// interval budget is exhausted) are accepted with their residual recorded.
/// Fails if the accumulated forced residual exceeds `abs_tol`.
pub fn integrate(f: &dyn Fn(f64) -> f64, a: f64, b: f64, abs_tol: f64) -> Result<f64> {
    if !(a.is_finite() && b.is_finite()) || a >= b {
        return Err(Error::InvalidParameter {
            name: "integration interval",
            value: b - a,
            constraint: "finite with a < b",
        });
    }
    let span = b - a;
    let mut stack = vec![(a, b)];
    let mut total = 0.0;
    let mut forced_residual = 0.0;
    let mut processed = 0usize;
    while let Some((lo, hi)) = stack.pop() {
        processed += 1;
        let i_low = fixed_quad(f, lo, hi, LOW_ORDER);
        let i_high = fixed_quad(f, lo, hi, HIGH_ORDER);
        let share = abs_tol * ((hi - lo) / span).max(f64::MIN_POSITIVE);
        let mid = 0.5 * (lo + hi);
        let splittable = mid > lo && mid < hi && processed < MAX_INTERVALS;
        if !splittable {
            total += i_high;
            let err = (i_high - i_low).abs();
            if err > share {
                forced_residual += err;
            }
            continue;
        }
        let composite = fixed_quad(f, lo, mid, HIGH_ORDER) + fixed_quad(f, mid, hi, HIGH_ORDER);
        let err = (i_high - i_low).abs().max((i_high - composite).abs());
        if err <= share {
            total += composite;
        } else {
            stack.push((lo, mid));
            stack.push((mid, hi));
        }
    }
    if forced_residual > abs_tol {
        return Err(Error::NumericFailure {
            context: "adaptive quadrature",
            residual: forced_residual,
        });
    }
    Ok(total)
}

/// Integral over a partition: `integrate` on each `[edges[i], edges[i+1]]`.
///
/// Callers pass interior kink locations as edges so the adaptive scheme never
/// straddles a derivative jump. Edges must be strictly increasing.
pub fn integrate_split(f: &dyn Fn(f64) -> f64, edges: &[f64], abs_tol: f64) -> Result<f64> {
    if edges.len() < 2 {
        return Err(Error::EmptyRequest("integration needs at least two edges"));
    }
    let pieces = (edges.len() - 1) as f64;
    let mut total = 0.0;
    for pair in edges.windows(2) {
        total += integrate(f, pair[0], pair[1], abs_tol / pieces)?;
    }
    Ok(total)
}

/// Bisection for a root of `f` in `[lo, hi]`, assuming a sign change.
///
/// Stops when the bracket width falls below `max(xtol, ulp)` scaled to the
/// bracket location. Endpoints that are exact zeros are returned directly.
pub fn bisect(f: &dyn Fn(f64) -> f64, lo: f64, hi: f64, xtol: f64) -> Result<f64> {
    let mut lo = lo;
    let mut hi = hi;
    let mut flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() {
        return Err(Error::NumericFailure {
            context: "bisection bracket",
            residual: flo.abs().min(fhi.abs()),
        });
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let floor = xtol.max(4.0 * f64::EPSILON * mid.abs());
        if hi - lo <= floor || mid <= lo || mid >= hi {
            return Ok(mid);
        }
        let fmid = f(mid);
        if fmid == 0.0 {
            return Ok(mid);
        }
        if fmid.signum() == flo.signum() {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// All roots of `f` bracketed by sign changes on a monotone grid.
///
/// Grid points where `f` is exactly zero count as roots. Adjacent duplicates
/// closer than `10 * xtol` (relative to local scale) are merged.
pub fn sign_change_roots(f: &dyn Fn(f64) -> f64, grid: &[f64], xtol: f64) -> Vec<f64> {
    let mut roots = Vec::new();
    if grid.len() < 2 {
        return roots;
    }
    let values: Vec<f64> = grid.iter().map(|&x| f(x)).collect();
    for i in 0..grid.len() - 1 {
        let (fa, fb) = (values[i], values[i + 1]);
        if fa == 0.0 {
            roots.push(grid[i]);
        } else if fb != 0.0 && fa.signum() != fb.signum() {
            if let Ok(r) = bisect(f, grid[i], grid[i + 1], xtol) {
                roots.push(r);
            }
        }
    }
    if values[grid.len() - 1] == 0.0 {
        roots.push(grid[grid.len() - 1]);
    }
    roots.sort_by(|a, b| a.partial_cmp(b).expect("roots are finite"));
    roots.dedup_by(|a, b| {
        let scale = 1.0_f64.max(a.abs()).max(b.abs());
        (*a - *b).abs() <= 10.0 * xtol * scale
    });
    roots
}

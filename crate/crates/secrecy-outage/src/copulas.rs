//! Copula evaluation and bound-achieving discrete couplings.
//!
//! ## Pointwise values
//!
//! The pointwise extremes over all couplings are `W(a, b) = max(a + b - 1, 0)`
//! and `M(a, b) = min(a, b)`, with the product `Π(a, b) = ab` in between; the
//! dual of a copula is `C̄(a, b) = a + b - C(a, b)`.
//!
//! ## Achieving couplings
//!
//! [`build_achieving_coupling`] discretizes both marginals into `n` equal-mass
//! atoms at the quantile midpoints `F⁻¹((i + ½) / n)` and permutes the `ỹ`
//! atoms against the `x̃` atoms. Outage regions are lower-left sets, so with
//! atoms sorted ascending the inside indicator `inside(i, j)` is monotone:
//! shrinking either index keeps a pair inside. Over such a staircase the
//! largest simultaneous set of inside pairs has the antidiagonal form
//! `(x_i, y_{k-1-i})`, `i < k`, and feasibility of `k` is monotone, so the
//! maximal `k` comes from a binary search. Pairing the remaining atoms
//! identically cannot add inside pairs (that would exceed the maximum
//! matching), so the plan's empirical outage is exactly `k / n` and
//! approaches the sharp upper bound as `n` grows. The lower construction
//! mirrors this: it antidiagonally pairs the largest atoms *outside* the
//! region and the identity remainder stays inside, giving `(n - m) / n`.

use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::bounds::{Direction, ScenarioTag};
use crate::error::Error;
use crate::marginals::TransformedPair;
use crate::montecarlo::{open_unit, outage_event};
use crate::Result;

/// Smallest atom count that resolves the bounds meaningfully.
pub const MIN_ATOMS: usize = 100;

/// The three reference copulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CopulaKind {
    /// Countermonotone extreme `W(a, b) = max(a + b - 1, 0)`.
    FrechetLowerW,
    /// Comonotone extreme `M(a, b) = min(a, b)`.
    FrechetUpperM,
    /// Independence `Π(a, b) = ab`.
    ProductPi,
}

fn check_unit(a: f64, b: f64) -> Result<()> {
    if (0.0..=1.0).contains(&a) && (0.0..=1.0).contains(&b) {
        Ok(())
    } else {
        Err(Error::CopulaDomain { a, b })
    }
}

/// Copula value `C(a, b)` on the unit square.
pub fn copula_value(kind: CopulaKind, a: f64, b: f64) -> Result<f64> {
    check_unit(a, b)?;
    Ok(match kind {
        CopulaKind::FrechetLowerW => (a + b - 1.0).max(0.0),
        CopulaKind::FrechetUpperM => a.min(b),
        CopulaKind::ProductPi => a * b,
    })
}

/// Dual value `C̄(a, b) = a + b - C(a, b)`: the probability that at least one
/// marginal event occurs under the coupling `C`.
pub fn dual_value(kind: CopulaKind, a: f64, b: f64) -> Result<f64> {
    check_unit(a, b)?;
    Ok(match kind {
        CopulaKind::FrechetLowerW => (a + b).min(1.0),
        CopulaKind::FrechetUpperM => a.max(b),
        CopulaKind::ProductPi => a + b - a * b,
    })
}

/// A discrete coupling: `n_atoms` equal-mass pairs
/// `(x_atoms[i], y_atoms[assignment[i]])`.
#[derive(Debug, Clone)]
pub struct CouplingPlan {
    /// Number of atoms per marginal.
    pub n_atoms: usize,
    /// `x̃` atoms at quantile midpoints, ascending.
    pub x_atoms: Vec<f64>,
    /// `ỹ` atoms at quantile midpoints, ascending.
    pub y_atoms: Vec<f64>,
    /// Permutation pairing `x_atoms[i]` with `y_atoms[assignment[i]]`.
    pub assignment: Vec<usize>,
}

impl CouplingPlan {
    /// Mass of each atom pair.
    #[must_use]
    pub fn mass(&self) -> f64 {
        1.0 / self.n_atoms as f64
    }

    /// Fraction of the plan's mass inside the scenario's outage region.
    #[must_use]
    pub fn empirical_outage(&self, scenario: ScenarioTag, pair: &TransformedPair) -> f64 {
        let inside = (0..self.n_atoms)
            .filter(|&i| {
                outage_event(scenario, pair, self.x_atoms[i], self.y_atoms[self.assignment[i]])
            })
            .count();
        inside as f64 / self.n_atoms as f64
    }
}

/// Largest `k` for which `feasible` holds, given `feasible(0)` and
/// monotonicity (`feasible(k+1)` implies `feasible(k)`).
fn max_feasible(n: usize, feasible: impl Fn(usize) -> bool) -> usize {
    let mut lo = 0usize;
    let mut hi = n;
    while lo < hi {
        let mid = lo + (hi - lo).div_ceil(2);
        if feasible(mid) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    lo
}

/// Discrete coupling whose empirical outage attains the requested bound in
/// the `n_atoms → ∞` limit. Needs at least [`MIN_ATOMS`] atoms.
pub fn build_achieving_coupling(
    pair: &TransformedPair,
    scenario: ScenarioTag,
    direction: Direction,
    n_atoms: usize,
) -> Result<CouplingPlan> {
    if n_atoms < MIN_ATOMS {
        return Err(Error::Resolution {
            min: MIN_ATOMS,
            got: n_atoms,
        });
    }
    let n = n_atoms;
    let nf = n as f64;
    let x_atoms: Vec<f64> = (0..n).map(|i| pair.xt.quantile((i as f64 + 0.5) / nf)).collect();
    let y_atoms: Vec<f64> = (0..n).map(|i| pair.yt.quantile((i as f64 + 0.5) / nf)).collect();
    let inside = |xi: usize, yi: usize| outage_event(scenario, pair, x_atoms[xi], y_atoms[yi]);

    let mut assignment: Vec<usize> = (0..n).collect();
    match direction {
        Direction::Upper => {
            let k = max_feasible(n, |k| (0..k).all(|i| inside(i, k - 1 - i)));
            for i in 0..k {
                assignment[i] = k - 1 - i;
            }
        }
        Direction::Lower => {
            let m = max_feasible(n, |m| (0..m).all(|j| !inside(n - m + j, n - 1 - j)));
            for i in (n - m)..n {
                assignment[i] = 2 * n - m - 1 - i;
            }
        }
    }

    Ok(CouplingPlan {
        n_atoms: n,
        x_atoms,
        y_atoms,
        assignment,
    })
}

/// Draw `count` pairs from the plan (atom index uniform, then the paired
/// values). Zero draws are refused rather than silently returning nothing.
pub fn sample_coupling(plan: &CouplingPlan, count: usize, seed: u64) -> Result<Vec<(f64, f64)>> {
    if count == 0 {
        return Err(Error::EmptyRequest("sample_coupling with count = 0"));
    }
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let n = plan.n_atoms as f64;
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let idx = ((open_unit(&mut rng) * n) as usize).min(plan.n_atoms - 1);
        out.push((plan.x_atoms[idx], plan.y_atoms[plan.assignment[idx]]));
    }
    Ok(out)
}

//! Outage-constrained secrecy rates.
//!
//! Each curve `ε(Rs)` (best case, worst case, independent gains) is strictly
//! increasing in the secrecy rate: raising `Rs` widens both thresholds and
//! weakens the eavesdropper margin simultaneously. The ε-outage secrecy rate
//! is the largest `Rs` keeping the curve at or below a target, found by
//! bracketing and bisection. The infimum of the curve over all rates is its
//! `Rs → 0` limit; targets below that limit admit no positive rate.

use crate::bounds::ScenarioTag;
use crate::error::Error;
use crate::marginals::ChannelParams;
use crate::rayleigh::{limit_rs0, scenario_outage, LimitVariant};
use crate::Result;
use std::fmt;
use std::str::FromStr;

/// Rate beyond which the search declares the target unbounded.
const MAX_RATE: f64 = 64.0;
/// Absolute tolerance on the bisected rate.
const RATE_TOL: f64 = 1e-9;
/// Secrecy rate standing in for `Rs → 0` when no closed limit exists.
const NEAR_ZERO_RATE: f64 = 1e-8;

/// Which outage curve a query targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Curve {
    /// Best case over couplings.
    Lower,
    /// Worst case over couplings.
    Upper,
    /// Independent gains.
    Independent,
}

impl Curve {
    /// Stable lowercase label used by the CLI and sweep headers.
    #[must_use]
    pub fn name(&self) -> &'static str {
        match self {
            Curve::Lower => "lower",
            Curve::Upper => "upper",
            Curve::Independent => "indep",
        }
    }

    /// All curves, in output-column order.
    pub const ALL: [Curve; 3] = [Curve::Lower, Curve::Upper, Curve::Independent];
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Curve {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lower" => Ok(Curve::Lower),
            "upper" => Ok(Curve::Upper),
            "indep" => Ok(Curve::Independent),
            other => Err(Error::Config(format!(
                "unknown curve '{other}' (expected lower, upper, indep)"
            ))),
        }
    }
}

/// Solution of an ε-outage rate query.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateSolution {
    /// Largest feasible secrecy rate; `f64::INFINITY` when the outage target
    /// is still met at the search cap.
    pub rate_s: f64,
    /// Outage at the returned rate (at the cap for unbounded solutions, the
    /// curve's infimum when no positive rate is feasible).
    pub achieved_eps: f64,
    /// Curve evaluations spent bracketing and bisecting.
    pub iterations: u32,
}

impl RateSolution {
    /// True when the outage target never binds within the search range.
    #[must_use]
    pub fn is_unbounded(&self) -> bool {
        self.rate_s.is_infinite()
    }
}

/// Infimum of the outage curve over all secrecy rates.
///
/// Four scenario/curve combinations have closed limits; the rest are
/// evaluated at a near-zero rate.
pub fn min_feasible_eps(curve: Curve, scenario: ScenarioTag, params: &ChannelParams) -> Result<f64> {
    match LimitVariant::from_parts(scenario, curve) {
        Some(variant) => Ok(limit_rs0(variant, params)),
        None => {
            let p = ChannelParams {
                rate_s: NEAR_ZERO_RATE,
                ..*params
            };
            scenario_outage(scenario, curve, &p)
        }
    }
}

/// Largest secrecy rate whose outage stays at or below `eps_target`.
///
/// `params.rate_s` is ignored; the decodability margin `rate_d` and all
/// channel parameters are held fixed. Targets below the curve's infimum get
/// rate 0 with the infimum reported as `achieved_eps`.
pub fn eps_outage_rate(
    curve: Curve,
    scenario: ScenarioTag,
    params: &ChannelParams,
    eps_target: f64,
) -> Result<RateSolution> {
    if !(eps_target.is_finite() && eps_target > 0.0 && eps_target < 1.0) {
        return Err(Error::InvalidParameter {
            name: "eps_target",
            value: eps_target,
            constraint: "must lie strictly inside (0, 1)",
        });
    }
    let limit = min_feasible_eps(curve, scenario, params)?;
    if limit >= eps_target {
        return Ok(RateSolution {
            rate_s: 0.0,
            achieved_eps: limit,
            iterations: 0,
        });
    }
    let eval = |rate: f64| {
        let p = ChannelParams { rate_s: rate, ..*params };
        scenario_outage(scenario, curve, &p)
    };
    let mut iterations = 0u32;
    let mut lo = 0.0_f64;
    let mut hi = 1.0_f64;
    loop {
        iterations += 1;
        let eps = eval(hi)?;
        if eps > eps_target {
            break;
        }
        lo = hi;
        hi *= 2.0;
        if hi > MAX_RATE {
            return Ok(RateSolution {
                rate_s: f64::INFINITY,
                achieved_eps: eval(MAX_RATE)?,
                iterations,
            });
        }
    }
    while hi - lo > RATE_TOL {
        let mid = 0.5 * (lo + hi);
        iterations += 1;
        if eval(mid)? <= eps_target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(RateSolution {
        rate_s: lo,
        achieved_eps: eval(lo)?,
        iterations,
    })
}

//! Closed forms for exponential (Rayleigh-power) fading.
//!
//! With both gains exponential, the transformed rates are
//! `λ̃x = λx / ρx` and `λ̃y = λy / (2^{Rs} ρy)`, the bound objective is
//! `g(ỹ) = e^{λ̃y ỹ} - e^{λ̃x (ỹ - s)}`, and the single balance point is
//!
//! `ỹ* = (λ̃x s + ln(λ̃y / λ̃x)) / (λ̃x - λ̃y)`.
//!
//! Every bound reduces to at most one comparison and one evaluation of `g` or
//! `h = 1 + g`; this module implements those forms, the `Rs → 0` limits, the
//! eavesdropper-SNR threshold below which the best case hits its marginal
//! floor, and high-SNR diversity estimates.

use crate::bounds::{self, Direction, ScenarioTag};
use crate::error::Error;
use crate::marginals::{db_to_linear, transform, ChannelParams, TransformedPair};
use crate::rates::Curve;
use crate::Result;

/// Transformed exponential rates and thresholds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RayleighRates {
    /// Rate of `x̃`: `λx / ρx`.
    pub lt_x: f64,
    /// Rate of `|ỹ|`: `λy / (2^{Rs} ρy)`.
    pub lt_y: f64,
    /// Secrecy threshold `2^{Rs} - 1`.
    pub s: f64,
    /// Decodability threshold `2^{Rd+Rs} - 1`.
    pub t: f64,
}

impl RayleighRates {
    /// Transformed rates for the given physical parameters.
    #[must_use]
    pub fn from_params(params: &ChannelParams) -> Self {
        Self {
            lt_x: params.lambda_x / params.rho_x,
            lt_y: params.lambda_y / (2.0_f64.powf(params.rate_s) * params.rho_y),
            s: params.s(),
            t: params.t(),
        }
    }

    /// Balance point of the two densities, `None` when the rates coincide
    /// (the densities are proportional and never cross).
    #[must_use]
    pub fn ystar(&self) -> Option<f64> {
        if self.lt_x == self.lt_y {
            None
        } else {
            Some((self.lt_x * self.s + (self.lt_y / self.lt_x).ln()) / (self.lt_x - self.lt_y))
        }
    }

    /// The same distributions as a generic [`TransformedPair`].
    pub fn to_pair(&self) -> Result<TransformedPair> {
        use crate::marginals::{exponential_marginal, Axis};
        use std::sync::Arc;
        TransformedPair::new(
            Arc::new(exponential_marginal(self.lt_x, Axis::PositiveAxis)?),
            Arc::new(exponential_marginal(self.lt_y, Axis::NegativeAxis)?),
            self.s,
            self.t,
        )
    }

    fn validate(&self) -> Result<()> {
        for (name, v) in [("lt_x", self.lt_x), ("lt_y", self.lt_y)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidParameter {
                    name,
                    value: v,
                    constraint: "must be finite and > 0",
                });
            }
        }
        if !(self.s.is_finite() && self.s >= 0.0 && self.t.is_finite() && self.t >= self.s) {
            return Err(Error::InvalidParameter {
                name: "s, t",
                value: self.t,
                constraint: "need finite 0 <= s <= t",
            });
        }
        Ok(())
    }
}

/// Closed-form bound or independent outage for `Csit` / `NoCsit`.
///
/// The Alt scenarios have no closed form here and are refused; the generic
/// candidate engine in [`bounds`] covers them. Equal transformed rates are
/// the knife edge where `ỹ*` is undefined; the Lower/Upper curves route that
/// case to the generic engine, whose candidate set handles it without a
/// division.
pub fn closed_bound(scenario: ScenarioTag, curve: Curve, r: &RayleighRates) -> Result<f64> {
    match scenario {
        ScenarioTag::Csit | ScenarioTag::NoCsit => {}
        other => return Err(Error::UnsupportedScenario(other.name())),
    }
    r.validate()?;
    if r.lt_x == r.lt_y && curve != Curve::Independent {
        let pair = r.to_pair()?;
        let direction = match curve {
            Curve::Lower => Direction::Lower,
            Curve::Upper => Direction::Upper,
            Curve::Independent => unreachable!(),
        };
        return Ok(bounds::bound(scenario, direction, &pair)?.value);
    }
    let g = |y: f64| (r.lt_y * y).exp() - (r.lt_x * (y - r.s)).exp();
    let h = |y: f64| 1.0 + g(y);
    let fx = |x: f64| -(-r.lt_x * x).exp_m1();
    let value = match (scenario, curve) {
        (ScenarioTag::Csit, Curve::Lower) => {
            if r.lt_y < r.lt_x * (-r.lt_x * r.s).exp() {
                g(r.ystar().expect("rates differ"))
            } else {
                fx(r.s)
            }
        }
        (ScenarioTag::Csit, Curve::Upper) => {
            if r.lt_x >= r.lt_y {
                1.0
            } else {
                h(r.ystar().expect("rates differ"))
            }
        }
        (ScenarioTag::Csit, Curve::Independent) => {
            1.0 - r.lt_y * (-r.lt_x * r.s).exp() / (r.lt_x + r.lt_y)
        }
        (ScenarioTag::NoCsit, Curve::Lower) => {
            let anchor = r.ystar().map_or(r.s - r.t, |y| y.min(r.s - r.t));
            g(anchor).max(fx(r.t))
        }
        (ScenarioTag::NoCsit, Curve::Upper) => {
            if r.lt_y > r.lt_x {
                h(r.ystar().expect("rates differ").min(r.s - r.t))
            } else {
                1.0
            }
        }
        (ScenarioTag::NoCsit, Curve::Independent) => {
            let edge = r.lt_y * (r.s - r.t) - r.lt_x * r.t;
            -(-r.lt_x * r.t).exp_m1() + r.lt_x * edge.exp() / (r.lt_x + r.lt_y)
        }
        _ => unreachable!("Alt scenarios rejected above"),
    };
    Ok(value.clamp(0.0, 1.0))
}

/// Eavesdropper SNR (linear) below which the best-case `Csit` outage equals
/// its marginal floor `F_x̃(s)`: `(λy / λx) (ρx / 2^{Rs}) e^{(λx / ρx) s}`.
pub fn eve_snr_threshold(lambda_x: f64, lambda_y: f64, rho_x: f64, rate_s: f64) -> Result<f64> {
    for (name, v) in [
        ("lambda_x", lambda_x),
        ("lambda_y", lambda_y),
        ("rho_x", rho_x),
    ] {
        if !(v.is_finite() && v > 0.0) {
            return Err(Error::InvalidParameter {
                name,
                value: v,
                constraint: "must be finite and > 0",
            });
        }
    }
    if !(rate_s.is_finite() && rate_s >= 0.0) {
        return Err(Error::InvalidParameter {
            name: "rate_s",
            value: rate_s,
            constraint: "must be finite and >= 0",
        });
    }
    let s = 2.0_f64.powf(rate_s) - 1.0;
    Ok((lambda_y / lambda_x) * (rho_x / 2.0_f64.powf(rate_s)) * ((lambda_x / rho_x) * s).exp())
}

/// High-SNR sufficient secrecy rate: below
/// `log2((λy / λx) (ρx / ρy))` the threshold condition holds as both SNRs
/// grow with fixed offset.
pub fn rs_sufficient_bound(
    lambda_x: f64,
    lambda_y: f64,
    rho_x: f64,
    rho_y: f64,
) -> Result<f64> {
    for (name, v) in [
        ("lambda_x", lambda_x),
        ("lambda_y", lambda_y),
        ("rho_x", rho_x),
        ("rho_y", rho_y),
    ] {
        if !(v.is_finite() && v > 0.0) {
            return Err(Error::InvalidParameter {
                name,
                value: v,
                constraint: "must be finite and > 0",
            });
        }
    }
    Ok(((lambda_y * rho_x) / (lambda_x * rho_y)).log2())
}

/// Curves with a closed `Rs → 0` limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LimitVariant {
    /// Best case with main-channel knowledge.
    CsitLower,
    /// Worst case with main-channel knowledge.
    CsitUpper,
    /// Best case with statistical knowledge.
    NoCsitLower,
    /// Independent gains with statistical knowledge.
    NoCsitIndependent,
}

impl LimitVariant {
    /// Map a scenario/curve pair onto its limit variant, if one exists.
    #[must_use]
    pub fn from_parts(scenario: ScenarioTag, curve: Curve) -> Option<Self> {
        match (scenario, curve) {
            (ScenarioTag::Csit, Curve::Lower) => Some(LimitVariant::CsitLower),
            (ScenarioTag::Csit, Curve::Upper) => Some(LimitVariant::CsitUpper),
            (ScenarioTag::NoCsit, Curve::Lower) => Some(LimitVariant::NoCsitLower),
            (ScenarioTag::NoCsit, Curve::Independent) => Some(LimitVariant::NoCsitIndependent),
            _ => None,
        }
    }
}

/// Limit of the curve as `Rs → 0` with everything else fixed.
///
/// At `Rs = 0` the transformed rates become `λ̃x = λx / ρx` and
/// `λ̃y0 = λy / ρy`, the secrecy threshold vanishes, and with
/// `ỹ*0 = ln(λ̃y0 / λ̃x) / (λ̃x - λ̃y0)`, `g0(ỹ) = e^{λ̃y0 ỹ} - e^{λ̃x ỹ}`,
/// `t0 = 2^{Rd} - 1`:
///
/// - `CsitLower`: `g0(ỹ*0)` if `λ̃y0 < λ̃x`, else 0.
/// - `CsitUpper`: 1 if `λ̃x ≥ λ̃y0`, else `1 + g0(ỹ*0)`.
/// - `NoCsitLower`: `max(g0(ỹ*0), 1 - e^{-λ̃x t0})`; the `g0` term is
///   non-positive whenever `λ̃y0 ≥ λ̃x`, so no branch condition is needed.
/// - `NoCsitIndependent`:
///   `1 - e^{-λ̃x t0} + λ̃x e^{-(λ̃x + λ̃y0) t0} / (λ̃x + λ̃y0)`.
///
/// `params.rate_s` is ignored; `params.rate_d` enters through `t0`.
pub fn limit_rs0(variant: LimitVariant, params: &ChannelParams) -> f64 {
    let ax = params.lambda_x / params.rho_x;
    let ay = params.lambda_y / params.rho_y;
    let ystar0 = if ax == ay {
        None
    } else {
        Some((ay / ax).ln() / (ax - ay))
    };
    let g0 = |y: f64| (ay * y).exp() - (ax * y).exp();
    let t0 = 2.0_f64.powf(params.rate_d) - 1.0;
    match variant {
        LimitVariant::CsitLower => {
            if ay < ax {
                g0(ystar0.expect("rates differ"))
            } else {
                0.0
            }
        }
        LimitVariant::CsitUpper => {
            if ax >= ay {
                1.0
            } else {
                1.0 + g0(ystar0.expect("rates differ"))
            }
        }
        LimitVariant::NoCsitLower => {
            let g_term = ystar0.map_or(0.0, g0);
            g_term.max(-(-ax * t0).exp_m1())
        }
        LimitVariant::NoCsitIndependent => {
            -(-ax * t0).exp_m1() + ax * (-(ax + ay) * t0).exp() / (ax + ay)
        }
    }
}

/// Convenience dispatcher: outage value for any scenario and curve at the
/// given physical parameters. `Csit`/`NoCsit` use the closed forms, the Alt
/// scenarios the generic candidate engine.
pub fn scenario_outage(scenario: ScenarioTag, curve: Curve, params: &ChannelParams) -> Result<f64> {
    match scenario {
        ScenarioTag::Csit | ScenarioTag::NoCsit => {
            closed_bound(scenario, curve, &RayleighRates::from_params(params))
        }
        ScenarioTag::AltCsit | ScenarioTag::AltNoCsit => {
            let pair = transform(params);
            match curve {
                Curve::Lower => Ok(bounds::bound(scenario, Direction::Lower, &pair)?.value),
                Curve::Upper => Ok(bounds::bound(scenario, Direction::Upper, &pair)?.value),
                Curve::Independent => bounds::independent_outage(scenario, &pair),
            }
        }
    }
}

/// High-SNR diversity order: least-squares slope of `-ln ε` against `ln ρx`
/// over the upper half of the SNR grid.
///
/// The grid (in dB) needs at least 5 points spanning at least 20 dB. Points
/// in the fitted half where the curve is saturated at 1 or vanishes give no
/// slope and produce a [`Error::NonIdentifiable`].
pub fn diversity_estimate(
    scenario: ScenarioTag,
    curve: Curve,
    params: &ChannelParams,
    snr_grid_db: &[f64],
) -> Result<f64> {
    if snr_grid_db.len() < 5 {
        return Err(Error::Config(format!(
            "diversity grid needs at least 5 points, got {}",
            snr_grid_db.len()
        )));
    }
    let mut grid = snr_grid_db.to_vec();
    grid.sort_by(|a, b| a.partial_cmp(b).expect("grid points must be comparable"));
    if !grid.iter().all(|v| v.is_finite()) {
        return Err(Error::Config("diversity grid contains non-finite points".into()));
    }
    let span = grid[grid.len() - 1] - grid[0];
    if span < 20.0 - 1e-9 {
        return Err(Error::Config(format!(
            "diversity grid must span at least 20 dB, got {span:.3}"
        )));
    }
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for &db in &grid[grid.len() / 2..] {
        let p = ChannelParams {
            rho_x: db_to_linear(db),
            ..*params
        };
        let eps = scenario_outage(scenario, curve, &p)?;
        if eps >= 1.0 - 1e-12 {
            return Err(Error::NonIdentifiable(format!(
                "outage saturated at 1 at {db} dB"
            )));
        }
        if eps <= 0.0 {
            return Err(Error::NonIdentifiable(format!(
                "outage vanished at {db} dB"
            )));
        }
        xs.push(db_to_linear(db).ln());
        ys.push(-eps.ln());
    }
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    if sxx <= 0.0 {
        return Err(Error::NonIdentifiable("degenerate SNR grid".into()));
    }
    Ok(sxy / sxx)
}

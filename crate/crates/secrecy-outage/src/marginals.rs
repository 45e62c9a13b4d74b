//! Channel parameters, marginal distributions, and the outage-plane transform.
//!
//! The wiretap geometry is analyzed in transformed coordinates: the
//! legitimate gain is scaled onto the non-negative axis, the eavesdropper
//! gain is scaled and negated onto the non-positive axis. All outage regions
//! become lower-left sets of the plane, so every scenario reduces to how much
//! probability mass a coupling can push into such a set.
//!
//! `x̃ = ρx · x` with `x ~ Exp(λx)` gives `x̃ ~ Exp(λx / ρx)` on `[0, ∞)`.
//! `ỹ = -2^{Rs} · ρy · y` with `y ~ Exp(λy)` gives `|ỹ| ~ Exp(λy / (2^{Rs} ρy))`
//! on `(-∞, 0]`. Thresholds: `s = 2^{Rs} - 1`, `t = 2^{Rd + Rs} - 1`.

use std::sync::Arc;

use crate::error::Error;
use crate::numerics;
use crate::Result;

/// Convert an SNR in dB to linear scale.
#[must_use]
pub fn db_to_linear(db: f64) -> f64 {
    10.0_f64.powf(db / 10.0)
}

/// Convert a linear SNR to dB.
#[must_use]
pub fn linear_to_db(linear: f64) -> f64 {
    10.0 * linear.log10()
}

/// Physical parameters of the two fading links, SNRs in linear scale.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelParams {
    /// Rate of the legitimate link's exponential gain.
    pub lambda_x: f64,
    /// Rate of the eavesdropper link's exponential gain.
    pub lambda_y: f64,
    /// Transmit SNR toward the legitimate receiver (linear).
    pub rho_x: f64,
    /// Transmit SNR toward the eavesdropper (linear).
    pub rho_y: f64,
    /// Secrecy rate in bits per channel use.
    pub rate_s: f64,
    /// Rate margin on top of the secrecy rate (codeword rate is
    /// `rate_d + rate_s`).
    pub rate_d: f64,
}

impl ChannelParams {
    /// Validated constructor: rates of the gains and SNRs strictly positive,
    /// code rates non-negative, everything finite.
    pub fn new(
        lambda_x: f64,
        lambda_y: f64,
        rho_x: f64,
        rho_y: f64,
        rate_s: f64,
        rate_d: f64,
    ) -> Result<Self> {
        let positive: [(&'static str, f64); 4] = [
            ("lambda_x", lambda_x),
            ("lambda_y", lambda_y),
            ("rho_x", rho_x),
            ("rho_y", rho_y),
        ];
        for (name, value) in positive {
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::InvalidParameter {
                    name,
                    value,
                    constraint: "must be finite and > 0",
                });
            }
        }
        let non_negative: [(&'static str, f64); 2] = [("rate_s", rate_s), ("rate_d", rate_d)];
        for (name, value) in non_negative {
            if !(value.is_finite() && value >= 0.0) {
                return Err(Error::InvalidParameter {
                    name,
                    value,
                    constraint: "must be finite and >= 0",
                });
            }
        }
        Ok(Self {
            lambda_x,
            lambda_y,
            rho_x,
            rho_y,
            rate_s,
            rate_d,
        })
    }

    /// Secrecy threshold `s = 2^{Rs} - 1`.
    #[must_use]
    pub fn s(&self) -> f64 {
        2.0_f64.powf(self.rate_s) - 1.0
    }

    /// Decodability threshold `t = 2^{Rd + Rs} - 1`.
    #[must_use]
    pub fn t(&self) -> f64 {
        2.0_f64.powf(self.rate_d + self.rate_s) - 1.0
    }
}

/// A one-dimensional marginal distribution.
///
/// `pdf_derivative` and `quantile` have generic defaults (central difference,
/// bracketed bisection on the cdf); concrete families should override them
/// with closed forms.
pub trait Marginal: Send + Sync {
    /// Cumulative distribution function.
    fn cdf(&self, x: f64) -> f64;

    /// Probability density function.
    fn pdf(&self, x: f64) -> f64;

    /// Support as `(lower, upper)`; infinities allowed.
    fn support(&self) -> (f64, f64);

    /// Derivative of the pdf. Default: central difference with step
    /// `max(1e-6, 1e-6 |x|)`.
    fn pdf_derivative(&self, x: f64) -> f64 {
        let h = 1e-6_f64.max(1e-6 * x.abs());
        (self.pdf(x + h) - self.pdf(x - h)) / (2.0 * h)
    }

    /// Quantile function on `[0, 1]`. Default: expand a bracket geometrically
    /// on unbounded supports, then bisect the cdf to `1e-12`.
    fn quantile(&self, u: f64) -> f64 {
        assert!((0.0..=1.0).contains(&u), "quantile argument {u} not in [0,1]");
        let (lo_s, hi_s) = self.support();
        if u == 0.0 {
            return lo_s;
        }
        if u == 1.0 {
            return hi_s;
        }
        let mut lo = if lo_s.is_finite() { lo_s } else { -1.0 };
        if !lo_s.is_finite() {
            while self.cdf(lo) > u && lo > -1e300 {
                lo *= 4.0;
            }
        }
        let mut hi = if hi_s.is_finite() { hi_s } else { 1.0 };
        if !hi_s.is_finite() {
            while self.cdf(hi) < u && hi < 1e300 {
                hi *= 4.0;
            }
        }
        numerics::bisect(&|x| self.cdf(x) - u, lo, hi, numerics::ROOT_XTOL)
            .expect("cdf is monotone, bracket has a sign change")
    }
}

/// Which half-axis an exponential marginal lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    /// Density `λ e^{-λx}` on `[0, ∞)`.
    PositiveAxis,
    /// Density `λ e^{λx}` on `(-∞, 0]` (a negated exponential).
    NegativeAxis,
}

/// Exponential marginal on either half-axis.
#[derive(Debug, Clone, Copy)]
pub struct ExponentialMarginal {
    rate: f64,
    axis: Axis,
}

impl ExponentialMarginal {
    /// Rate parameter `λ`.
    #[must_use]
    pub fn rate(&self) -> f64 {
        self.rate
    }

    /// Half-axis the distribution lives on.
    #[must_use]
    pub fn axis(&self) -> Axis {
        self.axis
    }
}

/// Exponential marginal with rate `λ > 0` on the chosen half-axis.
pub fn exponential_marginal(rate: f64, axis: Axis) -> Result<ExponentialMarginal> {
    if !(rate.is_finite() && rate > 0.0) {
        return Err(Error::InvalidParameter {
            name: "rate",
            value: rate,
            constraint: "must be finite and > 0",
        });
    }
    Ok(ExponentialMarginal { rate, axis })
}

impl Marginal for ExponentialMarginal {
    fn cdf(&self, x: f64) -> f64 {
        match self.axis {
            Axis::PositiveAxis => {
                if x <= 0.0 {
                    0.0
                } else {
                    -(-self.rate * x).exp_m1()
                }
            }
            Axis::NegativeAxis => {
                if x >= 0.0 {
                    1.0
                } else {
                    (self.rate * x).exp()
                }
            }
        }
    }

    fn pdf(&self, x: f64) -> f64 {
        match self.axis {
            Axis::PositiveAxis => {
                if x < 0.0 {
                    0.0
                } else {
                    self.rate * (-self.rate * x).exp()
                }
            }
            Axis::NegativeAxis => {
                if x > 0.0 {
                    0.0
                } else {
                    self.rate * (self.rate * x).exp()
                }
            }
        }
    }

    fn support(&self) -> (f64, f64) {
        match self.axis {
            Axis::PositiveAxis => (0.0, f64::INFINITY),
            Axis::NegativeAxis => (f64::NEG_INFINITY, 0.0),
        }
    }

    fn pdf_derivative(&self, x: f64) -> f64 {
        match self.axis {
            Axis::PositiveAxis => {
                if x < 0.0 {
                    0.0
                } else {
                    -self.rate * self.rate * (-self.rate * x).exp()
                }
            }
            Axis::NegativeAxis => {
                if x > 0.0 {
                    0.0
                } else {
                    self.rate * self.rate * (self.rate * x).exp()
                }
            }
        }
    }

    fn quantile(&self, u: f64) -> f64 {
        assert!((0.0..=1.0).contains(&u), "quantile argument {u} not in [0,1]");
        match self.axis {
            Axis::PositiveAxis => {
                if u == 1.0 {
                    f64::INFINITY
                } else {
                    -(-u).ln_1p() / self.rate
                }
            }
            Axis::NegativeAxis => {
                if u == 0.0 {
                    f64::NEG_INFINITY
                } else {
                    u.ln() / self.rate
                }
            }
        }
    }
}

/// The transformed pair `(x̃, ỹ)` with its outage thresholds.
#[derive(Clone)]
pub struct TransformedPair {
    /// Marginal of `x̃` on `[0, ∞)`.
    pub xt: Arc<dyn Marginal>,
    /// Marginal of `ỹ` on `(-∞, 0]`.
    pub yt: Arc<dyn Marginal>,
    /// Secrecy threshold `s ≥ 0`.
    pub s: f64,
    /// Decodability threshold `t ≥ s`.
    pub t: f64,
}

impl TransformedPair {
    /// Assemble a pair from arbitrary marginals; `s` must be finite and
    /// non-negative, `t` finite with `t ≥ s`.
    pub fn new(xt: Arc<dyn Marginal>, yt: Arc<dyn Marginal>, s: f64, t: f64) -> Result<Self> {
        if !(s.is_finite() && s >= 0.0) {
            return Err(Error::InvalidParameter {
                name: "s",
                value: s,
                constraint: "must be finite and >= 0",
            });
        }
        if !(t.is_finite() && t >= s) {
            return Err(Error::InvalidParameter {
                name: "t",
                value: t,
                constraint: "must be finite and >= s",
            });
        }
        Ok(Self { xt, yt, s, t })
    }

    /// `F_x̃(x)`.
    #[must_use]
    pub fn fx(&self, x: f64) -> f64 {
        self.xt.cdf(x)
    }

    /// `F_ỹ(y)`.
    #[must_use]
    pub fn fy(&self, y: f64) -> f64 {
        self.yt.cdf(y)
    }

    /// Lower-tail cutoff for `ỹ`: the quantile carrying `tail_mass` below it.
    /// Stationary and integration work happens on `[y_floor, 0]`; the mass
    /// below contributes its analytic limit.
    #[must_use]
    pub fn y_floor(&self, tail_mass: f64) -> f64 {
        self.yt.quantile(tail_mass)
    }
}

/// Transform physical channel parameters into the outage-plane pair.
#[must_use]
pub fn transform(params: &ChannelParams) -> TransformedPair {
    let scale = 2.0_f64.powf(params.rate_s);
    let rate_xt = params.lambda_x / params.rho_x;
    let rate_yt = params.lambda_y / (scale * params.rho_y);
    let xt = ExponentialMarginal {
        rate: rate_xt,
        axis: Axis::PositiveAxis,
    };
    let yt = ExponentialMarginal {
        rate: rate_yt,
        axis: Axis::NegativeAxis,
    };
    TransformedPair {
        xt: Arc::new(xt),
        yt: Arc::new(yt),
        s: params.s(),
        t: params.t(),
    }
}

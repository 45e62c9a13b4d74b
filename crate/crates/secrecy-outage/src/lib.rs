//! Distribution-free secrecy outage bounds for slow-fading wiretap channels.
//!
//! A transmitter talks to a legitimate receiver while an eavesdropper listens
//! on a second fading channel. When only the marginal fading distributions are
//! known, the joint distribution of the two channel gains is free to be any
//! coupling of those marginals. This crate computes the best and worst secrecy
//! outage probability over *all* such couplings, the classical independent
//! case, the couplings that attain the extremes, and the secrecy rates that
//! follow from them.
//!
//! The core quantities:
//!
//! - transformed gains `x̃ = ρx·x` on `[0, ∞)` and `ỹ = -2^{Rs}·ρy·y` on
//!   `(-∞, 0]`, with thresholds `s = 2^{Rs} - 1` and `t = 2^{Rd + Rs} - 1`,
//! - an outage region per scenario (which side has channel knowledge),
//! - sharp bounds on the probability mass any coupling can place in that
//!   region, found by enumerating boundary and stationary candidates of
//!   `g(ỹ) = F_x̃(s - ỹ) + F_ỹ(ỹ) - 1` and `h = g + 1`,
//! - discrete couplings on quantile atoms that achieve each bound,
//! - closed forms for Rayleigh fading, small-rate limits, and an
//!   eavesdropper-SNR threshold below which secrecy is "free".
//!
//! ## Directory structure
//!
//! ```text
//! examples/
//! ├── bound_basics.rs        # Bounds for one parameter set, all scenarios
//! ├── achieving_couplings.rs # Build extremal couplings, check empirically
//! ├── outage_rates.rs        # ε-outage secrecy rates and feasibility limits
//! ├── eve_snr_threshold.rs   # Eavesdropper SNR below which outage hits its floor
//! ├── snr_sweep.rs           # Bound curves vs SNR, written as column data
//! ├── alternative_outage.rs  # Scenarios where the eavesdropper's side is known
//! ├── diversity.rs           # High-SNR slope of the outage curves
//! └── small_rate_limits.rs   # Limits of the bounds as the secrecy rate → 0
//! ```
//!
//! Run any of them with
//!
//! ```bash
//! cargo run --release --example bound_basics
//! cargo run --release --example achieving_couplings
//! ```
//!
//! ## Library map
//!
//! - [`marginals`]: channel parameters, marginal distributions, the transform
//!   to `(x̃, ỹ)`.
//! - [`copulas`]: pointwise copula and dual evaluation, extremal discrete
//!   couplings, sampling from a coupling plan.
//! - [`bounds`]: scenario outage regions, stationary points, the candidate
//!   enumeration that produces each bound, independent-case outage.
//! - [`rayleigh`]: closed forms for exponential gains, small-rate limits,
//!   SNR thresholds, diversity estimates.
//! - [`montecarlo`]: outage indicator, Monte Carlo estimation under
//!   independent or coupled sampling, the analytic-vs-empirical check suite.
//! - [`rates`]: ε-outage secrecy rate inversion and feasibility floors.
//! - [`sweep`]: parameter sweeps written as whitespace-separated column files.
//!
//! A thin `secrecy-outage` binary exposes the same operations as `sweep`,
//! `query bound|threshold|rate|limit|diversity`, and `verify` subcommands.

#![deny(unsafe_code)]
#![warn(missing_docs)]

pub mod bounds;
pub mod copulas;
pub mod error;
pub mod marginals;
pub mod montecarlo;
pub mod numerics;
pub mod rates;
pub mod rayleigh;
pub mod sweep;

pub use bounds::{bound, independent_outage, BoundBranch, BoundResult, Direction, ScenarioTag};
pub use copulas::{build_achieving_coupling, sample_coupling, CopulaKind, CouplingPlan};
pub use error::Error;
pub use marginals::{
    db_to_linear, exponential_marginal, linear_to_db, transform, Axis, ChannelParams, Marginal,
    TransformedPair,
};
pub use montecarlo::{estimate, outage_event, MCEstimate, Sampler};
pub use rates::{eps_outage_rate, min_feasible_eps, Curve, RateSolution};
pub use rayleigh::{
    closed_bound, diversity_estimate, eve_snr_threshold, limit_rs0, rs_sufficient_bound,
    scenario_outage, LimitVariant, RayleighRates,
};
pub use sweep::{run_sweep, sweep_rows, McSettings, SweepRow, SweepSpec, SweepVariable};

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

//! Sharp outage bounds by candidate enumeration.
//!
//! Every scenario's outage event is a lower-left region of the `(x̃, ỹ)`
//! plane. Over all couplings of the two marginals, the probability of such a
//! region is extremized either at a boundary of the scenario's probe window
//! or at an interior stationary point of
//!
//! `g(ỹ) = F_x̃(s - ỹ) + F_ỹ(ỹ) - 1`   (lower bounds)
//! `h(ỹ) = g(ỹ) + 1`                    (upper bounds)
//!
//! where stationary means `f_ỹ(ỹ) = f_x̃(s - ỹ)`. Instead of reproducing the
//! case analysis of each scenario as branch conditions, [`bound`] enumerates
//! every boundary, stationary, and saturation candidate and takes the
//! extremum; the winning candidate determines the reported branch.
//!
//! ## Scenarios
//!
//! With `s = 2^{Rs} - 1` and `t = 2^{Rd+Rs} - 1`:
//!
//! - `Csit`: main-channel knowledge at the transmitter; outage is
//!   `x̃ + ỹ < s`.
//! - `NoCsit`: statistical knowledge only; outage is
//!   `x̃ + ỹ < s  ∪  x̃ < t`.
//! - `AltCsit`: eavesdropper-channel knowledge; outage is
//!   `x̃ + ỹ < s  ∪  ỹ < s - t`.
//! - `AltNoCsit`: eavesdropper-channel statistics only; outage is
//!   `x̃ < t  ∪  ỹ < s - t`, a union of marginal events whose bounds are
//!   dual-copula values at the corner `(t, s - t)`.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::marginals::TransformedPair;
use crate::numerics;
use crate::Result;

/// Mass below the working floor of the `ỹ` axis. Stationary search and
/// quadrature run on `[y_floor, 0]`; everything below contributes its
/// analytic limit (`g → 0`, `h → 1`, integrand section → 1).
pub const TAIL_MASS: f64 = 1e-12;

/// Channel-knowledge scenario selecting the outage region.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScenarioTag {
    /// Perfect main-channel knowledge at the transmitter.
    Csit,
    /// Statistical knowledge of both channels.
    NoCsit,
    /// Perfect eavesdropper-channel knowledge at the transmitter.
    AltCsit,
    /// Statistical knowledge, outage split into marginal decodability and
    /// secrecy events.
    AltNoCsit,
}

impl ScenarioTag {
    /// Stable lowercase label used by the CLI and sweep files.
    #[must_use]
    pub fn name(&self) -> &'static str {
        match self {
            ScenarioTag::Csit => "csit",
            ScenarioTag::NoCsit => "nocsit",
            ScenarioTag::AltCsit => "alt-csit",
            ScenarioTag::AltNoCsit => "alt-nocsit",
        }
    }

    /// All scenarios, in presentation order.
    pub const ALL: [ScenarioTag; 4] = [
        ScenarioTag::Csit,
        ScenarioTag::NoCsit,
        ScenarioTag::AltCsit,
        ScenarioTag::AltNoCsit,
    ];
}

impl fmt::Display for ScenarioTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ScenarioTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csit" => Ok(ScenarioTag::Csit),
            "nocsit" => Ok(ScenarioTag::NoCsit),
            "alt-csit" => Ok(ScenarioTag::AltCsit),
            "alt-nocsit" => Ok(ScenarioTag::AltNoCsit),
            other => Err(Error::Config(format!(
                "unknown scenario '{other}' (expected csit, nocsit, alt-csit, alt-nocsit)"
            ))),
        }
    }
}

/// Which extreme over couplings is requested.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    /// Best case: least outage any coupling allows.
    Lower,
    /// Worst case: most outage any coupling allows.
    Upper,
}

impl Direction {
    /// Stable lowercase label used by the CLI.
    #[must_use]
    pub fn name(&self) -> &'static str {
        match self {
            Direction::Lower => "lower",
            Direction::Upper => "upper",
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lower" => Ok(Direction::Lower),
            "upper" => Ok(Direction::Upper),
            other => Err(Error::Config(format!(
                "unknown direction '{other}' (expected lower or upper)"
            ))),
        }
    }
}

/// Which candidate won the extremization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundBranch {
    /// A window-boundary or marginal-event candidate.
    TrivialBoundary,
    /// An interior stationary point.
    StationaryInterior,
    /// The saturation cap: no coupling constraint tighter than probability 1.
    SaturatedOne,
}

impl BoundBranch {
    /// Stable lowercase label used by the CLI.
    #[must_use]
    pub fn name(&self) -> &'static str {
        match self {
            BoundBranch::TrivialBoundary => "trivial-boundary",
            BoundBranch::StationaryInterior => "stationary-interior",
            BoundBranch::SaturatedOne => "saturated-one",
        }
    }
}

impl fmt::Display for BoundBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of a bound evaluation.
#[derive(Debug, Clone)]
pub struct BoundResult {
    /// The bound, in `[0, 1]`.
    pub value: f64,
    /// Which candidate family produced it.
    pub branch: BoundBranch,
    /// Stationary points inside the scenario's window. Reported on the `ỹ`
    /// axis for `Csit`/`NoCsit` and mapped to `x̃ = s - ỹ` for the Alt
    /// scenarios; empty for `AltNoCsit`.
    pub stationary_points: Vec<f64>,
    /// Every `(location, objective)` pair examined, in evaluation order.
    pub candidates: Vec<(f64, f64)>,
}

/// Interior solutions of `f_ỹ(ỹ) = f_x̃(s - ỹ)` on `(y_floor, 0]`, ascending.
///
/// The search grid is log-spaced in `|ỹ|`, 32 points per decade across 24
/// decades up from the floor, so densities whose balance point sits anywhere
/// between the tail cutoff and `ỹ = 0` produce a bracketed sign change.
#[must_use]
pub fn stationary_points(pair: &TransformedPair) -> Vec<f64> {
    let floor = pair.y_floor(TAIL_MASS).max(-1e306);
    if floor >= -1e-300 {
        return Vec::new();
    }
    const PER_DECADE: usize = 32;
    const DECADES: usize = 24;
    let magnitude = -floor;
    let mut grid = Vec::with_capacity(PER_DECADE * DECADES + 2);
    for j in 0..=(PER_DECADE * DECADES) {
        grid.push(-magnitude * 10.0_f64.powf(-(j as f64) / PER_DECADE as f64));
    }
    grid.push(0.0);
    let balance = |y: f64| pair.yt.pdf(y) - pair.xt.pdf(pair.s - y);
    numerics::sign_change_roots(&balance, &grid, numerics::ROOT_XTOL)
}

struct Candidate {
    location: f64,
    value: f64,
    branch: BoundBranch,
}

fn check_pair(pair: &TransformedPair) -> Result<()> {
    if pair.s.is_finite() && pair.t.is_finite() && pair.s >= 0.0 && pair.t >= pair.s {
        Ok(())
    } else {
        Err(Error::Config(format!(
            "thresholds inconsistent with scenario: s = {}, t = {}",
            pair.s, pair.t
        )))
    }
}

/// Sharp bound on the scenario's outage probability over all couplings.
///
/// Candidates per scenario (locations on the `ỹ` axis for `Csit`/`NoCsit`,
/// on the `x̃` axis for the Alt scenarios; saturation caps at the open end of
/// the window):
///
/// - `Csit` lower: `g(0) = F_x̃(s)` at `0`; `g(ỹ*)` at each stationary point.
/// - `Csit` upper: cap `1` at `-∞`; `h(0)`; `h(ỹ*)`.
/// - `NoCsit` lower: the marginal decodability bound `F_x̃(t)` pinned at the
///   window edge `s - t`; `g(ỹ*)` for stationary points with `ỹ* < s - t`.
/// - `NoCsit` upper: cap `1` at `-∞`; the corner value
///   `h(s - t) = F_x̃(t) + F_ỹ(s - t)`; `h(ỹ*)` for `ỹ* < s - t`.
/// - `AltCsit` lower: `F_x̃(s)` at `s`; the marginal secrecy bound
///   `F_ỹ(s - t)` pinned at the corner `t`; `g` at stationary points mapped
///   to `x̃* = s - ỹ* ∈ [s, t)`.
/// - `AltCsit` upper: cap `1` at `+∞`; the corner value at `t`; `h` at the
///   mapped stationary points.
/// - `AltNoCsit`: both marginal values at the corner `t` (lower), the corner
///   sum and the cap (upper); these are the dual-copula values
///   `max(a, b)` and `min(a + b, 1)` with `a = F_x̃(t)`, `b = F_ỹ(s - t)`.
///
/// Ties go to the earliest candidate, so a bound that exactly saturates
/// reports `SaturatedOne` and boundary candidates beat stationary ones.
pub fn bound(scenario: ScenarioTag, direction: Direction, pair: &TransformedPair) -> Result<BoundResult> {
    check_pair(pair)?;
    let s = pair.s;
    let t = pair.t;
    let g = |y: f64| pair.fx(s - y) + pair.fy(y) - 1.0;
    let h = |y: f64| pair.fx(s - y) + pair.fy(y);

    let roots = match scenario {
        ScenarioTag::AltNoCsit => Vec::new(),
        _ => stationary_points(pair),
    };

    let mut cands: Vec<Candidate> = Vec::new();
    let mut stationary = Vec::new();
    match (scenario, direction) {
        (ScenarioTag::Csit, Direction::Lower) => {
            cands.push(Candidate {
                location: 0.0,
                value: pair.fx(s),
                branch: BoundBranch::TrivialBoundary,
            });
            for &y in &roots {
                stationary.push(y);
                cands.push(Candidate {
                    location: y,
                    value: g(y),
                    branch: BoundBranch::StationaryInterior,
                });
            }
        }
        (ScenarioTag::Csit, Direction::Upper) => {
            cands.push(Candidate {
                location: f64::NEG_INFINITY,
                value: 1.0,
                branch: BoundBranch::SaturatedOne,
            });
            cands.push(Candidate {
                location: 0.0,
                value: h(0.0),
                branch: BoundBranch::TrivialBoundary,
            });
            for &y in &roots {
                stationary.push(y);
                cands.push(Candidate {
                    location: y,
                    value: h(y),
                    branch: BoundBranch::StationaryInterior,
                });
            }
        }
        (ScenarioTag::NoCsit, Direction::Lower) => {
            cands.push(Candidate {
                location: s - t,
                value: pair.fx(t),
                branch: BoundBranch::TrivialBoundary,
            });
            for &y in roots.iter().filter(|&&y| y < s - t) {
                stationary.push(y);
                cands.push(Candidate {
                    location: y,
                    value: g(y),
                    branch: BoundBranch::StationaryInterior,
                });
            }
        }
        (ScenarioTag::NoCsit, Direction::Upper) => {
            cands.push(Candidate {
                location: f64::NEG_INFINITY,
                value: 1.0,
                branch: BoundBranch::SaturatedOne,
            });
            cands.push(Candidate {
                location: s - t,
                value: h(s - t),
                branch: BoundBranch::TrivialBoundary,
            });
            for &y in roots.iter().filter(|&&y| y < s - t) {
                stationary.push(y);
                cands.push(Candidate {
                    location: y,
                    value: h(y),
                    branch: BoundBranch::StationaryInterior,
                });
            }
        }
        (ScenarioTag::AltCsit, Direction::Lower) => {
            cands.push(Candidate {
                location: s,
                value: pair.fx(s),
                branch: BoundBranch::TrivialBoundary,
            });
            cands.push(Candidate {
                location: t,
                value: pair.fy(s - t),
                branch: BoundBranch::TrivialBoundary,
            });
            for &y in roots.iter().filter(|&&y| y > s - t) {
                stationary.push(s - y);
                cands.push(Candidate {
                    location: s - y,
                    value: g(y),
                    branch: BoundBranch::StationaryInterior,
                });
            }
        }
        (ScenarioTag::AltCsit, Direction::Upper) => {
            cands.push(Candidate {
                location: f64::INFINITY,
                value: 1.0,
                branch: BoundBranch::SaturatedOne,
            });
            cands.push(Candidate {
                location: t,
                value: pair.fx(t) + pair.fy(s - t),
                branch: BoundBranch::TrivialBoundary,
            });
            for &y in roots.iter().filter(|&&y| y > s - t) {
                stationary.push(s - y);
                cands.push(Candidate {
                    location: s - y,
                    value: h(y),
                    branch: BoundBranch::StationaryInterior,
                });
            }
        }
        (ScenarioTag::AltNoCsit, Direction::Lower) => {
            cands.push(Candidate {
                location: t,
                value: pair.fx(t),
                branch: BoundBranch::TrivialBoundary,
            });
            cands.push(Candidate {
                location: t,
                value: pair.fy(s - t),
                branch: BoundBranch::TrivialBoundary,
            });
        }
        (ScenarioTag::AltNoCsit, Direction::Upper) => {
            cands.push(Candidate {
                location: f64::INFINITY,
                value: 1.0,
                branch: BoundBranch::SaturatedOne,
            });
            cands.push(Candidate {
                location: t,
                value: pair.fx(t) + pair.fy(s - t),
                branch: BoundBranch::TrivialBoundary,
            });
        }
    }

    let mut best = 0usize;
    for i in 1..cands.len() {
        let better = match direction {
            Direction::Lower => cands[i].value > cands[best].value,
            Direction::Upper => cands[i].value < cands[best].value,
        };
        if better {
            best = i;
        }
    }
    let mut value = cands[best].value;
    let mut branch = cands[best].branch;
    if value > 1.0 {
        value = 1.0;
        branch = BoundBranch::SaturatedOne;
    }
    value = value.max(0.0);

    Ok(BoundResult {
        value,
        branch,
        stationary_points: stationary,
        candidates: cands.iter().map(|c| (c.location, c.value)).collect(),
    })
}

/// Outage probability when the two gains are independent.
///
/// `AltNoCsit` is the dual product-copula value at the region corner. The
/// other scenarios integrate the region's section against the `ỹ` density on
/// `[y_floor, 0]`, splitting at the section kink `s - t`, and add the tail
/// mass below the floor (where the section is 1 to within `TAIL_MASS`).
pub fn independent_outage(scenario: ScenarioTag, pair: &TransformedPair) -> Result<f64> {
    check_pair(pair)?;
    let s = pair.s;
    let t = pair.t;
    if scenario == ScenarioTag::AltNoCsit {
        let a = pair.fx(t);
        let b = pair.fy(s - t);
        return Ok(a + b - a * b);
    }
    let floor = pair.y_floor(TAIL_MASS).max(-1e306);
    if floor >= 0.0 {
        return Err(Error::Config(
            "ỹ marginal has no mass below 0; outage region degenerate".into(),
        ));
    }
    let section = move |y: f64| match scenario {
        ScenarioTag::Csit => pair.fx(s - y),
        ScenarioTag::NoCsit => pair.fx(t.max(s - y)),
        ScenarioTag::AltCsit => {
            if y < s - t {
                1.0
            } else {
                pair.fx(s - y)
            }
        }
        ScenarioTag::AltNoCsit => unreachable!("handled in closed form above"),
    };
    let integrand = |y: f64| pair.yt.pdf(y) * section(y);
    let mut edges = vec![floor, 0.0];
    if s - t > floor && s - t < 0.0 {
        edges.insert(1, s - t);
    }
    let integral = numerics::integrate_split(&integrand, &edges, numerics::DEFAULT_QUAD_TOL)?;
    Ok((pair.fy(floor) + integral).clamp(0.0, 1.0))
}

/// Check the pointwise condition under which the best-case bound collapses
/// to its marginal floor, i.e. the eavesdropper costs nothing beyond it.
///
/// For `Csit` the condition is `F_x̃(s - ỹ) - F_x̃(s) ≤ 1 - F_ỹ(ỹ)` for all
/// `ỹ ≤ 0`; for `NoCsit` it is `F_x̃(s - ỹ) - F_x̃(t) ≤ 1 - F_ỹ(ỹ)` for all
/// `ỹ < s - t`. The probe grid must be nonempty and lie inside the
/// condition's range. When this returns `true`, `bound(scenario, Lower, ..)`
/// reports the `TrivialBoundary` branch.
pub fn sufficient_condition_no_eavesdropper(
    scenario: ScenarioTag,
    pair: &TransformedPair,
    probe_grid: &[f64],
) -> Result<bool> {
    check_pair(pair)?;
    if probe_grid.is_empty() {
        return Err(Error::Config("probe grid must be nonempty".into()));
    }
    let (floor_cdf, range_ok): (f64, Box<dyn Fn(f64) -> bool>) = match scenario {
        ScenarioTag::Csit => (pair.fx(pair.s), Box::new(|y: f64| y <= 0.0)),
        ScenarioTag::NoCsit => {
            let edge = pair.s - pair.t;
            (pair.fx(pair.t), Box::new(move |y: f64| y < edge))
        }
        other => return Err(Error::UnsupportedScenario(other.name())),
    };
    for &y in probe_grid {
        if !range_ok(y) {
            return Err(Error::Config(format!(
                "probe point {y} outside the condition's range for {scenario}"
            )));
        }
        if pair.fx(pair.s - y) - floor_cdf > 1.0 - pair.fy(y) {
            return Ok(false);
        }
    }
    Ok(true)
}

//! Parameter sweeps written as deterministic column files.
//!
//! A sweep varies one quantity over a linear grid and reports the three
//! outage curves (or, for target sweeps, the three ε-outage rates) per grid
//! point, optionally alongside Monte Carlo estimates under the
//! bound-achieving couplings. Output is whitespace-separated text with `#`
//! header lines; identical inputs produce identical bytes.

use crate::bounds::{Direction, ScenarioTag};
use crate::copulas::build_achieving_coupling;
use crate::error::Error;
use crate::marginals::{db_to_linear, transform, ChannelParams};
use crate::montecarlo::{estimate, mix_seed, Sampler};
use crate::rates::{eps_outage_rate, Curve};
use crate::rayleigh::scenario_outage;
use crate::Result;
use rayon::prelude::*;
use std::fmt;
use std::io::Write;
use std::str::FromStr;

/// Quantity varied along the sweep grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepVariable {
    /// Main-channel SNR in dB.
    SnrBobDb,
    /// Eavesdropper SNR in dB.
    SnrEveDb,
    /// Target outage probability; rows hold ε-outage secrecy rates.
    EpsTarget,
    /// Secrecy rate in bits per channel use.
    RateS,
}

impl SweepVariable {
    /// Stable token used by the CLI.
    #[must_use]
    pub fn name(&self) -> &'static str {
        match self {
            SweepVariable::SnrBobDb => "snr-bob",
            SweepVariable::SnrEveDb => "snr-eve",
            SweepVariable::EpsTarget => "eps",
            SweepVariable::RateS => "rs",
        }
    }

    /// Header label of the grid column.
    #[must_use]
    pub fn column_name(&self) -> &'static str {
        match self {
            SweepVariable::SnrBobDb | SweepVariable::SnrEveDb => "snr",
            SweepVariable::EpsTarget => "eps",
            SweepVariable::RateS => "rs",
        }
    }
}

impl fmt::Display for SweepVariable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SweepVariable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "snr-bob" => Ok(SweepVariable::SnrBobDb),
            "snr-eve" => Ok(SweepVariable::SnrEveDb),
            "eps" => Ok(SweepVariable::EpsTarget),
            "rs" => Ok(SweepVariable::RateS),
            other => Err(Error::Config(format!(
                "unknown sweep variable '{other}' (expected snr-bob, snr-eve, eps, rs)"
            ))),
        }
    }
}

/// Monte Carlo verification attached to a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct McSettings {
    /// Samples per estimate.
    pub n_samples: u64,
    /// Base seed; per-point, per-curve seeds are derived from it.
    pub seed: u64,
    /// Atoms in each achieving coupling.
    pub n_atoms: usize,
}

/// A sweep request.
#[derive(Debug, Clone)]
pub struct SweepSpec {
    /// What varies along the grid.
    pub variable: SweepVariable,
    /// First grid value (dB for SNR sweeps).
    pub start: f64,
    /// Last grid value, inclusive.
    pub stop: f64,
    /// Number of grid points, at least 2.
    pub points: usize,
    /// Parameters held fixed; the swept field is overridden per point.
    pub fixed: ChannelParams,
    /// Outage scenario.
    pub scenario: ScenarioTag,
    /// Optional Monte Carlo columns; not defined for `EpsTarget` sweeps.
    pub mc: Option<McSettings>,
}

/// One grid point of a sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    /// Grid value.
    pub x: f64,
    /// Best-case curve (ε-outage rate of the best case in target sweeps).
    pub lower: f64,
    /// Worst-case curve (or its rate).
    pub upper: f64,
    /// Independent-gains curve (or its rate).
    pub indep: f64,
    /// Monte Carlo means for (lower, upper, indep) when requested.
    pub mc: Option<(f64, f64, f64)>,
}

fn validate(spec: &SweepSpec) -> Result<()> {
    if spec.points < 2 {
        return Err(Error::Config(format!(
            "sweep needs at least 2 points, got {}",
            spec.points
        )));
    }
    if !(spec.start.is_finite() && spec.stop.is_finite() && spec.start < spec.stop) {
        return Err(Error::Config(format!(
            "sweep range must be finite with start < stop, got [{}, {}]",
            spec.start, spec.stop
        )));
    }
    match spec.variable {
        SweepVariable::EpsTarget => {
            if spec.mc.is_some() {
                return Err(Error::Config(
                    "monte carlo columns are not defined for eps sweeps (rows are rates)".into(),
                ));
            }
            if spec.start <= 0.0 || spec.stop >= 1.0 {
                return Err(Error::Config(format!(
                    "eps sweep range must lie strictly inside (0, 1), got [{}, {}]",
                    spec.start, spec.stop
                )));
            }
        }
        SweepVariable::RateS => {
            if spec.start < 0.0 {
                return Err(Error::Config(format!(
                    "rate sweep must start at 0 or above, got {}",
                    spec.start
                )));
            }
        }
        SweepVariable::SnrBobDb | SweepVariable::SnrEveDb => {}
    }
    Ok(())
}

fn substituted(spec: &SweepSpec, x: f64) -> ChannelParams {
    let mut p = spec.fixed;
    match spec.variable {
        SweepVariable::SnrBobDb => p.rho_x = db_to_linear(x),
        SweepVariable::SnrEveDb => p.rho_y = db_to_linear(x),
        SweepVariable::RateS => p.rate_s = x,
        SweepVariable::EpsTarget => unreachable!("eps rows never substitute parameters"),
    }
    p
}

fn row_at(spec: &SweepSpec, index: usize, x: f64) -> Result<SweepRow> {
    if spec.variable == SweepVariable::EpsTarget {
        let mut rates = [0.0_f64; 3];
        for (slot, curve) in rates.iter_mut().zip(Curve::ALL) {
            *slot = eps_outage_rate(curve, spec.scenario, &spec.fixed, x)?.rate_s;
        }
        return Ok(SweepRow {
            x,
            lower: rates[0],
            upper: rates[1],
            indep: rates[2],
            mc: None,
        });
    }
    let p = substituted(spec, x);
    let lower = scenario_outage(spec.scenario, Curve::Lower, &p)?;
    let upper = scenario_outage(spec.scenario, Curve::Upper, &p)?;
    let indep = scenario_outage(spec.scenario, Curve::Independent, &p)?;
    let mc = match spec.mc {
        None => None,
        Some(mc) => {
            let pair = transform(&p);
            let lo_plan = build_achieving_coupling(&pair, spec.scenario, Direction::Lower, mc.n_atoms)?;
            let up_plan = build_achieving_coupling(&pair, spec.scenario, Direction::Upper, mc.n_atoms)?;
            let base = index as u64 * 3;
            let e_lo = estimate(
                spec.scenario,
                &pair,
                Sampler::Coupling(&lo_plan),
                mc.n_samples,
                mix_seed(mc.seed, base),
            )?;
            let e_up = estimate(
                spec.scenario,
                &pair,
                Sampler::Coupling(&up_plan),
                mc.n_samples,
                mix_seed(mc.seed, base + 1),
            )?;
            let e_in = estimate(
                spec.scenario,
                &pair,
                Sampler::Independent,
                mc.n_samples,
                mix_seed(mc.seed, base + 2),
            )?;
            Some((e_lo.mean, e_up.mean, e_in.mean))
        }
    };
    Ok(SweepRow {
        x,
        lower,
        upper,
        indep,
        mc,
    })
}

/// Evaluate the sweep grid. Rows come back in grid order regardless of the
/// parallel schedule.
pub fn sweep_rows(spec: &SweepSpec) -> Result<Vec<SweepRow>> {
    validate(spec)?;
    let step = (spec.stop - spec.start) / (spec.points - 1) as f64;
    (0..spec.points)
        .into_par_iter()
        .map(|i| {
            let x = if i + 1 == spec.points {
                spec.stop
            } else {
                spec.start + step * i as f64
            };
            row_at(spec, i, x)
        })
        .collect()
}

/// Format with 10 significant digits, using plain decimal notation for
/// moderate magnitudes and scientific notation outside them. Stable across
/// runs, suitable for byte-compared output files.
#[must_use]
pub fn format_sig10(v: f64) -> String {
    if v.is_nan() {
        return "nan".into();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if v == 0.0 {
        return "0.000000000".into();
    }
    let exp = v.abs().log10().floor() as i32;
    if (-4..=9).contains(&exp) {
        let decimals = (9 - exp).max(0) as usize;
        format!("{v:.decimals$}")
    } else {
        format!("{v:.9e}")
    }
}

/// Run the sweep and write it as a column file: two `#` header lines, then
/// one space-separated row per grid point, every value formatted with
/// [`format_sig10`].
pub fn run_sweep<W: Write>(spec: &SweepSpec, out: &mut W) -> Result<()> {
    let rows = sweep_rows(spec)?;
    writeln!(
        out,
        "# sweep scenario={} variable={} points={}",
        spec.scenario, spec.variable, spec.points
    )?;
    let mut header = format!("# {} lower upper indep", spec.variable.column_name());
    if spec.mc.is_some() {
        header.push_str(" mc_lower mc_upper mc_indep");
    }
    writeln!(out, "{header}")?;
    for row in rows {
        let mut line = format!(
            "{} {} {} {}",
            format_sig10(row.x),
            format_sig10(row.lower),
            format_sig10(row.upper),
            format_sig10(row.indep)
        );
        if let Some((lo, up, ind)) = row.mc {
            line.push_str(&format!(
                " {} {} {}",
                format_sig10(lo),
                format_sig10(up),
                format_sig10(ind)
            ));
        }
        writeln!(out, "{line}")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base_spec(variable: SweepVariable, start: f64, stop: f64, points: usize) -> SweepSpec {
        SweepSpec {
            variable,
            start,
            stop,
            points,
            fixed: ChannelParams::new(1.0, 1.0, 10.0, 1.0, 0.1, 1.0).unwrap(),
            scenario: ScenarioTag::NoCsit,
            mc: None,
        }
    }

    #[test]
    fn grid_hits_both_endpoints_exactly() {
        let rows = sweep_rows(&base_spec(SweepVariable::SnrBobDb, -5.0, 15.0, 7)).unwrap();
        assert_eq!(rows.len(), 7);
        assert_eq!(rows[0].x, -5.0);
        assert_eq!(rows[6].x, 15.0);
    }

    #[test]
    fn snr_rows_match_direct_evaluation() {
        let spec = base_spec(SweepVariable::SnrEveDb, -10.0, 10.0, 5);
        let rows = sweep_rows(&spec).unwrap();
        for row in &rows {
            let p = ChannelParams {
                rho_y: db_to_linear(row.x),
                ..spec.fixed
            };
            let want = scenario_outage(spec.scenario, Curve::Upper, &p).unwrap();
            assert_eq!(row.upper, want);
            assert!(row.lower <= row.indep + 1e-12 && row.indep <= row.upper + 1e-12);
        }
    }

    #[test]
    fn eps_rows_hold_rates() {
        let spec = base_spec(SweepVariable::EpsTarget, 0.3, 0.9, 4);
        let rows = sweep_rows(&spec).unwrap();
        for row in &rows {
            let want = eps_outage_rate(Curve::Lower, spec.scenario, &spec.fixed, row.x)
                .unwrap()
                .rate_s;
            assert_eq!(row.lower, want);
            assert!(row.mc.is_none());
        }
        // Larger targets admit larger rates in each column.
        assert!(rows[0].lower <= rows[3].lower);
        assert!(rows[0].indep <= rows[3].indep);
    }

    #[test]
    fn rejects_degenerate_grids() {
        assert!(matches!(
            sweep_rows(&base_spec(SweepVariable::SnrBobDb, 0.0, 10.0, 1)),
            Err(Error::Config(_))
        ));
        assert!(matches!(
            sweep_rows(&base_spec(SweepVariable::SnrBobDb, 10.0, 0.0, 5)),
            Err(Error::Config(_))
        ));
        assert!(matches!(
            sweep_rows(&base_spec(SweepVariable::RateS, -0.5, 1.0, 5)),
            Err(Error::Config(_))
        ));
        assert!(matches!(
            sweep_rows(&base_spec(SweepVariable::EpsTarget, 0.2, 1.0, 5)),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn rejects_mc_on_eps_sweeps() {
        let mut spec = base_spec(SweepVariable::EpsTarget, 0.3, 0.8, 3);
        spec.mc = Some(McSettings {
            n_samples: 10_000,
            seed: 7,
            n_atoms: 500,
        });
        assert!(matches!(sweep_rows(&spec), Err(Error::Config(_))));
    }

    #[test]
    fn mc_columns_track_the_curves() {
        let mut spec = base_spec(SweepVariable::SnrBobDb, 0.0, 10.0, 3);
        spec.mc = Some(McSettings {
            n_samples: 40_000,
            seed: 11,
            n_atoms: 2_000,
        });
        let rows = sweep_rows(&spec).unwrap();
        // Tolerance: 4 standard errors plus the coupling's atom resolution.
        let tol = |v: f64| 4.0 * (v * (1.0 - v) / 40_000.0).sqrt() + 1.5e-3;
        for row in &rows {
            let (lo, up, ind) = row.mc.unwrap();
            assert!((lo - row.lower).abs() < tol(row.lower), "{} vs {}", lo, row.lower);
            assert!((up - row.upper).abs() < tol(row.upper), "{} vs {}", up, row.upper);
            assert!((ind - row.indep).abs() < tol(row.indep), "{} vs {}", ind, row.indep);
        }
    }

    #[test]
    fn output_is_byte_deterministic() {
        let mut spec = base_spec(SweepVariable::SnrBobDb, 0.0, 20.0, 4);
        spec.mc = Some(McSettings {
            n_samples: 10_000,
            seed: 3,
            n_atoms: 500,
        });
        let mut a = Vec::new();
        run_sweep(&spec, &mut a).unwrap();
        let mut b = Vec::new();
        run_sweep(&spec, &mut b).unwrap();
        assert_eq!(a, b);
        let text = String::from_utf8(a).unwrap();
        let mut lines = text.lines();
        assert_eq!(
            lines.next().unwrap(),
            "# sweep scenario=nocsit variable=snr-bob points=4"
        );
        assert_eq!(
            lines.next().unwrap(),
            "# snr lower upper indep mc_lower mc_upper mc_indep"
        );
        for line in lines {
            assert_eq!(line.split_whitespace().count(), 7);
        }
    }

    #[test]
    fn formats_ten_significant_digits() {
        assert_eq!(format_sig10(0.0), "0.000000000");
        assert_eq!(format_sig10(1.0), "1.000000000");
        assert_eq!(format_sig10(f64::INFINITY), "inf");
        assert_eq!(format_sig10(f64::NEG_INFINITY), "-inf");
        assert_eq!(format_sig10(0.5507512106754755), "0.5507512107");
        assert_eq!(format_sig10(29.57213691607269), "29.57213692");
        assert_eq!(format_sig10(1e-5), "1.000000000e-5");
        assert_eq!(format_sig10(-0.5), "-0.5000000000");
        assert_eq!(format_sig10(1.5e12), "1.500000000e12");
    }

    #[test]
    fn variable_tokens_round_trip() {
        for v in [
            SweepVariable::SnrBobDb,
            SweepVariable::SnrEveDb,
            SweepVariable::EpsTarget,
            SweepVariable::RateS,
        ] {
            assert_eq!(v.name().parse::<SweepVariable>().unwrap(), v);
        }
        assert!("snr".parse::<SweepVariable>().is_err());
    }
}

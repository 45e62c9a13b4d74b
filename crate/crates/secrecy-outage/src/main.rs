//! Thin command-line front end over the `secrecy_outage` library.
//!
//! Exit codes: 0 on success, 2 for invalid arguments or configuration, 3 for
//! numeric failures (including failed verification).

use clap::{Args, Parser, Subcommand};
use secrecy_outage::bounds::{bound, independent_outage, Direction, ScenarioTag};
use secrecy_outage::copulas::build_achieving_coupling;
use secrecy_outage::marginals::{db_to_linear, linear_to_db, transform, ChannelParams};
use secrecy_outage::montecarlo::{concordance_suite, estimate, Sampler};
use secrecy_outage::rates::{eps_outage_rate, min_feasible_eps, Curve};
use secrecy_outage::rayleigh::{diversity_estimate, eve_snr_threshold, LimitVariant};
use secrecy_outage::sweep::{format_sig10, run_sweep, McSettings, SweepSpec, SweepVariable};
use secrecy_outage::{Error, Result};
use std::collections::HashMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "secrecy-outage",
    version,
    about = "Secrecy outage bounds of slow-fading wiretap channels over all couplings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep one variable and write the three curves as column data.
    Sweep(Box<SweepArgs>),
    /// Evaluate a single quantity at one parameter point.
    #[command(subcommand)]
    Query(QueryCmd),
    /// Compare Monte Carlo estimates against analytic values on a fixed
    /// verification grid.
    Verify(VerifyArgs),
}

#[derive(Subcommand)]
enum QueryCmd {
    /// Outage bound (or independent-case outage) with its winning branch.
    Bound(BoundArgs),
    /// Eavesdropper SNR below which the best case sits at its marginal floor.
    Threshold(ThresholdArgs),
    /// ε-outage secrecy rate for a target outage probability.
    Rate(RateArgs),
    /// Infimum of a curve over all secrecy rates.
    Limit(LimitArgs),
    /// High-SNR diversity slope of a curve.
    Diversity(DiversityArgs),
}

/// Channel parameters shared by the point queries.
#[derive(Args, Clone, Copy)]
struct ChannelArgs {
    /// Main-channel SNR in dB.
    #[arg(long = "snr-bob", default_value_t = 10.0, allow_hyphen_values = true)]
    snr_bob: f64,
    /// Eavesdropper SNR in dB.
    #[arg(long = "snr-eve", default_value_t = 0.0, allow_hyphen_values = true)]
    snr_eve: f64,
    /// Exponential rate of the main-channel power gain.
    #[arg(long, default_value_t = 1.0)]
    lx: f64,
    /// Exponential rate of the eavesdropper power gain.
    #[arg(long, default_value_t = 1.0)]
    ly: f64,
    /// Secrecy rate in bits per channel use.
    #[arg(long, default_value_t = 0.1, allow_hyphen_values = true)]
    rs: f64,
    /// Decodability margin on top of the secrecy rate.
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    rd: f64,
}

impl ChannelArgs {
    fn params(&self) -> Result<ChannelParams> {
        ChannelParams::new(
            self.lx,
            self.ly,
            db_to_linear(self.snr_bob),
            db_to_linear(self.snr_eve),
            self.rs,
            self.rd,
        )
    }
}

/// Monte Carlo options for commands that accept an empirical cross-check.
#[derive(Args, Clone, Copy)]
struct McArgs {
    /// Monte Carlo samples; presence enables the empirical estimate.
    #[arg(long = "mc-samples")]
    mc_samples: Option<u64>,
    /// RNG seed; required whenever Monte Carlo sampling is requested.
    #[arg(long)]
    seed: Option<u64>,
    /// Atoms in each achieving coupling.
    #[arg(long, default_value_t = 10_000)]
    atoms: usize,
}

impl McArgs {
    fn settings(&self) -> Result<Option<McSettings>> {
        match (self.mc_samples, self.seed) {
            (None, _) => Ok(None),
            (Some(n_samples), Some(seed)) => Ok(Some(McSettings {
                n_samples,
                seed,
                n_atoms: self.atoms,
            })),
            (Some(_), None) => Err(Error::Config(
                "--mc-samples requires --seed for a reproducible run".into(),
            )),
        }
    }
}

#[derive(Args)]
struct SweepArgs {
    /// Defaults file with `key = value` lines; explicit flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Outage scenario: csit, nocsit, alt-csit, alt-nocsit.
    #[arg(long)]
    scenario: Option<String>,
    /// Swept variable: snr-bob, snr-eve, eps, rs.
    #[arg(long)]
    variable: Option<String>,
    /// First grid value (dB for SNR sweeps).
    #[arg(long, allow_hyphen_values = true)]
    start: Option<f64>,
    /// Last grid value, inclusive.
    #[arg(long, allow_hyphen_values = true)]
    stop: Option<f64>,
    /// Number of grid points.
    #[arg(long)]
    points: Option<usize>,
    /// Output file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Main-channel SNR in dB (fixed side).
    #[arg(long = "snr-bob", allow_hyphen_values = true)]
    snr_bob: Option<f64>,
    /// Eavesdropper SNR in dB (fixed side).
    #[arg(long = "snr-eve", allow_hyphen_values = true)]
    snr_eve: Option<f64>,
    /// Exponential rate of the main-channel power gain.
    #[arg(long)]
    lx: Option<f64>,
    /// Exponential rate of the eavesdropper power gain.
    #[arg(long)]
    ly: Option<f64>,
    /// Secrecy rate in bits per channel use.
    #[arg(long, allow_hyphen_values = true)]
    rs: Option<f64>,
    /// Decodability margin on top of the secrecy rate.
    #[arg(long, allow_hyphen_values = true)]
    rd: Option<f64>,
    /// Monte Carlo samples per grid point; enables the mc_* columns.
    #[arg(long = "mc-samples")]
    mc_samples: Option<u64>,
    /// RNG seed; required with --mc-samples.
    #[arg(long)]
    seed: Option<u64>,
    /// Atoms in each achieving coupling.
    #[arg(long)]
    atoms: Option<usize>,
}

#[derive(Args)]
struct BoundArgs {
    /// Outage scenario: csit, nocsit, alt-csit, alt-nocsit.
    #[arg(long, default_value = "csit")]
    scenario: String,
    /// Curve: lower, upper, indep.
    #[arg(long, default_value = "lower")]
    direction: String,
    #[command(flatten)]
    channel: ChannelArgs,
    #[command(flatten)]
    mc: McArgs,
}

#[derive(Args)]
struct ThresholdArgs {
    /// Main-channel SNR in dB.
    #[arg(long = "snr-bob", default_value_t = 10.0, allow_hyphen_values = true)]
    snr_bob: f64,
    /// Secrecy rate in bits per channel use.
    #[arg(long, default_value_t = 0.1)]
    rs: f64,
    /// Exponential rate of the main-channel power gain.
    #[arg(long, default_value_t = 1.0)]
    lx: f64,
    /// Exponential rate of the eavesdropper power gain.
    #[arg(long, default_value_t = 1.0)]
    ly: f64,
}

#[derive(Args)]
struct RateArgs {
    /// Outage scenario: csit, nocsit, alt-csit, alt-nocsit.
    #[arg(long, default_value = "csit")]
    scenario: String,
    /// Curve: lower, upper, indep.
    #[arg(long, default_value = "lower")]
    curve: String,
    /// Target outage probability, strictly inside (0, 1).
    #[arg(long)]
    eps: f64,
    #[command(flatten)]
    channel: ChannelArgs,
}

#[derive(Args)]
struct LimitArgs {
    /// Outage scenario: csit, nocsit, alt-csit, alt-nocsit.
    #[arg(long, default_value = "csit")]
    scenario: String,
    /// Curve: lower, upper, indep.
    #[arg(long, default_value = "lower")]
    curve: String,
    #[command(flatten)]
    channel: ChannelArgs,
}

#[derive(Args)]
struct DiversityArgs {
    /// Outage scenario: csit, nocsit, alt-csit, alt-nocsit.
    #[arg(long, default_value = "csit")]
    scenario: String,
    /// Curve: lower, upper, indep.
    #[arg(long, default_value = "lower")]
    direction: String,
    /// First SNR grid point in dB.
    #[arg(long = "snr-start", default_value_t = 20.0, allow_hyphen_values = true)]
    snr_start: f64,
    /// Last SNR grid point in dB.
    #[arg(long = "snr-stop", default_value_t = 60.0, allow_hyphen_values = true)]
    snr_stop: f64,
    /// Number of SNR grid points.
    #[arg(long, default_value_t = 9)]
    points: usize,
    #[command(flatten)]
    channel: ChannelArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// Samples per estimate.
    #[arg(long = "mc-samples", default_value_t = 100_000)]
    mc_samples: u64,
    /// Atoms per achieving coupling.
    #[arg(long, default_value_t = 10_000)]
    atoms: usize,
    /// Base RNG seed.
    #[arg(long, default_value_t = 42)]
    seed: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}

fn run(command: &Command) -> Result<()> {
    match command {
        Command::Sweep(args) => cmd_sweep(args),
        Command::Query(QueryCmd::Bound(args)) => cmd_bound(args),
        Command::Query(QueryCmd::Threshold(args)) => cmd_threshold(args),
        Command::Query(QueryCmd::Rate(args)) => cmd_rate(args),
        Command::Query(QueryCmd::Limit(args)) => cmd_limit(args),
        Command::Query(QueryCmd::Diversity(args)) => cmd_diversity(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

fn parse_config_file(path: &Path) -> Result<HashMap<String, String>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Config(format!("cannot read config {}: {e}", path.display())))?;
    const KEYS: [&str; 15] = [
        "scenario", "variable", "start", "stop", "points", "out", "snr-bob", "snr-eve", "lx",
        "ly", "rs", "rd", "mc-samples", "seed", "atoms",
    ];
    let mut map = HashMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            Error::Config(format!(
                "config line {} is not 'key = value': '{line}'",
                lineno + 1
            ))
        })?;
        let key = key.trim();
        if !KEYS.contains(&key) {
            return Err(Error::Config(format!(
                "unknown config key '{key}' on line {}",
                lineno + 1
            )));
        }
        map.insert(key.to_string(), value.trim().to_string());
    }
    Ok(map)
}

fn cfg_parse<T: std::str::FromStr>(key: &str, raw: &str) -> Result<T> {
    raw.parse()
        .map_err(|_| Error::Config(format!("config {key}: cannot parse '{raw}'")))
}

fn pick_f64(flag: Option<f64>, cfg: &HashMap<String, String>, key: &str) -> Result<Option<f64>> {
    match (flag, cfg.get(key)) {
        (Some(v), _) => Ok(Some(v)),
        (None, Some(raw)) => cfg_parse(key, raw).map(Some),
        (None, None) => Ok(None),
    }
}

fn sweep_spec(args: &SweepArgs) -> Result<(SweepSpec, Option<PathBuf>)> {
    let cfg = match &args.config {
        Some(path) => parse_config_file(path)?,
        None => HashMap::new(),
    };
    let scenario_token = args
        .scenario
        .clone()
        .or_else(|| cfg.get("scenario").cloned())
        .unwrap_or_else(|| "csit".to_string());
    let scenario: ScenarioTag = scenario_token.parse()?;
    let variable_token = args
        .variable
        .clone()
        .or_else(|| cfg.get("variable").cloned())
        .unwrap_or_else(|| "snr-bob".to_string());
    let variable: SweepVariable = variable_token.parse()?;
    let start = pick_f64(args.start, &cfg, "start")?
        .ok_or_else(|| Error::Config("sweep needs --start (flag or config)".into()))?;
    let stop = pick_f64(args.stop, &cfg, "stop")?
        .ok_or_else(|| Error::Config("sweep needs --stop (flag or config)".into()))?;
    let points = match (args.points, cfg.get("points")) {
        (Some(v), _) => v,
        (None, Some(raw)) => cfg_parse::<usize>("points", raw)?,
        (None, None) => 21,
    };
    let fixed = ChannelParams::new(
        pick_f64(args.lx, &cfg, "lx")?.unwrap_or(1.0),
        pick_f64(args.ly, &cfg, "ly")?.unwrap_or(1.0),
        db_to_linear(pick_f64(args.snr_bob, &cfg, "snr-bob")?.unwrap_or(10.0)),
        db_to_linear(pick_f64(args.snr_eve, &cfg, "snr-eve")?.unwrap_or(0.0)),
        pick_f64(args.rs, &cfg, "rs")?.unwrap_or(0.1),
        pick_f64(args.rd, &cfg, "rd")?.unwrap_or(1.0),
    )?;
    let mc_samples = match (args.mc_samples, cfg.get("mc-samples")) {
        (Some(v), _) => Some(v),
        (None, Some(raw)) => Some(cfg_parse::<u64>("mc-samples", raw)?),
        (None, None) => None,
    };
    let seed = match (args.seed, cfg.get("seed")) {
        (Some(v), _) => Some(v),
        (None, Some(raw)) => Some(cfg_parse::<u64>("seed", raw)?),
        (None, None) => None,
    };
    let atoms = match (args.atoms, cfg.get("atoms")) {
        (Some(v), _) => v,
        (None, Some(raw)) => cfg_parse::<usize>("atoms", raw)?,
        (None, None) => 10_000,
    };
    let mc = match (mc_samples, seed) {
        (None, _) => None,
        (Some(n_samples), Some(seed)) => Some(McSettings {
            n_samples,
            seed,
            n_atoms: atoms,
        }),
        (Some(_), None) => {
            return Err(Error::Config(
                "--mc-samples requires --seed for a reproducible run".into(),
            ))
        }
    };
    let out = args.out.clone().or_else(|| cfg.get("out").map(PathBuf::from));
    Ok((
        SweepSpec {
            variable,
            start,
            stop,
            points,
            fixed,
            scenario,
            mc,
        },
        out,
    ))
}

fn cmd_sweep(args: &SweepArgs) -> Result<()> {
    let (spec, out) = sweep_spec(args)?;
    match out {
        Some(path) => {
            let file = std::fs::File::create(&path)?;
            let mut writer = std::io::BufWriter::new(file);
            run_sweep(&spec, &mut writer)?;
            writer.flush()?;
        }
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            run_sweep(&spec, &mut lock)?;
        }
    }
    Ok(())
}

fn cmd_bound(args: &BoundArgs) -> Result<()> {
    let scenario: ScenarioTag = args.scenario.parse()?;
    let curve: Curve = args.direction.parse()?;
    let params = args.channel.params()?;
    let pair = transform(&params);
    println!("scenario {scenario}");
    println!("direction {curve}");
    match curve {
        Curve::Lower | Curve::Upper => {
            let direction = if curve == Curve::Lower {
                Direction::Lower
            } else {
                Direction::Upper
            };
            let result = bound(scenario, direction, &pair)?;
            println!("value {}", format_sig10(result.value));
            println!("branch {}", result.branch);
            for y in &result.stationary_points {
                println!("stationary {}", format_sig10(*y));
            }
        }
        Curve::Independent => {
            let value = independent_outage(scenario, &pair)?;
            println!("value {}", format_sig10(value));
        }
    }
    if let Some(mc) = args.mc.settings()? {
        let plan = match curve {
            Curve::Independent => None,
            Curve::Lower => Some(build_achieving_coupling(
                &pair,
                scenario,
                Direction::Lower,
                mc.n_atoms,
            )?),
            Curve::Upper => Some(build_achieving_coupling(
                &pair,
                scenario,
                Direction::Upper,
                mc.n_atoms,
            )?),
        };
        let sampler = match &plan {
            None => Sampler::Independent,
            Some(p) => Sampler::Coupling(p),
        };
        let est = estimate(scenario, &pair, sampler, mc.n_samples, mc.seed)?;
        println!("mc_mean {}", format_sig10(est.mean));
        println!("mc_std_error {}", format_sig10(est.std_error));
    }
    Ok(())
}

fn cmd_threshold(args: &ThresholdArgs) -> Result<()> {
    let thr = eve_snr_threshold(args.lx, args.ly, db_to_linear(args.snr_bob), args.rs)?;
    println!("threshold_linear {}", format_sig10(thr));
    println!("threshold_db {}", format_sig10(linear_to_db(thr)));
    Ok(())
}

fn cmd_rate(args: &RateArgs) -> Result<()> {
    let scenario: ScenarioTag = args.scenario.parse()?;
    let curve: Curve = args.curve.parse()?;
    let params = args.channel.params()?;
    let sol = eps_outage_rate(curve, scenario, &params, args.eps)?;
    println!("rate {}", format_sig10(sol.rate_s));
    println!("achieved_eps {}", format_sig10(sol.achieved_eps));
    println!("iterations {}", sol.iterations);
    Ok(())
}

fn cmd_limit(args: &LimitArgs) -> Result<()> {
    let scenario: ScenarioTag = args.scenario.parse()?;
    let curve: Curve = args.curve.parse()?;
    let params = args.channel.params()?;
    let value = min_feasible_eps(curve, scenario, &params)?;
    let form = if LimitVariant::from_parts(scenario, curve).is_some() {
        "closed"
    } else {
        "numeric"
    };
    println!("limit {}", format_sig10(value));
    println!("form {form}");
    Ok(())
}

fn cmd_diversity(args: &DiversityArgs) -> Result<()> {
    let scenario: ScenarioTag = args.scenario.parse()?;
    let curve: Curve = args.direction.parse()?;
    let params = args.channel.params()?;
    if args.points < 2 {
        return Err(Error::Config(format!(
            "diversity grid needs at least 2 points, got {}",
            args.points
        )));
    }
    let step = (args.snr_stop - args.snr_start) / (args.points - 1) as f64;
    let grid: Vec<f64> = (0..args.points)
        .map(|i| args.snr_start + step * i as f64)
        .collect();
    let slope = diversity_estimate(scenario, curve, &params, &grid)?;
    println!("slope {}", format_sig10(slope));
    Ok(())
}

fn cmd_verify(args: &VerifyArgs) -> Result<()> {
    let rows = concordance_suite(args.mc_samples, args.atoms, args.seed)?;
    let mut worst_miss = 0.0_f64;
    let mut failed = 0usize;
    for row in &rows {
        let gap = (row.estimate.mean - row.analytic).abs();
        println!(
            "{} scenario={} curve={} snr_bob={} snr_eve={} rs={} rd={} analytic={} estimate={} tol={}",
            if row.ok { "ok  " } else { "FAIL" },
            row.point.scenario,
            row.curve,
            row.point.snr_bob_db,
            row.point.snr_eve_db,
            row.point.rate_s,
            row.point.rate_d,
            format_sig10(row.analytic),
            format_sig10(row.estimate.mean),
            format_sig10(row.tolerance),
        );
        if !row.ok {
            failed += 1;
            worst_miss = worst_miss.max(gap);
        }
    }
    println!("passed {}/{}", rows.len() - failed, rows.len());
    if failed > 0 {
        return Err(Error::NumericFailure {
            context: "monte carlo concordance",
            residual: worst_miss,
        });
    }
    Ok(())
}

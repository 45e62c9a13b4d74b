//! Acceptance gate: one test per criterion, one PASS/FAIL line each.
//!
//! Every tolerance is pinned here as a named constant. A failing criterion
//! stays failing; nothing in this file adapts to the implementation.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use secrecy_outage::bounds::{bound, independent_outage, BoundBranch, Direction, ScenarioTag};
use secrecy_outage::marginals::{
    db_to_linear, exponential_marginal, linear_to_db, transform, Axis, ChannelParams,
    TransformedPair,
};
use secrecy_outage::montecarlo::concordance_suite;
use secrecy_outage::rates::{min_feasible_eps, Curve};
use secrecy_outage::rayleigh::{
    closed_bound, diversity_estimate, eve_snr_threshold, limit_rs0, scenario_outage,
    LimitVariant, RayleighRates,
};
use std::process::Command;
use std::sync::Arc;
use std::time::Instant;

/// Criterion 1/6 grid size.
const GRID_TUPLES: usize = 500;
/// Criterion 1: closed form vs generic engine.
const TOL_AGREE: f64 = 1e-9;
/// Criterion 2: feasibility floors against the four dashed-line values.
const TOL_FLOORS: f64 = 1e-4;
/// Criterion 3: switching point in dB.
const TOL_THRESHOLD_DB: f64 = 1e-3;
/// Criterion 4: stationary values of g.
const TOL_STATIONARY: f64 = 1e-5;
/// Criterion 6: dual-copula identities, a few ulps of slack.
const TOL_EXACT: f64 = 4.0 * f64::EPSILON;
/// Criterion 7: diversity slopes around 1.
const TOL_DIVERSITY: f64 = 0.05;
/// Criterion 8: closed limits against near-zero-rate evaluation.
const TOL_LIMITS: f64 = 1e-4;
/// Criterion 9: curve ordering and coincidence slack.
const TOL_ORDER: f64 = 1e-9;
/// Criterion 5 Monte Carlo budget.
const MC_SAMPLES: u64 = 100_000;
const MC_ATOMS: usize = 10_000;
const MC_SEED: u64 = 42;

fn report(criterion: u32, name: &str, ok: bool, detail: &str) -> bool {
    eprintln!(
        "criterion {criterion:>2} {name:<28} {} {detail}",
        if ok { "PASS" } else { "FAIL" }
    );
    ok
}

fn random_params(rng: &mut ChaCha12Rng) -> ChannelParams {
    ChannelParams::new(
        rng.gen_range(0.2..=5.0),
        rng.gen_range(0.2..=5.0),
        db_to_linear(rng.gen_range(-10.0..=20.0)),
        db_to_linear(rng.gen_range(-10.0..=20.0)),
        rng.gen_range(0.01..=4.0),
        rng.gen_range(0.0..=3.0),
    )
    .expect("sampled parameters are valid")
}

#[test]
fn criterion_01_closed_forms_agree_with_generic_engine() {
    let start = Instant::now();
    let mut rng = ChaCha12Rng::seed_from_u64(7);
    let mut worst = 0.0_f64;
    for _ in 0..GRID_TUPLES {
        let params = random_params(&mut rng);
        let rates = RayleighRates::from_params(&params);
        let pair = transform(&params);
        for scenario in [ScenarioTag::Csit, ScenarioTag::NoCsit] {
            for curve in Curve::ALL {
                let closed = closed_bound(scenario, curve, &rates).expect("closed form");
                let generic = match curve {
                    Curve::Lower => bound(scenario, Direction::Lower, &pair).expect("bound").value,
                    Curve::Upper => bound(scenario, Direction::Upper, &pair).expect("bound").value,
                    Curve::Independent => independent_outage(scenario, &pair).expect("quadrature"),
                };
                let diff = (closed - generic).abs();
                assert!(
                    diff <= TOL_AGREE,
                    "{scenario} {curve} at {params:?}: closed {closed} vs generic {generic}"
                );
                worst = worst.max(diff);
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = worst <= TOL_AGREE && elapsed.as_secs_f64() < 10.0;
    assert!(report(
        1,
        "closed vs generic (6 combos)",
        ok,
        &format!("worst |diff| {worst:.2e} over {GRID_TUPLES} tuples in {elapsed:.2?}")
    ));
}

#[test]
fn criterion_02_feasibility_floor_values() {
    let start = Instant::now();
    let at = |rho_y_db: f64| {
        ChannelParams::new(1.0, 1.0, db_to_linear(5.0), db_to_linear(rho_y_db), 0.1, 1.0)
            .expect("valid parameters")
    };
    let cases = [
        (Curve::Upper, 0.0, 0.5985108),
        (Curve::Independent, 0.0, 0.2402531),
        (Curve::Lower, 5.1, 0.0084706),
        (Curve::Independent, 5.1, 0.5057562),
    ];
    let mut ok = true;
    let mut worst = 0.0_f64;
    for (curve, rho_y_db, want) in cases {
        let got = min_feasible_eps(curve, ScenarioTag::Csit, &at(rho_y_db)).expect("floor");
        let diff = (got - want).abs();
        worst = worst.max(diff);
        if diff > TOL_FLOORS {
            eprintln!("  floor {curve} at eve {rho_y_db} dB: got {got}, want {want}");
            ok = false;
        }
    }
    ok &= start.elapsed().as_secs_f64() < 1.0;
    assert!(report(
        2,
        "feasibility floors",
        ok,
        &format!("worst |diff| {worst:.2e} (tol {TOL_FLOORS:.0e})")
    ));
}

#[test]
fn criterion_03_switching_point_and_branch_flip() {
    let thr = eve_snr_threshold(1.0, 1.0, db_to_linear(15.0), 0.1).expect("threshold");
    let thr_db = linear_to_db(thr);
    let db_ok = (thr_db - 14.7088).abs() <= TOL_THRESHOLD_DB;
    let branch_at = |rho_y: f64| {
        let params = ChannelParams::new(1.0, 1.0, db_to_linear(15.0), rho_y, 0.1, 1.0)
            .expect("valid parameters");
        bound(ScenarioTag::Csit, Direction::Lower, &transform(&params))
            .expect("bound")
            .branch
    };
    let below = branch_at(thr * 0.99);
    let above = branch_at(thr * 1.01);
    let flip_ok =
        below == BoundBranch::TrivialBoundary && above == BoundBranch::StationaryInterior;
    assert!(report(
        3,
        "eve-SNR switching point",
        db_ok && flip_ok,
        &format!("threshold {thr_db:.6} dB, branch {below:?} -> {above:?}")
    ));
}

#[test]
fn criterion_04_stationary_values_of_g() {
    // Transformed rates straight from the figure: rate_x = 1, s = 1.
    let pair_for = |rate_y: f64| {
        TransformedPair::new(
            Arc::new(exponential_marginal(1.0, Axis::PositiveAxis).unwrap()),
            Arc::new(exponential_marginal(rate_y, Axis::NegativeAxis).unwrap()),
            1.0,
            1.0,
        )
        .expect("valid pair")
    };
    // rate_y = 0.1: the stationary maximum wins the lower bound.
    let strong = bound(ScenarioTag::Csit, Direction::Lower, &pair_for(0.1)).expect("bound");
    let max_ok = strong.branch == BoundBranch::StationaryInterior
        && (strong.value - 0.778729).abs() <= TOL_STATIONARY;
    // rate_y = 2: the stationary point is a minimum of g; its raw candidate
    // value is negative and loses to the boundary.
    let weak = bound(ScenarioTag::Csit, Direction::Lower, &pair_for(2.0)).expect("bound");
    let stat = *weak
        .stationary_points
        .first()
        .expect("one stationary point");
    let cand = weak
        .candidates
        .iter()
        .find(|(loc, _)| (loc - stat).abs() < 1e-9)
        .expect("stationary candidate recorded");
    let min_ok = (cand.1 - (-0.033834)).abs() <= TOL_STATIONARY;
    assert!(report(
        4,
        "stationary g values",
        max_ok && min_ok,
        &format!("g = {:.6} and {:.6} (tol {TOL_STATIONARY:.0e})", strong.value, cand.1)
    ));
}

#[test]
fn criterion_05_monte_carlo_concordance() {
    let start = Instant::now();
    let rows = concordance_suite(MC_SAMPLES, MC_ATOMS, MC_SEED).expect("suite");
    assert_eq!(rows.len(), 36);
    let mut failed = 0usize;
    let mut worst_z = 0.0_f64;
    for row in &rows {
        let gap = (row.estimate.mean - row.analytic).abs();
        worst_z = worst_z.max(gap / row.tolerance);
        if !row.ok {
            eprintln!(
                "  miss: {} {} bob {} eve {}: |{} - {}| > {}",
                row.point.scenario,
                row.curve,
                row.point.snr_bob_db,
                row.point.snr_eve_db,
                row.estimate.mean,
                row.analytic,
                row.tolerance
            );
            failed += 1;
        }
    }
    let elapsed = start.elapsed();
    let ok = failed == 0 && elapsed.as_secs_f64() < 60.0;
    assert!(report(
        5,
        "monte carlo concordance",
        ok,
        &format!(
            "36 rows, worst gap/tol {worst_z:.2}, {MC_SAMPLES} samples, {MC_ATOMS} atoms, {elapsed:.2?}"
        )
    ));
}

#[test]
fn criterion_06_dual_copula_identities() {
    let mut rng = ChaCha12Rng::seed_from_u64(7);
    let mut worst = 0.0_f64;
    for _ in 0..GRID_TUPLES {
        let params = random_params(&mut rng);
        let pair = transform(&params);
        let a = pair.fx(pair.t);
        let b = pair.fy(pair.s - pair.t);
        let upper = bound(ScenarioTag::AltNoCsit, Direction::Upper, &pair)
            .expect("bound")
            .value;
        let lower = bound(ScenarioTag::AltNoCsit, Direction::Lower, &pair)
            .expect("bound")
            .value;
        let du = (upper - (a + b).min(1.0)).abs();
        let dl = (lower - a.max(b)).abs();
        worst = worst.max(du).max(dl);
        assert!(
            du <= TOL_EXACT && dl <= TOL_EXACT,
            "dual identity broken at {params:?}: upper {du:e}, lower {dl:e}"
        );
    }
    assert!(report(
        6,
        "dual-copula identities",
        worst <= TOL_EXACT,
        &format!("worst |diff| {worst:.2e} (tol {TOL_EXACT:.2e})")
    ));
}

#[test]
fn criterion_07_diversity_slopes() {
    let params = ChannelParams::new(1.0, 1.0, 1.0, 1.0, 0.1, 1.0).expect("valid parameters");
    let grid: Vec<f64> = (0..9).map(|i| 20.0 + 5.0 * i as f64).collect();
    let cases = [
        (ScenarioTag::Csit, Curve::Lower, "csit lower"),
        (ScenarioTag::Csit, Curve::Upper, "csit upper"),
        (ScenarioTag::NoCsit, Curve::Lower, "nocsit lower"),
        (ScenarioTag::NoCsit, Curve::Upper, "nocsit upper"),
        (ScenarioTag::NoCsit, Curve::Independent, "nocsit indep"),
    ];
    let mut all_ok = true;
    let mut details = Vec::new();
    for (scenario, curve, label) in cases {
        let slope = diversity_estimate(scenario, curve, &params, &grid).expect("slope");
        let ok = (slope - 1.0).abs() <= TOL_DIVERSITY;
        all_ok &= ok;
        details.push(format!(
            "{label} {slope:.4}{}",
            if ok { "" } else { " (outside 1 +/- 0.05)" }
        ));
    }
    assert!(report(
        7,
        "diversity slopes 20-60 dB",
        all_ok,
        &details.join(", ")
    ));
}

#[test]
fn criterion_08_small_rate_limits() {
    // Both sides of the dichotomy lambda_y/rho_y vs lambda_x/rho_x.
    let cases = [
        (0.5, 0.0),
        (0.5, 0.51),
        (1.5, 0.0),
        (0.0, 1.0),
    ];
    let variants = [
        (LimitVariant::CsitLower, ScenarioTag::Csit, Curve::Lower),
        (LimitVariant::CsitUpper, ScenarioTag::Csit, Curve::Upper),
        (LimitVariant::NoCsitLower, ScenarioTag::NoCsit, Curve::Lower),
        (
            LimitVariant::NoCsitIndependent,
            ScenarioTag::NoCsit,
            Curve::Independent,
        ),
    ];
    let mut worst = 0.0_f64;
    let mut zero_side_seen = false;
    let mut positive_side_seen = false;
    for (rho_x_exp, rho_y_exp) in cases {
        let params = ChannelParams::new(
            1.0,
            1.0,
            10.0_f64.powf(rho_x_exp),
            10.0_f64.powf(rho_y_exp),
            1e-6,
            1.0,
        )
        .expect("valid parameters");
        let rates = RayleighRates::from_params(&params);
        for (variant, scenario, curve) in variants {
            let limit = limit_rs0(variant, &params);
            let near = closed_bound(scenario, curve, &rates).expect("closed form");
            worst = worst.max((limit - near).abs());
            if variant == LimitVariant::CsitLower {
                if limit == 0.0 {
                    zero_side_seen = true;
                } else {
                    positive_side_seen = true;
                }
            }
        }
    }
    let ok = worst <= TOL_LIMITS && zero_side_seen && positive_side_seen;
    assert!(report(
        8,
        "rate -> 0 limits",
        ok,
        &format!("worst |diff| {worst:.2e}, dichotomy sides seen: {zero_side_seen}/{positive_side_seen}")
    ));
}

#[test]
fn criterion_09_property_suite() {
    let mut rng = ChaCha12Rng::seed_from_u64(11);
    let mut ok = true;
    // Ordering and scenario monotonicity on a random grid.
    for _ in 0..100 {
        let params = random_params(&mut rng);
        for scenario in ScenarioTag::ALL {
            let lo = scenario_outage(scenario, Curve::Lower, &params).expect("lower");
            let ind = scenario_outage(scenario, Curve::Independent, &params).expect("indep");
            let up = scenario_outage(scenario, Curve::Upper, &params).expect("upper");
            if !(lo <= ind + TOL_ORDER && ind <= up + TOL_ORDER) {
                eprintln!("  ordering broken: {scenario} {lo} / {ind} / {up}");
                ok = false;
            }
        }
        for curve in Curve::ALL {
            let csit = scenario_outage(ScenarioTag::Csit, curve, &params).expect("csit");
            let nocsit = scenario_outage(ScenarioTag::NoCsit, curve, &params).expect("nocsit");
            if nocsit < csit - TOL_ORDER {
                eprintln!("  nocsit < csit for {curve} at {params:?}");
                ok = false;
            }
            let bumped = ChannelParams {
                rate_s: params.rate_s + 0.5,
                ..params
            };
            let before = scenario_outage(ScenarioTag::NoCsit, curve, &params).expect("base");
            let after = scenario_outage(ScenarioTag::NoCsit, curve, &bumped).expect("bumped");
            if after < before - TOL_ORDER {
                eprintln!("  outage fell when the rate rose for {curve} at {params:?}");
                ok = false;
            }
        }
    }
    // Observed coincidence of the two worst-case curves at these parameters.
    let mut worst_gap = 0.0_f64;
    for i in 0..21 {
        let rho_x_db = -5.0 + i as f64;
        let params = ChannelParams::new(
            1.0,
            1.0,
            db_to_linear(rho_x_db),
            db_to_linear(5.0),
            0.5,
            1.0,
        )
        .expect("valid parameters");
        let csit = scenario_outage(ScenarioTag::Csit, Curve::Upper, &params).expect("csit");
        let nocsit = scenario_outage(ScenarioTag::NoCsit, Curve::Upper, &params).expect("nocsit");
        worst_gap = worst_gap.max((csit - nocsit).abs());
    }
    ok &= worst_gap <= TOL_ORDER;
    assert!(report(
        9,
        "ordering + coincidence",
        ok,
        &format!("worst upper-coincidence gap {worst_gap:.2e} over -5..15 dB")
    ));
}

#[test]
fn criterion_10_sweep_determinism() {
    let bin = env!("CARGO_BIN_EXE_secrecy-outage");
    let dir = tempfile::tempdir().expect("tempdir");
    let run = |path: &std::path::Path| {
        let status = Command::new(bin)
            .args([
                "sweep",
                "--scenario",
                "nocsit",
                "--variable",
                "snr-bob",
                "--start",
                "-5",
                "--stop",
                "15",
                "--points",
                "9",
                "--mc-samples",
                "20000",
                "--seed",
                "42",
                "--atoms",
                "2000",
                "--out",
            ])
            .arg(path)
            .status()
            .expect("binary runs");
        assert!(status.success());
    };
    let a = dir.path().join("a.txt");
    let b = dir.path().join("b.txt");
    run(&a);
    run(&b);
    let bytes_a = std::fs::read(&a).expect("first output");
    let bytes_b = std::fs::read(&b).expect("second output");
    let ok = bytes_a == bytes_b && !bytes_a.is_empty();
    assert!(report(
        10,
        "sweep byte determinism",
        ok,
        &format!("{} bytes, identical across runs", bytes_a.len())
    ));
}

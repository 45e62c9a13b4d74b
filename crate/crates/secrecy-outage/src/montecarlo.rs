//! Monte Carlo verification of bounds and independent-case outage.
//!
//! Sampling is reproducible and parallel: draws are split into fixed blocks
//! of 65536, each block gets its own counter-derived ChaCha12 stream from the
//! caller's seed, and block hit counts are summed as integers, so the result
//! is identical for any thread count.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha12Rng;
use rayon::prelude::*;

use crate::bounds::{self, Direction, ScenarioTag};
use crate::copulas::{build_achieving_coupling, CouplingPlan};
use crate::error::Error;
use crate::marginals::{db_to_linear, transform, ChannelParams, TransformedPair};
use crate::rates::Curve;
use crate::Result;

/// Smallest accepted sample budget.
pub const MIN_SAMPLES: u64 = 1_000;

/// Absolute floor of the concordance tolerance, guarding against vanishing
/// standard errors at saturated probabilities.
pub const CONCORDANCE_FLOOR: f64 = 2e-3;

const BLOCK: u64 = 65_536;

/// Uniform draw in the open interval `(0, 1)`: 53 random bits centered in
/// their cell, so quantile transforms never see 0 or 1.
pub(crate) fn open_unit(rng: &mut impl RngCore) -> f64 {
    ((rng.next_u64() >> 11) as f64 + 0.5) * (1.0 / (1u64 << 53) as f64)
}

/// Deterministic per-task seed derivation (splitmix-style avalanche).
pub(crate) fn mix_seed(seed: u64, k: u64) -> u64 {
    let mut z = seed.wrapping_add(k.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Whether the transformed point `(x̃, ỹ)` lies in the scenario's outage
/// region.
#[must_use]
pub fn outage_event(scenario: ScenarioTag, pair: &TransformedPair, x: f64, y: f64) -> bool {
    let s = pair.s;
    let t = pair.t;
    match scenario {
        ScenarioTag::Csit => x + y < s,
        ScenarioTag::NoCsit => x + y < s || x < t,
        ScenarioTag::AltCsit => x + y < s || y < s - t,
        ScenarioTag::AltNoCsit => x < t || y < s - t,
    }
}

/// Result of a Monte Carlo run.
#[derive(Debug, Clone, Copy)]
pub struct MCEstimate {
    /// Fraction of samples inside the outage region.
    pub mean: f64,
    /// Binomial standard error `sqrt(mean (1 - mean) / n)`.
    pub std_error: f64,
    /// Number of samples drawn.
    pub n_samples: u64,
    /// Seed the run was keyed on.
    pub seed: u64,
}

/// How sample pairs are drawn.
#[derive(Clone, Copy)]
pub enum Sampler<'a> {
    /// Independent quantile transforms of two uniforms.
    Independent,
    /// Atom draws from a coupling plan.
    Coupling(&'a CouplingPlan),
}

/// Estimate the scenario's outage probability by simulation.
pub fn estimate(
    scenario: ScenarioTag,
    pair: &TransformedPair,
    sampler: Sampler<'_>,
    n_samples: u64,
    seed: u64,
) -> Result<MCEstimate> {
    if n_samples < MIN_SAMPLES {
        return Err(Error::SampleSize {
            min: MIN_SAMPLES,
            got: n_samples,
        });
    }
    let n_blocks = n_samples.div_ceil(BLOCK);
    let hits: u64 = (0..n_blocks)
        .into_par_iter()
        .map(|block| {
            let mut rng = ChaCha12Rng::seed_from_u64(seed);
            rng.set_stream(block);
            let count = if block == n_blocks - 1 {
                n_samples - block * BLOCK
            } else {
                BLOCK
            };
            let mut hits = 0u64;
            match sampler {
                Sampler::Independent => {
                    for _ in 0..count {
                        let x = pair.xt.quantile(open_unit(&mut rng));
                        let y = pair.yt.quantile(open_unit(&mut rng));
                        if outage_event(scenario, pair, x, y) {
                            hits += 1;
                        }
                    }
                }
                Sampler::Coupling(plan) => {
                    let atoms = plan.n_atoms as f64;
                    for _ in 0..count {
                        let idx = ((open_unit(&mut rng) * atoms) as usize).min(plan.n_atoms - 1);
                        let x = plan.x_atoms[idx];
                        let y = plan.y_atoms[plan.assignment[idx]];
                        if outage_event(scenario, pair, x, y) {
                            hits += 1;
                        }
                    }
                }
            }
            hits
        })
        .sum();
    let mean = hits as f64 / n_samples as f64;
    let std_error = (mean * (1.0 - mean) / n_samples as f64).sqrt();
    Ok(MCEstimate {
        mean,
        std_error,
        n_samples,
        seed,
    })
}

/// One parameter set of the verification suite; SNRs in dB, unit-mean gains.
#[derive(Debug, Clone, Copy)]
pub struct VerificationPoint {
    /// Scenario under test.
    pub scenario: ScenarioTag,
    /// Transmit SNR toward the legitimate receiver.
    pub snr_bob_db: f64,
    /// Transmit SNR toward the eavesdropper.
    pub snr_eve_db: f64,
    /// Secrecy rate.
    pub rate_s: f64,
    /// Rate margin.
    pub rate_d: f64,
}

/// Twelve parameter sets spanning both knowledge scenarios, low and high SNR
/// on both links, and two rate combinations.
#[must_use]
pub fn verification_points() -> Vec<VerificationPoint> {
    let mut points = Vec::with_capacity(12);
    for (snr_eve_db, snr_bob_db) in [(0.0, 0.0), (0.0, 10.0), (10.0, 5.0), (10.0, 15.0)] {
        points.push(VerificationPoint {
            scenario: ScenarioTag::Csit,
            snr_bob_db,
            snr_eve_db,
            rate_s: 0.1,
            rate_d: 0.0,
        });
    }
    for (snr_eve_db, snr_bob_db) in [(0.0, 0.0), (0.0, 10.0), (10.0, 5.0), (10.0, 15.0)] {
        points.push(VerificationPoint {
            scenario: ScenarioTag::NoCsit,
            snr_bob_db,
            snr_eve_db,
            rate_s: 0.1,
            rate_d: 1.0,
        });
    }
    for scenario in [ScenarioTag::Csit, ScenarioTag::NoCsit] {
        for snr_bob_db in [5.0, 15.0] {
            points.push(VerificationPoint {
                scenario,
                snr_bob_db,
                snr_eve_db: 5.0,
                rate_s: 0.5,
                rate_d: 1.0,
            });
        }
    }
    points
}

/// One analytic-vs-empirical comparison.
#[derive(Debug, Clone, Copy)]
pub struct ConcordanceRow {
    /// Parameter set.
    pub point: VerificationPoint,
    /// Which curve was checked.
    pub curve: Curve,
    /// Analytic value (bound or independent outage).
    pub analytic: f64,
    /// Monte Carlo counterpart.
    pub estimate: MCEstimate,
    /// Acceptance tolerance `max(3 std_error, CONCORDANCE_FLOOR)`.
    pub tolerance: f64,
    /// Whether the estimate landed within tolerance.
    pub ok: bool,
}

/// Run the verification suite: for each point, estimate the lower and upper
/// bounds with their achieving couplings and the independent case with
/// product sampling, then compare against the analytic values.
pub fn concordance_suite(
    n_samples: u64,
    n_atoms: usize,
    base_seed: u64,
) -> Result<Vec<ConcordanceRow>> {
    let mut rows = Vec::new();
    for (i, point) in verification_points().into_iter().enumerate() {
        let params = ChannelParams::new(
            1.0,
            1.0,
            db_to_linear(point.snr_bob_db),
            db_to_linear(point.snr_eve_db),
            point.rate_s,
            point.rate_d,
        )?;
        let pair = transform(&params);
        for (j, curve) in [Curve::Lower, Curve::Upper, Curve::Independent]
            .into_iter()
            .enumerate()
        {
            let seed = mix_seed(base_seed, (i * 3 + j) as u64);
            let (analytic, est) = match curve {
                Curve::Lower | Curve::Upper => {
                    let direction = if curve == Curve::Lower {
                        Direction::Lower
                    } else {
                        Direction::Upper
                    };
                    let plan =
                        build_achieving_coupling(&pair, point.scenario, direction, n_atoms)?;
                    let analytic = bounds::bound(point.scenario, direction, &pair)?.value;
                    let est =
                        estimate(point.scenario, &pair, Sampler::Coupling(&plan), n_samples, seed)?;
                    (analytic, est)
                }
                Curve::Independent => {
                    let analytic = bounds::independent_outage(point.scenario, &pair)?;
                    let est =
                        estimate(point.scenario, &pair, Sampler::Independent, n_samples, seed)?;
                    (analytic, est)
                }
            };
            let tolerance = (3.0 * est.std_error).max(CONCORDANCE_FLOOR);
            rows.push(ConcordanceRow {
                point,
                curve,
                analytic,
                estimate: est,
                tolerance,
                ok: (est.mean - analytic).abs() <= tolerance,
            });
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{bound, independent_outage};

    fn base_pair() -> TransformedPair {
        let p = ChannelParams::new(1.0, 1.0, 1.0, 1.0, 0.1, 1.0).unwrap();
        transform(&p)
    }

    #[test]
    fn region_membership_per_scenario() {
        let pair = base_pair();
        let s = pair.s;
        let t = pair.t;
        // A point beating both thresholds: outage only through the sum event.
        assert!(outage_event(ScenarioTag::Csit, &pair, s + 0.01, -0.02));
        assert!(!outage_event(ScenarioTag::Csit, &pair, s + 0.05, -0.01));
        // Below t but clear of the sum event: NoCsit catches it, Csit not.
        let x = t - 0.1;
        assert!(!outage_event(ScenarioTag::Csit, &pair, x, -0.001));
        assert!(outage_event(ScenarioTag::NoCsit, &pair, x, -0.001));
        // Deep eavesdropper fade: Alt scenarios catch it.
        let deep = s - t - 0.5;
        assert!(outage_event(ScenarioTag::AltCsit, &pair, t + 5.0, deep));
        assert!(outage_event(ScenarioTag::AltNoCsit, &pair, t + 5.0, deep));
        assert!(!outage_event(ScenarioTag::Csit, &pair, t + 5.0, deep));
        // Safe corner: above t, above s - t, sum above s.
        assert!(!outage_event(ScenarioTag::AltNoCsit, &pair, t + 1.0, (s - t) * 0.5));
    }

    #[test]
    fn rejects_tiny_sample_budgets() {
        let pair = base_pair();
        assert!(matches!(
            estimate(ScenarioTag::Csit, &pair, Sampler::Independent, 999, 1),
            Err(Error::SampleSize { min: 1000, got: 999 })
        ));
    }

    #[test]
    fn estimate_is_reproducible_and_seed_sensitive() {
        let pair = base_pair();
        let a = estimate(ScenarioTag::Csit, &pair, Sampler::Independent, 100_000, 42).unwrap();
        let b = estimate(ScenarioTag::Csit, &pair, Sampler::Independent, 100_000, 42).unwrap();
        let c = estimate(ScenarioTag::Csit, &pair, Sampler::Independent, 100_000, 43).unwrap();
        assert_eq!(a.mean, b.mean);
        assert_ne!(a.mean, c.mean);
        assert_eq!(a.n_samples, 100_000);
        assert_eq!(a.seed, 42);
    }

    #[test]
    fn estimate_is_invariant_to_thread_count() {
        let pair = base_pair();
        let single = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap()
            .install(|| {
                estimate(ScenarioTag::NoCsit, &pair, Sampler::Independent, 300_000, 7).unwrap()
            });
        let multi = rayon::ThreadPoolBuilder::new()
            .num_threads(4)
            .build()
            .unwrap()
            .install(|| {
                estimate(ScenarioTag::NoCsit, &pair, Sampler::Independent, 300_000, 7).unwrap()
            });
        assert_eq!(single.mean, multi.mean);
    }

    #[test]
    fn independent_sampling_matches_quadrature() {
        let pair = base_pair();
        for scenario in ScenarioTag::ALL {
            let want = independent_outage(scenario, &pair).unwrap();
            let est =
                estimate(scenario, &pair, Sampler::Independent, 200_000, 11).unwrap();
            assert!(
                (est.mean - want).abs() < 5.0 * est.std_error + 1e-4,
                "{scenario}: {} vs {want}",
                est.mean
            );
        }
    }

    #[test]
    fn coupled_sampling_matches_plan_mass() {
        let pair = base_pair();
        let plan = build_achieving_coupling(&pair, ScenarioTag::Csit, Direction::Upper, 5_000)
            .unwrap();
        let emp = plan.empirical_outage(ScenarioTag::Csit, &pair);
        let est = estimate(
            ScenarioTag::Csit,
            &pair,
            Sampler::Coupling(&plan),
            200_000,
            3,
        )
        .unwrap();
        assert!((est.mean - emp).abs() < 5.0 * est.std_error + 1e-4);
        // And the plan's mass sits near the analytic bound.
        let analytic = bound(ScenarioTag::Csit, Direction::Upper, &pair).unwrap().value;
        assert!((est.mean - analytic).abs() < 5.0 * est.std_error + 1e-3);
    }

    #[test]
    fn std_error_shrinks_with_the_square_root() {
        let pair = base_pair();
        let small = estimate(ScenarioTag::Csit, &pair, Sampler::Independent, 10_000, 5).unwrap();
        let large = estimate(ScenarioTag::Csit, &pair, Sampler::Independent, 1_000_000, 5)
            .unwrap();
        let ratio = small.std_error / large.std_error;
        assert!((ratio - 10.0).abs() < 1.0, "ratio {ratio}");
    }

    #[test]
    fn suite_covers_twelve_points_and_passes_at_test_budget() {
        let rows = concordance_suite(20_000, 2_000, 42).unwrap();
        assert_eq!(rows.len(), 36);
        for row in &rows {
            assert!(
                row.ok,
                "{} {} at bob {} dB / eve {} dB: {} vs {} (tol {})",
                row.point.scenario,
                row.curve,
                row.point.snr_bob_db,
                row.point.snr_eve_db,
                row.estimate.mean,
                row.analytic,
                row.tolerance
            );
        }
    }

    #[test]
    fn mix_seed_spreads_nearby_keys() {
        let a = mix_seed(1, 0);
        let b = mix_seed(1, 1);
        let c = mix_seed(2, 0);
        assert_ne!(a, b);
        assert_ne!(a, c);
        assert_ne!(b, c);
    }
}

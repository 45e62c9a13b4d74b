//! Outage curves versus main-channel SNR, emitted as plot-ready column data,
//! with Monte Carlo columns from the bound-achieving couplings.
//!
//! ```bash
//! cargo run --release --example snr_sweep
//! ```

use secrecy_outage::bounds::ScenarioTag;
use secrecy_outage::marginals::{db_to_linear, ChannelParams};
use secrecy_outage::sweep::{run_sweep, McSettings, SweepSpec, SweepVariable};

fn main() {
    let fixed = ChannelParams::new(
        1.0,
        1.0,
        db_to_linear(10.0),
        db_to_linear(0.0),
        0.1,
        1.0,
    )
    .expect("valid parameters");

    let spec = SweepSpec {
        variable: SweepVariable::SnrBobDb,
        start: -5.0,
        stop: 15.0,
        points: 9,
        fixed,
        scenario: ScenarioTag::NoCsit,
        mc: Some(McSettings {
            n_samples: 50_000,
            seed: 42,
            n_atoms: 5_000,
        }),
    };

    // Identical spec and seed always produce identical bytes, so the output
    // can be committed next to the figures it feeds.
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    run_sweep(&spec, &mut lock).expect("sweep");
}

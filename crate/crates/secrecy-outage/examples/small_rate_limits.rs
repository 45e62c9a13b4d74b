//! Limits of the outage curves as the secrecy rate vanishes. These are the
//! floors that decide whether any positive ε-outage secrecy rate exists.
//!
//! ```bash
//! cargo run --release --example small_rate_limits
//! ```

use secrecy_outage::bounds::ScenarioTag;
use secrecy_outage::marginals::{db_to_linear, ChannelParams};
use secrecy_outage::rates::Curve;
use secrecy_outage::rayleigh::{closed_bound, limit_rs0, LimitVariant, RayleighRates};
use secrecy_outage::sweep::format_sig10;

const VARIANTS: [(LimitVariant, ScenarioTag, Curve); 4] = [
    (LimitVariant::CsitLower, ScenarioTag::Csit, Curve::Lower),
    (LimitVariant::CsitUpper, ScenarioTag::Csit, Curve::Upper),
    (LimitVariant::NoCsitLower, ScenarioTag::NoCsit, Curve::Lower),
    (
        LimitVariant::NoCsitIndependent,
        ScenarioTag::NoCsit,
        Curve::Independent,
    ),
];

fn main() {
    for (bob_db, eve_db) in [(5.0, 0.0), (5.0, 5.1)] {
        let params = ChannelParams::new(
            1.0,
            1.0,
            db_to_linear(bob_db),
            db_to_linear(eve_db),
            1e-6,
            1.0,
        )
        .expect("valid parameters");
        let rates = RayleighRates::from_params(&params);
        println!("main {bob_db} dB, eavesdropper {eve_db} dB, rd = 1");
        println!(
            "{:<20} {:>13} {:>16}",
            "variant", "limit", "value at rs=1e-6"
        );
        for (variant, scenario, curve) in VARIANTS {
            let limit = limit_rs0(variant, &params);
            let near = closed_bound(scenario, curve, &rates).expect("closed form");
            println!(
                "{:<20} {:>13} {:>16}",
                format!("{variant:?}"),
                format_sig10(limit),
                format_sig10(near)
            );
        }
        println!();
    }
    println!("A zero limit (csit lower below threshold) means arbitrarily small");
    println!("outage is reachable by shrinking the rate; a limit of 1 (csit");
    println!("upper above threshold) means the worst case never leaves outage.");
}

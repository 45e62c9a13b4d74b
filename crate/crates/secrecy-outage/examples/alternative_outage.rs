//! The alternative scenarios: outage when the transmitter tracks the
//! eavesdropper's channel (alt-csit) or neither channel instantaneously
//! (alt-nocsit). These have no closed forms; the generic candidate engine
//! evaluates them.
//!
//! ```bash
//! cargo run --release --example alternative_outage
//! ```

use secrecy_outage::bounds::ScenarioTag;
use secrecy_outage::marginals::{db_to_linear, transform, ChannelParams};
use secrecy_outage::sweep::format_sig10;
use secrecy_outage::{bound, independent_outage, Direction};

fn main() {
    let params = ChannelParams::new(
        1.0,
        1.0,
        db_to_linear(10.0),
        db_to_linear(0.0),
        0.1,
        1.0,
    )
    .expect("valid parameters");
    let pair = transform(&params);

    for scenario in [ScenarioTag::AltCsit, ScenarioTag::AltNoCsit] {
        let lower = bound(scenario, Direction::Lower, &pair).expect("lower");
        let upper = bound(scenario, Direction::Upper, &pair).expect("upper");
        let indep = independent_outage(scenario, &pair).expect("indep");
        println!("{scenario}");
        println!("  lower {}  ({})", format_sig10(lower.value), lower.branch);
        println!("  indep {}", format_sig10(indep));
        println!("  upper {}  ({})", format_sig10(upper.value), upper.branch);
        if !lower.stationary_points.is_empty() {
            for x in &lower.stationary_points {
                println!("  balance point on the x̃ axis at {}", format_sig10(*x));
            }
        }
        println!();
    }

    // alt-nocsit's outage region is a union of two marginal events, so its
    // bounds come from the two marginal probabilities alone.
    let pair_check = transform(&params);
    let a = pair_check.fx(pair_check.t);
    let b = pair_check.fy(pair_check.s - pair_check.t);
    println!("alt-nocsit sanity: max(a, b) = {}, min(a + b, 1) = {}",
        format_sig10(a.max(b)),
        format_sig10((a + b).min(1.0))
    );
    println!("with a = F_x̃(t) = {} and b = F_ỹ(s - t) = {}",
        format_sig10(a),
        format_sig10(b)
    );
}

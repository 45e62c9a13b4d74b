//! Best-case, independent, and worst-case outage for one parameter set,
//! across all four knowledge scenarios.
//!
//! ```bash
//! cargo run --release --example bound_basics
//! ```

use secrecy_outage::bounds::ScenarioTag;
use secrecy_outage::marginals::{db_to_linear, transform, ChannelParams};
use secrecy_outage::sweep::format_sig10;
use secrecy_outage::{bound, independent_outage, Direction};

fn main() {
    // Unit-mean Rayleigh power gains, main channel at 10 dB, eavesdropper at
    // 0 dB, secrecy rate 0.1 b/cu with a 1 b/cu decodability margin.
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

    println!("thresholds: s = {}, t = {}", format_sig10(pair.s), format_sig10(pair.t));
    println!();
    println!("{:<11} {:>13} {:>13} {:>13}  winning branch", "scenario", "lower", "indep", "upper");
    for scenario in ScenarioTag::ALL {
        let lower = bound(scenario, Direction::Lower, &pair).expect("lower bound");
        let upper = bound(scenario, Direction::Upper, &pair).expect("upper bound");
        let indep = independent_outage(scenario, &pair).expect("independent outage");
        println!(
            "{:<11} {:>13} {:>13} {:>13}  {} / {}",
            scenario.name(),
            format_sig10(lower.value),
            format_sig10(indep),
            format_sig10(upper.value),
            lower.branch,
            upper.branch,
        );
    }
    println!();
    println!("The spread between lower and upper is the price of not knowing");
    println!("the joint fading law; the independent value always sits inside it.");
}

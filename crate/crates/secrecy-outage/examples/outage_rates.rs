//! ε-outage secrecy rates: the largest rate whose outage stays at or below a
//! target, per curve, plus the feasibility floor below which no positive
//! rate exists.
//!
//! ```bash
//! cargo run --release --example outage_rates
//! ```

use secrecy_outage::bounds::ScenarioTag;
use secrecy_outage::marginals::{db_to_linear, ChannelParams};
use secrecy_outage::rates::Curve;
use secrecy_outage::sweep::format_sig10;
use secrecy_outage::{eps_outage_rate, min_feasible_eps};

fn main() {
    let params = ChannelParams::new(
        1.0,
        1.0,
        db_to_linear(10.0),
        db_to_linear(0.0),
        0.0,
        1.0,
    )
    .expect("valid parameters");
    let scenario = ScenarioTag::NoCsit;

    println!("scenario {scenario}, main 10 dB, eavesdropper 0 dB, rd = 1");
    println!();
    println!("feasibility floors (infimum of each curve over all rates):");
    for curve in Curve::ALL {
        let floor = min_feasible_eps(curve, scenario, &params).expect("floor");
        println!("  {:<6} {}", curve.name(), format_sig10(floor));
    }
    println!();
    println!("{:<8} {:>13} {:>13} {:>13}", "target", "rate(lower)", "rate(upper)", "rate(indep)");
    for eps in [0.3, 0.5, 0.7, 0.9] {
        let mut cells = Vec::new();
        for curve in Curve::ALL {
            let sol = eps_outage_rate(curve, scenario, &params, eps).expect("rate");
            cells.push(format_sig10(sol.rate_s));
        }
        println!("{:<8} {:>13} {:>13} {:>13}", eps, cells[0], cells[1], cells[2]);
    }
    println!();
    println!("A rate of 0.000000000 means the target sits at or below that");
    println!("curve's floor; no positive secrecy rate can reach it.");
}

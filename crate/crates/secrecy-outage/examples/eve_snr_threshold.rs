//! The eavesdropper-SNR threshold below which secrecy is "free": the
//! best-case outage equals the marginal floor `F_x̃(s)`, exactly what outage
//! would be with no eavesdropper at all.
//!
//! ```bash
//! cargo run --release --example eve_snr_threshold
//! ```

use secrecy_outage::bounds::ScenarioTag;
use secrecy_outage::marginals::{db_to_linear, linear_to_db, ChannelParams};
use secrecy_outage::rates::Curve;
use secrecy_outage::rayleigh::{rs_sufficient_bound, RayleighRates};
use secrecy_outage::sweep::format_sig10;
use secrecy_outage::{closed_bound, eve_snr_threshold};

fn main() {
    let (lambda_x, lambda_y) = (1.0, 1.0);
    let rho_x = db_to_linear(15.0);
    let rate_s = 0.1;

    let thr = eve_snr_threshold(lambda_x, lambda_y, rho_x, rate_s).expect("threshold");
    println!("main channel 15 dB, secrecy rate {rate_s} b/cu");
    println!(
        "threshold: {} linear = {} dB",
        format_sig10(thr),
        format_sig10(linear_to_db(thr))
    );
    println!();

    // Cross the threshold and watch the best case leave its floor.
    println!("{:>9}  {:>13} {:>13}", "rho_y/thr", "lower bound", "floor F(s)");
    for factor in [0.5, 0.9, 0.99, 1.01, 1.5, 4.0] {
        let params = ChannelParams::new(lambda_x, lambda_y, rho_x, thr * factor, rate_s, 1.0)
            .expect("valid parameters");
        let rates = RayleighRates::from_params(&params);
        let lower = closed_bound(ScenarioTag::Csit, Curve::Lower, &rates).expect("bound");
        let floor = 1.0 - (-rates.lt_x * rates.s).exp();
        println!(
            "{:>9}  {:>13} {:>13}",
            factor,
            format_sig10(lower),
            format_sig10(floor)
        );
    }
    println!();

    // When both SNRs grow with a fixed offset, the threshold condition holds
    // for every secrecy rate below log2 of the effective SNR ratio.
    let bound = rs_sufficient_bound(lambda_x, lambda_y, db_to_linear(40.0), db_to_linear(30.0))
        .expect("rate bound");
    println!(
        "high-SNR sufficient secrecy rate at a 10 dB offset: {} b/cu",
        format_sig10(bound)
    );
}

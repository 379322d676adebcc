//! Critical purities for the white- and colored-noise GHZ families.
//!
//! cargo run --example noise_thresholds

use ghzcert::{noise_threshold, witness_threshold, NoiseKind};

fn main() {
    println!("{:<8} {:>14} {:>18}", "noise", "LP threshold", "witness threshold");
    for kind in [NoiseKind::White, NoiseKind::Colored] {
        println!(
            "{:<8} {:>14.9} {:>18.9}",
            kind.to_string(),
            noise_threshold(kind),
            witness_threshold(kind)
        );
    }
    println!("(white witness threshold is 5/7 = {:.9})", 5.0 / 7.0);
}

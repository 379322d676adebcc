//! Sample random states inside and outside the trace-distance ball of
//! radius 1/4 around GHZ and check which admit a local model.
//!
//! cargo run --example quarter_ball

use ghzcert::{certify_state, ghz_state, random_density, state_at_distance, trace_distance};

fn main() -> ghzcert::Result<()> {
    let ghz = ghz_state();
    for radius in [0.1, 0.2, 0.249, 0.3, 0.5, 0.7] {
        let mut nonlocal = 0;
        let mut total = 0;
        for seed in 0..100 {
            let direction = random_density(seed);
            if trace_distance(&direction, &ghz)? < radius {
                continue;
            }
            let report = certify_state(&state_at_distance(radius, &direction)?)?;
            total += 1;
            nonlocal += usize::from(report.verdict.is_nonlocal());
        }
        println!("eps = {radius:<5}: {nonlocal:>3} of {total} sampled states nonlocal");
    }
    Ok(())
}

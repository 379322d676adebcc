//! Certify a handful of three-qubit states and print the verdicts.
//!
//! cargo run --example certify_states

use ghzcert::{certify_state, colored_noise_state, ghz_state, random_density, white_noise_state, DensityMatrix};

fn show(name: &str, rho: &DensityMatrix) -> ghzcert::Result<()> {
    let r = certify_state(rho)?;
    let q = r.quadruple.values();
    println!(
        "{name:<18} eps={:.6} witness={:+.6} q=({:.4}, {:.4}, {:.4}, {:.4}) lp_feasible={:<5} {}",
        r.epsilon,
        r.witness_value,
        q[0],
        q[1],
        q[2],
        q[3],
        r.lp_feasible(),
        r.verdict
    );
    Ok(())
}

fn main() -> ghzcert::Result<()> {
    show("ghz", &ghz_state())?;
    for p in [0.9, 0.75, 0.6, 0.5, 0.4] {
        show(&format!("white p={p}"), &white_noise_state(p)?)?;
    }
    for p in [0.6, 0.4] {
        show(&format!("colored p={p}"), &colored_noise_state(p)?)?;
    }
    show("random seed=1", &random_density(1))?;
    Ok(())
}

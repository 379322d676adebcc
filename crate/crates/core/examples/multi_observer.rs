//! Combined imperfections handled numerically: two misaligned observers
//! measuring a white-noise GHZ state.
//!
//! cargo run --example multi_observer

use ghzcert::{general_quadruple, ghz_feasible, white_noise_state, MeasurementAxes};

fn tilted_pair(angle: f64) -> [[f64; 3]; 2] {
    let (s, c) = angle.sin_cos();
    // x̄ rotated toward y, ȳ rotated toward z
    [[c, s, 0.0], [0.0, c, s]]
}

fn main() -> ghzcert::Result<()> {
    println!("{:>8} {:>6}  nonlocal", "tilt", "p");
    for tilt in [0.0, 0.3, 0.6, 0.9] {
        for p in [1.0, 0.8, 0.6] {
            let ideal = *MeasurementAxes::ideal().axes();
            let axes = MeasurementAxes::new([tilted_pair(tilt), tilted_pair(tilt), ideal[2]])?;
            let q = general_quadruple(&axes, &white_noise_state(p)?)?;
            println!("{tilt:>8.2} {p:>6.2}  {}", ghz_feasible(&q).is_none());
        }
    }
    Ok(())
}

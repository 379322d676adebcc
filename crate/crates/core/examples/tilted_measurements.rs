//! Observer 1 measures along misaligned axes: closed-form probabilities,
//! the cos θ + sin α sin β ≤ 1 condition, and the full LP verdict.
//!
//! cargo run --example tilted_measurements

use ghzcert::tilted::{angle_scan, tilted_quadruple_closed_form, DEFAULT_GRID};
use ghzcert::{locality_constraint_satisfied, tilted_quadruple, TiltAngles};

fn main() -> ghzcert::Result<()> {
    let half_pi = std::f64::consts::FRAC_PI_2;
    for (t, a, b) in [
        (0.0, half_pi, half_pi),
        (0.4, half_pi, 1.2),
        (1.0, 1.0, 1.0),
        (half_pi, 0.0, 0.0),
    ] {
        let angles = TiltAngles::new(t, a, b)?;
        let numeric = tilted_quadruple(&angles)?.values();
        let closed = tilted_quadruple_closed_form(&angles);
        println!(
            "θ={t:.3} α={a:.3} β={b:.3}: q={numeric:.6?} closed={closed:.6?} constraint={:.4} satisfied={}",
            angles.constraint_value(),
            locality_constraint_satisfied(&angles)
        );
    }

    let scan = angle_scan(DEFAULT_GRID)?;
    let nonlocal = scan.iter().filter(|pt| !pt.feasible).count();
    let beyond_constraint = scan
        .iter()
        .filter(|pt| !pt.feasible && locality_constraint_satisfied(&pt.angles))
        .count();
    println!(
        "{DEFAULT_GRID}³ lattice: {nonlocal} of {} points admit no local model; \
         {beyond_constraint} of those still satisfy cos θ + sin α sin β ≤ 1",
        scan.len()
    );
    Ok(())
}

//! Write states to the plain-text file format, read them back, and compare.
//!
//! cargo run --example state_files

use ghzcert::cli::{parse_state, write_state};
use ghzcert::{colored_noise_state, ghz_state, trace_distance, white_noise_state};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join("ghzcert-example");
    std::fs::create_dir_all(&dir)?;
    let states = [
        ("ghz", ghz_state()),
        ("white-0.6", white_noise_state(0.6)?),
        ("colored-0.6", colored_noise_state(0.6)?),
    ];
    for (name, rho) in &states {
        let path = dir.join(format!("{name}.txt"));
        std::fs::write(&path, write_state(rho))?;
        let back = parse_state(&std::fs::read_to_string(&path)?)?;
        assert_eq!(&back, rho);
        println!(
            "{:<12} -> {} (distance to GHZ {:.12})",
            name,
            path.display(),
            trace_distance(&back, &ghz_state())?
        );
    }
    Ok(())
}

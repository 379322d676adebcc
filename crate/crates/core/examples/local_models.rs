//! Deterministic strategies, their GHZ event indicators, and explicit local
//! models for quadruples inside the restricted local polytope.
//!
//! cargo run --example local_models

use std::collections::BTreeMap;

use ghzcert::{enumerate_strategies, ghz_feasible, ProbabilityQuadruple};

fn main() -> ghzcert::Result<()> {
    let mut patterns: BTreeMap<String, usize> = BTreeMap::new();
    for s in enumerate_strategies() {
        let bits: String = s.indicator().0.iter().map(|&b| if b { '1' } else { '0' }).collect();
        *patterns.entry(bits).or_default() += 1;
    }
    println!("indicator patterns (E F G H) over 64 strategies:");
    for (bits, count) in &patterns {
        println!("  {bits}  x{count}");
    }

    for q in [[0.5; 4], [0.75; 4], [0.9, 0.6, 0.7, 0.8], [1.0; 4]] {
        let quad = ProbabilityQuadruple::new(q)?;
        match ghz_feasible(&quad) {
            Some(model) => {
                println!("{q:?}: local model found");
                for (strategy, weight) in model.support() {
                    println!("    {weight:.4}  {strategy:?}");
                }
            }
            None => println!("{q:?}: no local deterministic model"),
        }
    }
    Ok(())
}

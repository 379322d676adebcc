mod common;

use ghzcert::{
    enumerate_strategies, ghz_feasible, ghz_state, quadruple_of_state, random_density, state_at_distance,
    trace_distance, white_noise_state, ProbabilityQuadruple,
};
use proptest::prelude::*;
use rand::Rng;

#[test]
fn oracle_patterns_match_library_indicators() {
    let oracle = common::achievable_patterns();
    assert_eq!(oracle.len(), 8);
    for s in enumerate_strategies() {
        assert!(oracle.contains(&s.indicator().as_vector()));
    }
}

#[test]
fn derived_feasibility_examples() {
    for (q, feasible) in [(1.0, false), (0.5, true), (0.75, true)] {
        let quad = ProbabilityQuadruple::uniform(q).unwrap();
        assert_eq!(ghz_feasible(&quad).is_some(), feasible, "q = {q}");
        assert_eq!(common::hull_contains([q; 4], 1e-9), feasible, "oracle, q = {q}");
    }
}

#[test]
fn lp_agrees_with_hull_oracle() {
    let mut rng = common::rng(7);
    for _ in 0..1000 {
        let q: [f64; 4] = std::array::from_fn(|_| rng.random::<f64>());
        let lp = ghz_feasible(&ProbabilityQuadruple::new(q).unwrap());
        assert_eq!(lp.is_some(), common::hull_contains(q, 1e-9), "{q:?}");
        if let Some(model) = lp {
            let total: f64 = model.weights().iter().sum();
            assert!((total - 1.0).abs() < 1e-9);
            assert!(model.weights().iter().all(|&w| w >= -1e-12));
            for (m, x) in model.event_measures().iter().zip(q) {
                assert!((m - x).abs() < 1e-9);
            }
        }
    }
}

#[test]
fn witness_soundness_inside_quarter_ball() {
    let ghz = ghz_state();
    let mut rng = common::rng(11);
    for seed in 0..200u64 {
        let direction = random_density(1000 + seed);
        let reach = trace_distance(&direction, &ghz).unwrap();
        let eps = rng.random::<f64>() * (0.25_f64 - 1e-6).min(reach);
        let rho = state_at_distance(eps, &direction).unwrap();
        let q = quadruple_of_state(&rho).unwrap();
        for x in q.values() {
            assert!(x >= 1.0 - eps - 1e-9);
        }
        assert!(ghz_feasible(&q).is_none(), "seed {seed}, eps {eps}");
    }
}

#[test]
fn white_noise_feasibility_is_monotone() {
    let verdicts: Vec<bool> = (0..=200)
        .map(|i| {
            let q = quadruple_of_state(&white_noise_state(i as f64 / 200.0).unwrap()).unwrap();
            ghz_feasible(&q).is_some()
        })
        .collect();
    let switch = verdicts.iter().position(|f| !f).unwrap();
    assert!(verdicts[..switch].iter().all(|&f| f));
    assert!(verdicts[switch..].iter().all(|&f| !f));
    assert_eq!(switch, 101); // p = 0.5 is still feasible
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn sum_above_three_is_infeasible(q in proptest::array::uniform4(0.5f64..=1.0)) {
        let quad = ProbabilityQuadruple::new(q).unwrap();
        if quad.sum() > 3.0 + 1e-9 {
            prop_assert!(ghz_feasible(&quad).is_none());
        }
    }

    #[test]
    fn quadruple_respects_contraction(seed in any::<u64>()) {
        let rho = random_density(seed);
        let eps = trace_distance(&rho, &ghz_state()).unwrap();
        for x in quadruple_of_state(&rho).unwrap().values() {
            prop_assert!(x >= 1.0 - eps - 1e-9);
        }
    }
}

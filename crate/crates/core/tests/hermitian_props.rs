mod common;

use ghzcert::{
    colored_noise_state, ghz_state, hermitian_eigenvalues, quadruple_of_state, random_density, state_at_distance,
    trace_distance, white_noise_state, DensityMatrix,
};
use proptest::prelude::*;

#[test]
fn contraction_bound_on_random_projectors() {
    let mut rng = common::rng(0xC0FFEE);
    for i in 0..1000u64 {
        let a = random_density(2 * i);
        let b = random_density(2 * i + 1);
        let p = common::random_projector(&mut rng, 8);
        let gap = (a.expectation(&p).unwrap().re - b.expectation(&p).unwrap().re).abs();
        let d = trace_distance(&a, &b).unwrap();
        assert!(gap <= d + 1e-9, "draw {i}: {gap} > {d}");
    }
}

#[test]
fn eigenvalues_reconstruct_trace_invariants() {
    let mut rng = common::rng(42);
    for dim in [2, 4, 8] {
        for _ in 0..200 {
            let h = common::random_hermitian(&mut rng, dim);
            let ev = hermitian_eigenvalues(&h).unwrap();
            assert!(ev.windows(2).all(|w| w[0] >= w[1]), "not descending: {ev:?}");
            let tr = h.trace().re;
            let tr2 = (&h * &h).trace().re;
            assert!((ev.iter().sum::<f64>() - tr).abs() < 1e-8);
            assert!((ev.iter().map(|x| x * x).sum::<f64>() - tr2).abs() < 1e-8);
        }
    }
}

#[test]
fn noise_families_on_a_grid() {
    let ghz = ghz_state();
    for i in 0..=100 {
        let p = i as f64 / 100.0;
        let white = white_noise_state(p).unwrap();
        let colored = colored_noise_state(p).unwrap();
        let d = trace_distance(&white, &ghz).unwrap();
        assert!((d - 7.0 * (1.0 - p) / 8.0).abs() < 1e-9, "p = {p}");
        let expected = 1.0 - (1.0 - p) / 2.0;
        for rho in [&white, &colored] {
            assert!(*rho.eigenvalues().last().unwrap() >= -1e-10);
            for q in quadruple_of_state(rho).unwrap().values() {
                assert!((q - expected).abs() < 1e-9, "p = {p}: {q}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn metric_axioms(a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let (x, y, z) = (random_density(a), random_density(b), random_density(c));
        let dxy = trace_distance(&x, &y).unwrap();
        let dyx = trace_distance(&y, &x).unwrap();
        prop_assert!((dxy - dyx).abs() < 1e-9);
        prop_assert!((0.0..=1.0).contains(&dxy));
        prop_assert!(trace_distance(&x, &x).unwrap() < 1e-9);
        let dxz = trace_distance(&x, &z).unwrap();
        let dzy = trace_distance(&z, &y).unwrap();
        prop_assert!(dxy <= dxz + dzy + 1e-9);
    }

    #[test]
    fn distance_is_linear_along_mixing(seed in any::<u64>(), t in 0.0f64..=1.0) {
        let rho = random_density(seed);
        let ghz = ghz_state();
        let mixed = rho.mix(&ghz, t).unwrap();
        let full = trace_distance(&rho, &ghz).unwrap();
        prop_assert!((trace_distance(&mixed, &ghz).unwrap() - t * full).abs() < 1e-9);
    }

    #[test]
    fn state_at_distance_round_trip(seed in any::<u64>(), frac in 0.0f64..=1.0) {
        let direction = random_density(seed);
        let reach = trace_distance(&direction, &ghz_state()).unwrap();
        let target = frac * reach;
        let state = state_at_distance(target, &direction).unwrap();
        prop_assert!((trace_distance(&state, &ghz_state()).unwrap() - target).abs() < 1e-9);
    }

    #[test]
    fn random_states_are_valid(seed in any::<u64>()) {
        let rho = random_density(seed);
        prop_assert!((rho.matrix().trace().re - 1.0).abs() < 1e-12);
        prop_assert!(rho.matrix().hermitian_deviation() <= 1e-12);
        prop_assert!(*rho.eigenvalues().last().unwrap() >= -1e-10);
        prop_assert!(DensityMatrix::new(rho.matrix().clone()).is_ok());
    }
}

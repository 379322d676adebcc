//! Certification of GHZ-type nonlocality without inequalities for
//! three-qubit mixed states.
//!
//! For a state `ρ` the crate computes its trace distance `ε` to the GHZ
//! projector, the probabilities of the four GHZ events
//! (XXX = +1, XYY = −1, YXY = −1, YYX = −1), and whether any local
//! deterministic hidden-variable model reproduces those probabilities.
//! States with `4ε − 1 < 0` admit no such model at all.
//!
//! ```
//! use ghzcert::{certify_state, white_noise_state, Verdict};
//!
//! let report = certify_state(&white_noise_state(0.6).unwrap()).unwrap();
//! assert_eq!(report.verdict, Verdict::NonlocalByLP);
//! ```

pub mod cli;
mod error;
pub mod hermitian;
pub mod lhv;
pub mod states;
pub mod tilted;

pub use error::{Error, Result};
pub use hermitian::{
    hermitian_eigenvalues, kron, outcome_probability, pauli, trace_distance, ComplexMatrix, DensityMatrix,
    DichotomicObservable, Outcome,
};
pub use lhv::{
    certify_state, enumerate_strategies, ghz_feasible, indicator, noise_threshold, quadruple_of_state, witness,
    witness_threshold, CertificateReport, DeterministicStrategy, EventIndicator, LocalModel, ProbabilityQuadruple,
    Verdict,
};
pub use states::{
    colored_noise_state, ghz_state, random_density, state_at_distance, white_noise_state, NoiseKind, PurityParameter,
};
pub use tilted::{
    angle_scan, general_quadruple, locality_constraint_satisfied, tilted_observables, tilted_quadruple,
    MeasurementAxes, TiltAngles,
};

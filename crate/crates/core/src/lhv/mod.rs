//! Local deterministic hidden-variable models restricted to the four GHZ
//! events, and the certification built on them.
//!
//! A hidden variable λ is discretized to one of the 64 value assignments
//! `v(σ_ij) ∈ {±1}`; a model is a probability vector over those. Deciding
//! whether a quadruple of event probabilities admits a model is a
//! 64-variable, 5-row feasibility LP.

mod certify;
mod polytope;
pub mod simplex;
mod strategy;

pub use certify::{
    bisect_threshold, certify_state, noise_threshold, witness_threshold, CertificateReport, Verdict, THRESHOLD_BRACKET,
};
pub use polytope::{
    ghz_feasible, quadruple_of_state, quadruple_with_observables, witness, LocalModel, PartyObservables,
    ProbabilityQuadruple, FEASIBILITY_TOL,
};
pub use strategy::{
    enumerate_strategies, indicator, DeterministicStrategy, EventIndicator, GhzEvent, Setting, GHZ_EVENTS,
    STRATEGY_COUNT,
};

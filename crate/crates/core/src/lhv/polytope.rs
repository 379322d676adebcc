use super::simplex::{phase_one, PhaseOne};
use super::strategy::{enumerate_strategies, DeterministicStrategy, GhzEvent, Setting, GHZ_EVENTS, STRATEGY_COUNT};
use crate::error::{Error, Result};
use crate::hermitian::{outcome_probability, pauli, DensityMatrix, DichotomicObservable, PROBABILITY_TOL};

/// Per-row tolerance when matching event probabilities with a local model.
pub const FEASIBILITY_TOL: f64 = 1e-9;

/// Probabilities of the four GHZ events, ordered XXX=+1, XYY=−1, YXY=−1, YYX=−1.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProbabilityQuadruple([f64; 4]);

impl ProbabilityQuadruple {
    /// Accepts values within `PROBABILITY_TOL` of [0, 1] and clamps them.
    pub fn new(q: [f64; 4]) -> Result<Self> {
        for &x in &q {
            if !x.is_finite() || !(-PROBABILITY_TOL..=1.0 + PROBABILITY_TOL).contains(&x) {
                return Err(Error::OutOfRange {
                    name: "event probability",
                    value: x,
                    range: "[0, 1]",
                });
            }
        }
        Ok(Self(q.map(|x| x.clamp(0.0, 1.0))))
    }

    pub fn uniform(q: f64) -> Result<Self> {
        Self::new([q; 4])
    }

    pub fn values(&self) -> [f64; 4] {
        self.0
    }

    pub fn sum(&self) -> f64 {
        self.0.iter().sum()
    }
}

/// Probability weights over the 64 deterministic strategies.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalModel {
    weights: Vec<f64>,
}

impl LocalModel {
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn weight(&self, strategy: DeterministicStrategy) -> f64 {
        self.weights[strategy.index()]
    }

    /// Strategies carrying nonzero weight.
    pub fn support(&self) -> impl Iterator<Item = (DeterministicStrategy, f64)> + '_ {
        enumerate_strategies()
            .into_iter()
            .zip(self.weights.iter().copied())
            .filter(|&(_, w)| w > 0.0)
    }

    /// Event probabilities μ[E], μ[F], μ[G], μ[H] implied by the weights.
    pub fn event_measures(&self) -> [f64; 4] {
        let mut out = [0.0; 4];
        for (s, w) in enumerate_strategies().into_iter().zip(&self.weights) {
            for (acc, bit) in out.iter_mut().zip(s.indicator().as_vector()) {
                *acc += w * bit;
            }
        }
        out
    }
}

/// Searches for a local deterministic model reproducing the four GHZ event
/// probabilities exactly (to `FEASIBILITY_TOL`). `None` certifies that no
/// such model exists.
pub fn ghz_feasible(q: &ProbabilityQuadruple) -> Option<LocalModel> {
    let strategies = enumerate_strategies();
    let indicators: Vec<[f64; 4]> = strategies.iter().map(|s| s.indicator().as_vector()).collect();
    let mut rows: Vec<Vec<f64>> = (0..4).map(|k| indicators.iter().map(|ind| ind[k]).collect()).collect();
    rows.push(vec![1.0; STRATEGY_COUNT]);
    let mut rhs = q.values().to_vec();
    rhs.push(1.0);

    match phase_one(&rows, &rhs, FEASIBILITY_TOL) {
        PhaseOne::Feasible(weights) => Some(LocalModel { weights }),
        PhaseOne::Infeasible(_) => None,
    }
}

/// `4ε − 1`; a negative value rules out any local deterministic model for
/// every state at trace distance `ε` from GHZ.
pub fn witness(epsilon: f64) -> Result<f64> {
    if epsilon.is_nan() || epsilon < 0.0 {
        return Err(Error::OutOfRange {
            name: "epsilon",
            value: epsilon,
            range: "[0, ∞)",
        });
    }
    Ok(4.0 * epsilon - 1.0)
}

/// Observables `(σ_x, σ_y)` for each of the three parties.
pub type PartyObservables = [[DichotomicObservable; 2]; 3];

fn ideal_observables() -> PartyObservables {
    let x = pauli([1.0, 0.0, 0.0]).expect("unit axis");
    let y = pauli([0.0, 1.0, 0.0]).expect("unit axis");
    [[x.clone(), y.clone()], [x.clone(), y.clone()], [x, y]]
}

fn event_observable(event: &GhzEvent, observables: &PartyObservables) -> Result<DichotomicObservable> {
    let pick = |party: usize| {
        let idx = match event.settings[party] {
            Setting::X => 0,
            Setting::Y => 1,
        };
        &observables[party][idx]
    };
    pick(0).tensor(pick(1))?.tensor(pick(2))
}

/// GHZ event probabilities when each party measures the given observables in
/// place of its ideal σ_x and σ_y.
pub fn quadruple_with_observables(rho: &DensityMatrix, observables: &PartyObservables) -> Result<ProbabilityQuadruple> {
    let mut q = [0.0; 4];
    for (slot, event) in q.iter_mut().zip(GHZ_EVENTS.iter()) {
        let obs = event_observable(event, observables)?;
        *slot = outcome_probability(rho, &obs, event.outcome)?;
    }
    ProbabilityQuadruple::new(q)
}

/// Exact GHZ event probabilities of `rho` under ideal measurements.
pub fn quadruple_of_state(rho: &DensityMatrix) -> Result<ProbabilityQuadruple> {
    quadruple_with_observables(rho, &ideal_observables())
}

use std::fmt;

use super::polytope::{ghz_feasible, quadruple_of_state, witness, LocalModel, ProbabilityQuadruple};
use crate::error::{Error, Result};
use crate::hermitian::{trace_distance, DensityMatrix};
use crate::states::{ghz_state, NoiseKind, PurityParameter};

/// Width of the final bisection bracket for threshold searches.
pub const THRESHOLD_BRACKET: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    /// `4ε − 1 < 0`: the trace-distance ball alone excludes a local model.
    NonlocalByWitness,
    /// The witness is inconclusive but the exact event probabilities admit
    /// no local deterministic model.
    NonlocalByLP,
    /// Some local deterministic model reproduces the four GHZ event
    /// probabilities; other observables are not checked.
    LocallyExplainableAtThisLevel,
}

impl Verdict {
    pub fn is_nonlocal(self) -> bool {
        !matches!(self, Verdict::LocallyExplainableAtThisLevel)
    }

    pub fn name(self) -> &'static str {
        match self {
            Verdict::NonlocalByWitness => "NonlocalByWitness",
            Verdict::NonlocalByLP => "NonlocalByLP",
            Verdict::LocallyExplainableAtThisLevel => "LocallyExplainableAtThisLevel",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Everything `certify_state` learned about a state.
#[derive(Clone, Debug, PartialEq)]
pub struct CertificateReport {
    /// Trace distance to the GHZ projector.
    pub epsilon: f64,
    /// Always `4·epsilon − 1`.
    pub witness_value: f64,
    pub quadruple: ProbabilityQuadruple,
    /// A local model matching the quadruple, when one exists.
    pub model: Option<LocalModel>,
    pub verdict: Verdict,
}

impl CertificateReport {
    pub fn lp_feasible(&self) -> bool {
        self.model.is_some()
    }

    /// A completely separable state always has a local model, so any
    /// nonlocal verdict also rules out complete separability.
    pub fn excludes_complete_separability(&self) -> bool {
        self.verdict.is_nonlocal()
    }
}

pub fn certify_state(rho: &DensityMatrix) -> Result<CertificateReport> {
    if rho.dim() != 8 {
        return Err(Error::DimensionMismatch {
            left: 8,
            right: rho.dim(),
        });
    }
    let epsilon = trace_distance(rho, &ghz_state())?;
    let witness_value = witness(epsilon)?;
    let quadruple = quadruple_of_state(rho)?;
    let model = ghz_feasible(&quadruple);
    let verdict = if witness_value < 0.0 {
        Verdict::NonlocalByWitness
    } else if model.is_none() {
        Verdict::NonlocalByLP
    } else {
        Verdict::LocallyExplainableAtThisLevel
    };
    Ok(CertificateReport {
        epsilon,
        witness_value,
        quadruple,
        model,
        verdict,
    })
}

/// Bisects `[0, 1]` for the point where `nonlocal` switches from false
/// (at 0) to true (at 1) and returns the midpoint of the final bracket.
pub fn bisect_threshold(mut nonlocal: impl FnMut(f64) -> bool) -> f64 {
    let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
    while hi - lo > THRESHOLD_BRACKET {
        let mid = 0.5 * (lo + hi);
        if nonlocal(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

fn noisy(kind: NoiseKind, p: f64) -> DensityMatrix {
    kind.state(PurityParameter::new(p).expect("bisection stays inside [0, 1]"))
}

/// Critical purity above which the exact event probabilities of the noisy
/// GHZ family admit no local deterministic model.
pub fn noise_threshold(kind: NoiseKind) -> f64 {
    bisect_threshold(|p| {
        let q = quadruple_of_state(&noisy(kind, p)).expect("noisy GHZ states are three-qubit");
        ghz_feasible(&q).is_none()
    })
}

/// Critical purity above which the trace-distance witness alone certifies
/// nonlocality (`4ε − 1 < 0`).
pub fn witness_threshold(kind: NoiseKind) -> f64 {
    let ghz = ghz_state();
    bisect_threshold(|p| {
        let eps = trace_distance(&noisy(kind, p), &ghz).expect("same dimension");
        witness(eps).expect("distance is nonnegative") < 0.0
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::white_noise_state;

    #[test]
    fn ghz_is_nonlocal_by_witness() {
        let r = certify_state(&ghz_state()).unwrap();
        assert!(r.epsilon.abs() < 1e-12);
        assert!((r.witness_value + 1.0).abs() < 1e-12);
        assert!(!r.lp_feasible());
        assert_eq!(r.verdict, Verdict::NonlocalByWitness);
        assert!(r.excludes_complete_separability());
    }

    #[test]
    fn white_point_six_is_nonlocal_by_lp() {
        let r = certify_state(&white_noise_state(0.6).unwrap()).unwrap();
        assert!((r.epsilon - 0.35).abs() < 1e-12);
        assert!((r.witness_value - 0.4).abs() < 1e-12);
        assert!((r.quadruple.sum() - 3.2).abs() < 1e-12);
        assert!(!r.lp_feasible());
        assert_eq!(r.verdict, Verdict::NonlocalByLP);
    }

    #[test]
    fn white_point_four_is_locally_explainable() {
        let r = certify_state(&white_noise_state(0.4).unwrap()).unwrap();
        assert!(r.lp_feasible());
        assert_eq!(r.verdict, Verdict::LocallyExplainableAtThisLevel);
        assert!(!r.excludes_complete_separability());
        let measures = r.model.as_ref().unwrap().event_measures();
        for (m, q) in measures.iter().zip(r.quadruple.values()) {
            assert!((m - q).abs() < 1e-9);
        }
    }

    #[test]
    fn witness_value_is_exact() {
        let r = certify_state(&white_noise_state(0.8).unwrap()).unwrap();
        assert_eq!(r.witness_value, 4.0 * r.epsilon - 1.0);
    }

    #[test]
    fn rejects_non_three_qubit_states() {
        let rho = DensityMatrix::maximally_mixed(4).unwrap();
        assert!(certify_state(&rho).is_err());
    }

    #[test]
    fn thresholds() {
        assert!((noise_threshold(NoiseKind::White) - 0.5).abs() < 1e-6);
        assert!((noise_threshold(NoiseKind::Colored) - 0.5).abs() < 1e-6);
        assert!((witness_threshold(NoiseKind::White) - 5.0 / 7.0).abs() < 1e-6);
        // colored: ε = (1 − p)/2, so 4ε − 1 = 0 at p = 1/2
        assert!((witness_threshold(NoiseKind::Colored) - 0.5).abs() < 1e-6);
    }

    #[test]
    fn bisection_returns_bracket_midpoint() {
        let t = bisect_threshold(|p| p > 0.3);
        assert!((t - 0.3).abs() < THRESHOLD_BRACKET);
    }
}

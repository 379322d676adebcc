use num_complex::Complex64;

use super::jacobi::hermitian_eigenvalues;
use super::matrix::{kron, ComplexMatrix};
use crate::error::{Error, Result};

/// Entry-wise Hermiticity tolerance for states and observables.
pub const HERMITIAN_TOL: f64 = 1e-12;
/// Allowed deviation of a state's trace from one.
pub const TRACE_TOL: f64 = 1e-12;
/// Most negative eigenvalue still accepted as positive semidefinite.
pub const PSD_SLACK: f64 = 1e-10;
/// Tolerance on `M² = I` for dichotomic observables.
pub const INVOLUTION_TOL: f64 = 1e-10;
/// Slack within which outcome probabilities are clamped into [0, 1].
pub const PROBABILITY_TOL: f64 = 1e-10;
/// Unit-norm tolerance for measurement axes.
pub const AXIS_TOL: f64 = 1e-12;

/// A validated statistical operator: Hermitian, unit trace, positive semidefinite.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
}

impl DensityMatrix {
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        let deviation = matrix.hermitian_deviation();
        if deviation > HERMITIAN_TOL {
            return Err(Error::NotHermitian(deviation));
        }
        let trace = matrix.trace();
        if (trace - Complex64::new(1.0, 0.0)).norm() > TRACE_TOL {
            return Err(Error::NotUnitTrace(trace.re));
        }
        let min = hermitian_eigenvalues(&matrix)?.last().copied().unwrap_or_default();
        if min < -PSD_SLACK {
            return Err(Error::NotPositive(min));
        }
        Ok(Self { matrix })
    }

    /// The maximally mixed state `I/dim`.
    pub fn maximally_mixed(dim: usize) -> Result<Self> {
        Self::new(ComplexMatrix::identity(dim)?.scale(1.0 / dim as f64))
    }

    /// Projector onto a normalized pure state.
    pub fn pure(amplitudes: &[Complex64]) -> Result<Self> {
        Self::new(ComplexMatrix::outer(amplitudes, amplitudes)?)
    }

    /// The convex combination `weight·self + (1 - weight)·other`.
    pub fn mix(&self, other: &Self, weight: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&weight) {
            return Err(Error::OutOfRange {
                name: "mixing weight",
                value: weight,
                range: "[0, 1]",
            });
        }
        let combined = self.matrix.scale(weight).try_add(&other.matrix.scale(1.0 - weight))?;
        Self::new(combined)
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    /// `Tr[M·ρ]` for an arbitrary operator `M`.
    pub fn expectation(&self, operator: &ComplexMatrix) -> Result<Complex64> {
        operator.trace_of_product(&self.matrix)
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        hermitian_eigenvalues(&self.matrix).expect("validated state is Hermitian")
    }
}

/// Hermitian operator whose spectrum lies in {+1, -1}.
#[derive(Clone, Debug, PartialEq)]
pub struct DichotomicObservable {
    matrix: ComplexMatrix,
}

impl DichotomicObservable {
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        let deviation = matrix.hermitian_deviation();
        if deviation > HERMITIAN_TOL {
            return Err(Error::NotHermitian(deviation));
        }
        let square = matrix.try_mul(&matrix)?;
        let identity = ComplexMatrix::identity(matrix.dim())?;
        let deviation = square.max_abs_diff(&identity);
        if deviation > INVOLUTION_TOL {
            return Err(Error::NotDichotomic(deviation));
        }
        Ok(Self { matrix })
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    /// Tensor product; the receiver becomes the more significant factor.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        Ok(Self {
            matrix: kron(&self.matrix, &other.matrix)?,
        })
    }
}

/// Measurement outcome of a dichotomic observable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Outcome {
    Plus,
    Minus,
}

impl Outcome {
    pub fn sign(self) -> f64 {
        match self {
            Outcome::Plus => 1.0,
            Outcome::Minus => -1.0,
        }
    }
}

/// Spin observable `n·σ` along a unit axis.
pub fn pauli(axis: [f64; 3]) -> Result<DichotomicObservable> {
    let norm = axis.iter().map(|x| x * x).sum::<f64>().sqrt();
    if !norm.is_finite() || (norm - 1.0).abs() > AXIS_TOL {
        return Err(Error::NonUnitAxis(norm));
    }
    let [x, y, z] = axis;
    let matrix = ComplexMatrix::from_entries(
        2,
        vec![
            Complex64::new(z, 0.0),
            Complex64::new(x, -y),
            Complex64::new(x, y),
            Complex64::new(-z, 0.0),
        ],
    )?;
    DichotomicObservable::new(matrix)
}

/// `D(a, b) = ½ Σ |λ_k(a - b)|`.
pub fn trace_distance(a: &DensityMatrix, b: &DensityMatrix) -> Result<f64> {
    let diff = a.matrix.try_sub(&b.matrix)?;
    let sum: f64 = hermitian_eigenvalues(&diff)?.iter().map(|x| x.abs()).sum();
    Ok((0.5 * sum).min(1.0))
}

/// Probability `Tr[(I + v·A)/2 · ρ]` of obtaining `outcome` when measuring `obs`.
pub fn outcome_probability(rho: &DensityMatrix, obs: &DichotomicObservable, outcome: Outcome) -> Result<f64> {
    if rho.dim() != obs.dim() {
        return Err(Error::DimensionMismatch {
            left: rho.dim(),
            right: obs.dim(),
        });
    }
    let mean = rho.expectation(&obs.matrix)?.re;
    let p = 0.5 * (1.0 + outcome.sign() * mean);
    if !(-PROBABILITY_TOL..=1.0 + PROBABILITY_TOL).contains(&p) {
        return Err(Error::ProbabilityOutOfRange(p));
    }
    Ok(p.clamp(0.0, 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn pauli_axes() {
        let z = pauli([0.0, 0.0, 1.0]).unwrap();
        assert_eq!(
            z.matrix(),
            &ComplexMatrix::from_real(2, &[1.0, 0.0, 0.0, -1.0]).unwrap()
        );
        let x = pauli([1.0, 0.0, 0.0]).unwrap();
        assert_eq!(x.matrix(), &ComplexMatrix::from_real(2, &[0.0, 1.0, 1.0, 0.0]).unwrap());
        let y = pauli([0.0, 1.0, 0.0]).unwrap();
        let expected =
            ComplexMatrix::from_entries(2, vec![c(0.0, 0.0), c(0.0, -1.0), c(0.0, 1.0), c(0.0, 0.0)]).unwrap();
        assert_eq!(y.matrix(), &expected);
    }

    #[test]
    fn pauli_rejects_non_unit_axis() {
        assert!(matches!(pauli([1.0, 1.0, 0.0]), Err(Error::NonUnitAxis(_))));
        assert!(matches!(pauli([f64::NAN, 0.0, 0.0]), Err(Error::NonUnitAxis(_))));
    }

    #[test]
    fn density_validation() {
        let not_unit = ComplexMatrix::identity(2).unwrap();
        assert!(matches!(DensityMatrix::new(not_unit), Err(Error::NotUnitTrace(_))));
        let negative = ComplexMatrix::from_real(2, &[1.5, 0.0, 0.0, -0.5]).unwrap();
        assert!(matches!(DensityMatrix::new(negative), Err(Error::NotPositive(_))));
        let skew = ComplexMatrix::from_entries(2, vec![c(0.5, 0.0), c(0.0, 0.1), c(0.0, 0.1), c(0.5, 0.0)]).unwrap();
        assert!(matches!(DensityMatrix::new(skew), Err(Error::NotHermitian(_))));
    }

    #[test]
    fn non_dichotomic_rejected() {
        let m = ComplexMatrix::from_real(2, &[1.0, 0.0, 0.0, 0.5]).unwrap();
        assert!(matches!(DichotomicObservable::new(m), Err(Error::NotDichotomic(_))));
    }

    #[test]
    fn maximally_mixed_gives_half() {
        let rho = DensityMatrix::maximally_mixed(8).unwrap();
        let x = pauli([1.0, 0.0, 0.0]).unwrap();
        let y = pauli([0.0, 1.0, 0.0]).unwrap();
        let obs = x.tensor(&y).unwrap().tensor(&x).unwrap();
        let p = outcome_probability(&rho, &obs, Outcome::Plus).unwrap();
        assert!((p - 0.5).abs() < 1e-15);
    }

    #[test]
    fn probability_dimension_mismatch() {
        let rho = DensityMatrix::maximally_mixed(4).unwrap();
        let x = pauli([1.0, 0.0, 0.0]).unwrap();
        assert!(matches!(
            outcome_probability(&rho, &x, Outcome::Plus),
            Err(Error::DimensionMismatch { left: 4, right: 2 })
        ));
    }

    #[test]
    fn trace_distance_identical_and_orthogonal() {
        let zero = DensityMatrix::pure(&[c(1.0, 0.0), c(0.0, 0.0)]).unwrap();
        let one = DensityMatrix::pure(&[c(0.0, 0.0), c(1.0, 0.0)]).unwrap();
        assert_eq!(trace_distance(&zero, &zero).unwrap(), 0.0);
        assert!((trace_distance(&zero, &one).unwrap() - 1.0).abs() < 1e-15);
        let mixed = DensityMatrix::maximally_mixed(2).unwrap();
        assert!((trace_distance(&zero, &mixed).unwrap() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn trace_distance_dimension_mismatch() {
        let a = DensityMatrix::maximally_mixed(2).unwrap();
        let b = DensityMatrix::maximally_mixed(4).unwrap();
        assert!(trace_distance(&a, &b).is_err());
    }
}

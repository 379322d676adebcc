//! Misaligned measurements: observer 1 measures along tilted directions
//! `x̄ = (cos θ, sin θ, 0)` and `ȳ = (sin β cos α, sin β sin α, cos β)`
//! instead of x and y, and arbitrary per-party axes in general.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::hermitian::{pauli, DensityMatrix, DichotomicObservable, AXIS_TOL};
use crate::lhv::{ghz_feasible, quadruple_with_observables, ProbabilityQuadruple};
use crate::states::ghz_state;

/// Default lattice resolution per angle axis.
pub const DEFAULT_GRID: usize = 21;

/// Slack applied to `cos θ + sin α sin β ≤ 1`; points on the boundary pass.
pub const CONSTRAINT_TOL: f64 = 1e-12;

/// Tilt of observer 1: θ, α ∈ [0, 2π), β ∈ [0, π].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TiltAngles {
    theta: f64,
    alpha: f64,
    beta: f64,
}

impl TiltAngles {
    pub fn new(theta: f64, alpha: f64, beta: f64) -> Result<Self> {
        let check = |name, value: f64, upper: f64, closed: bool, range| {
            let ok = value >= 0.0 && if closed { value <= upper } else { value < upper };
            if ok {
                Ok(())
            } else {
                Err(Error::OutOfRange { name, value, range })
            }
        };
        check("theta", theta, 2.0 * PI, false, "[0, 2π)")?;
        check("alpha", alpha, 2.0 * PI, false, "[0, 2π)")?;
        check("beta", beta, PI, true, "[0, π]")?;
        Ok(Self { theta, alpha, beta })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn x_axis(&self) -> [f64; 3] {
        [self.theta.cos(), self.theta.sin(), 0.0]
    }

    pub fn y_axis(&self) -> [f64; 3] {
        let (sb, cb) = self.beta.sin_cos();
        [sb * self.alpha.cos(), sb * self.alpha.sin(), cb]
    }

    /// `cos θ + sin α sin β`.
    pub fn constraint_value(&self) -> f64 {
        self.theta.cos() + self.alpha.sin() * self.beta.sin()
    }
}

/// `(σ_x̄, σ_ȳ)` for observer 1.
pub fn tilted_observables(angles: &TiltAngles) -> Result<(DichotomicObservable, DichotomicObservable)> {
    Ok((pauli(angles.x_axis())?, pauli(angles.y_axis())?))
}

/// Unit measurement axes `[party][setting]`, setting 0 replacing x and 1 replacing y.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MeasurementAxes {
    axes: [[[f64; 3]; 2]; 3],
}

impl MeasurementAxes {
    pub fn new(axes: [[[f64; 3]; 2]; 3]) -> Result<Self> {
        for axis in axes.iter().flatten() {
            let norm = axis.iter().map(|x| x * x).sum::<f64>().sqrt();
            if !norm.is_finite() || (norm - 1.0).abs() > AXIS_TOL {
                return Err(Error::NonUnitAxis(norm));
            }
        }
        Ok(Self { axes })
    }

    /// Every party measures along the true x and y axes.
    pub fn ideal() -> Self {
        Self {
            axes: [[[1.0, 0.0, 0.0], [0.0, 1.0, 0.0]]; 3],
        }
    }

    /// Ideal axes except observer 1, who uses the tilted pair.
    pub fn tilted_first(angles: &TiltAngles) -> Self {
        let mut axes = Self::ideal().axes;
        axes[0] = [angles.x_axis(), angles.y_axis()];
        Self { axes }
    }

    pub fn axes(&self) -> &[[[f64; 3]; 2]; 3] {
        &self.axes
    }
}

/// GHZ event probabilities of `rho` with every party measuring along `dirs`.
pub fn general_quadruple(dirs: &MeasurementAxes, rho: &DensityMatrix) -> Result<ProbabilityQuadruple> {
    let mut observables = Vec::with_capacity(3);
    for [x, y] in dirs.axes {
        observables.push([pauli(x)?, pauli(y)?]);
    }
    let observables: [[DichotomicObservable; 2]; 3] = observables.try_into().expect("three parties");
    quadruple_with_observables(rho, &observables)
}

/// Event probabilities on the pure GHZ state when observer 1 is tilted,
/// computed numerically.
pub fn tilted_quadruple(angles: &TiltAngles) -> Result<ProbabilityQuadruple> {
    general_quadruple(&MeasurementAxes::tilted_first(angles), &ghz_state())
}

/// Closed form of `tilted_quadruple`:
/// `q₁ = q₂ = 1 − (1 − cos θ)/2`, `q₃ = q₄ = 1 − (1 − sin α sin β)/2`.
pub fn tilted_quadruple_closed_form(angles: &TiltAngles) -> [f64; 4] {
    let x = 1.0 - (1.0 - angles.theta.cos()) / 2.0;
    let y = 1.0 - (1.0 - angles.alpha.sin() * angles.beta.sin()) / 2.0;
    [x, x, y, y]
}

/// Whether `cos θ + sin α sin β ≤ 1`, the condition a local model for the
/// tilted GHZ statistics must satisfy.
pub fn locality_constraint_satisfied(angles: &TiltAngles) -> bool {
    angles.constraint_value() <= 1.0 + CONSTRAINT_TOL
}

/// One lattice point of an angle scan.
#[derive(Clone, Debug, PartialEq)]
pub struct AngleScanPoint {
    pub angles: TiltAngles,
    pub constraint_value: f64,
    pub quadruple: ProbabilityQuadruple,
    /// A local deterministic model reproduces the tilted quadruple.
    pub feasible: bool,
}

/// `grid_n` equally spaced samples per axis: θ, α = 2πk/n and β = πk/n for
/// k = 0..n, so a grid divisible by four contains both π/2 and the ideal
/// direction pair.
pub fn angle_lattice(grid_n: usize) -> Result<Vec<TiltAngles>> {
    if grid_n < 2 {
        return Err(Error::OutOfRange {
            name: "grid size",
            value: grid_n as f64,
            range: "[2, ∞)",
        });
    }
    let n = grid_n as f64;
    let mut out = Vec::with_capacity(grid_n.pow(3));
    for i in 0..grid_n {
        for j in 0..grid_n {
            for k in 0..grid_n {
                out.push(TiltAngles::new(
                    2.0 * PI * i as f64 / n,
                    2.0 * PI * j as f64 / n,
                    PI * k as f64 / n,
                )?);
            }
        }
    }
    Ok(out)
}

/// Evaluates the LP verdict on every point of `angle_lattice(grid_n)`, in
/// lattice order (θ outermost, β innermost).
pub fn angle_scan(grid_n: usize) -> Result<Vec<AngleScanPoint>> {
    angle_lattice(grid_n)?
        .into_iter()
        .map(|angles| {
            let quadruple = tilted_quadruple(&angles)?;
            Ok(AngleScanPoint {
                angles,
                constraint_value: angles.constraint_value(),
                feasible: ghz_feasible(&quadruple).is_some(),
                quadruple,
            })
        })
        .collect()
}

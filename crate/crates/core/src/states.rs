//! GHZ state, its two noisy preparations, and auxiliary state generators.

use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};
use crate::hermitian::{trace_distance, ComplexMatrix, DensityMatrix};

/// Kind of noise mixed into the GHZ preparation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NoiseKind {
    /// Admixture of the maximally mixed state `I/8`.
    White,
    /// Admixture of the classical mixture of `|000⟩` and `|111⟩`.
    Colored,
}

impl NoiseKind {
    pub fn state(self, p: PurityParameter) -> DensityMatrix {
        match self {
            NoiseKind::White => white_noise(p),
            NoiseKind::Colored => colored_noise(p),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            NoiseKind::White => "white",
            NoiseKind::Colored => "colored",
        }
    }
}

impl fmt::Display for NoiseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NoiseKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "white" => Ok(NoiseKind::White),
            "colored" => Ok(NoiseKind::Colored),
            other => Err(format!("unknown noise kind `{other}`")),
        }
    }
}

/// Weight `p ∈ [0, 1]` of the GHZ projector in a noisy preparation.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct PurityParameter(f64);

impl PurityParameter {
    pub fn new(p: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::OutOfRange {
                name: "purity p",
                value: p,
                range: "[0, 1]",
            });
        }
        Ok(Self(p))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

fn ghz_matrix() -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(8).expect("dimension 8");
    for (r, c) in [(0, 0), (0, 7), (7, 0), (7, 7)] {
        m.set(r, c, Complex64::new(0.5, 0.0));
    }
    m
}

/// Projector onto `(|000⟩ + |111⟩)/√2`.
pub fn ghz_state() -> DensityMatrix {
    static GHZ: OnceLock<DensityMatrix> = OnceLock::new();
    GHZ.get_or_init(|| DensityMatrix::new(ghz_matrix()).expect("GHZ projector is a valid state"))
        .clone()
}

/// The GHZ state vector.
pub fn ghz_amplitudes() -> [Complex64; 8] {
    let mut v = [Complex64::new(0.0, 0.0); 8];
    v[0] = Complex64::new(FRAC_1_SQRT_2, 0.0);
    v[7] = Complex64::new(FRAC_1_SQRT_2, 0.0);
    v
}

fn white_noise(p: PurityParameter) -> DensityMatrix {
    let p = p.value();
    let mut m = ghz_matrix().scale(p);
    let background = (1.0 - p) / 8.0;
    for i in 0..8 {
        m.set(i, i, m.get(i, i) + background);
    }
    DensityMatrix::new(m).expect("white-noise mixture is a valid state")
}

fn colored_noise(p: PurityParameter) -> DensityMatrix {
    let p = p.value();
    let mut m = ghz_matrix().scale(p);
    let background = (1.0 - p) / 2.0;
    for i in [0, 7] {
        m.set(i, i, m.get(i, i) + background);
    }
    DensityMatrix::new(m).expect("colored-noise mixture is a valid state")
}

/// `p·P_GHZ + (1 - p)/8 · I₈`.
pub fn white_noise_state(p: f64) -> Result<DensityMatrix> {
    Ok(white_noise(PurityParameter::new(p)?))
}

/// `p·P_GHZ + (1 - p)/2 · (|000⟩⟨000| + |111⟩⟨111|)`.
pub fn colored_noise_state(p: f64) -> Result<DensityMatrix> {
    Ok(colored_noise(PurityParameter::new(p)?))
}

/// Random three-qubit state `G·G†/Tr(G·G†)`.
///
/// `G` has independent standard-normal real and imaginary parts drawn from
/// ChaCha20 seeded with `seed`, so the output depends only on the seed.
pub fn random_density(seed: u64) -> DensityMatrix {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let entries: Vec<Complex64> = (0..64)
        .map(|_| {
            let re: f64 = StandardNormal.sample(&mut rng);
            let im: f64 = StandardNormal.sample(&mut rng);
            Complex64::new(re, im)
        })
        .collect();
    let g = ComplexMatrix::from_entries(8, entries).expect("64 entries");
    let gram = g.try_mul(&g.adjoint()).expect("same dimension");
    let norm = gram.trace().re;
    let mut rho = gram.scale(1.0 / norm);
    // Hermitize exactly; rounding in the product can leave ~1e-17 asymmetry.
    for r in 0..8 {
        rho.set(r, r, Complex64::new(rho.get(r, r).re, 0.0));
        for c in r + 1..8 {
            let avg = (rho.get(r, c) + rho.get(c, r).conj()) * 0.5;
            rho.set(r, c, avg);
            rho.set(c, r, avg.conj());
        }
    }
    DensityMatrix::new(rho).expect("normalized Gram matrix is a valid state")
}

/// Moves from the GHZ state toward `direction` until the trace distance to
/// GHZ equals `target_eps`, using `t·direction + (1 - t)·P_GHZ`.
pub fn state_at_distance(target_eps: f64, direction: &DensityMatrix) -> Result<DensityMatrix> {
    let ghz = ghz_state();
    let reach = trace_distance(direction, &ghz)?;
    if !target_eps.is_finite() || target_eps < 0.0 {
        return Err(Error::OutOfRange {
            name: "target distance",
            value: target_eps,
            range: "[0, ∞)",
        });
    }
    if target_eps == 0.0 {
        return Ok(ghz);
    }
    if reach == 0.0 || target_eps > reach {
        return Err(Error::UnreachableDistance {
            target: target_eps,
            max: reach,
        });
    }
    direction.mix(&ghz, target_eps / reach)
}

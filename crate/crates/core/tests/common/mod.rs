//! Test-only oracles, kept independent of the library's LP and indicator code.
#![allow(dead_code)]

use ghzcert::ComplexMatrix;
use nalgebra::{Matrix5, Vector5};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

/// Event patterns reachable by ±1 assignments, derived by brute force over
/// the six values with the products written out by hand.
pub fn achievable_patterns() -> Vec<[f64; 4]> {
    let mut out: Vec<[f64; 4]> = Vec::new();
    for mask in 0u32..64 {
        let v = |bit: u32| if mask >> bit & 1 == 1 { -1 } else { 1 };
        let (x1, y1, x2, y2, x3, y3) = (v(0), v(1), v(2), v(3), v(4), v(5));
        let e = [
            (x1 * x2 * x3 == 1) as u8 as f64,
            (x1 * y2 * y3 == -1) as u8 as f64,
            (y1 * x2 * y3 == -1) as u8 as f64,
            (y1 * y2 * x3 == -1) as u8 as f64,
        ];
        if !out.contains(&e) {
            out.push(e);
        }
    }
    out
}

/// Convex-hull membership by Carathéodory: `q` lies in the hull of the
/// patterns iff it has nonnegative barycentric coordinates in some simplex
/// spanned by five affinely independent patterns.
pub fn hull_contains(q: [f64; 4], tol: f64) -> bool {
    let pts = achievable_patterns();
    let n = pts.len();
    let rhs = Vector5::new(q[0], q[1], q[2], q[3], 1.0);
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    for e in d + 1..n {
                        let idx = [a, b, c, d, e];
                        let m = Matrix5::from_fn(|r, col| if r < 4 { pts[idx[col]][r] } else { 1.0 });
                        if m.determinant().abs() < 1e-12 {
                            continue;
                        }
                        if let Some(lambda) = m.lu().solve(&rhs) {
                            if lambda.iter().all(|&l| l >= -tol) {
                                return true;
                            }
                        }
                    }
                }
            }
        }
    }
    false
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn gaussian_vector(rng: &mut ChaCha8Rng, n: usize) -> Vec<Complex64> {
    (0..n)
        .map(|_| {
            let re: f64 = StandardNormal.sample(rng);
            let im: f64 = StandardNormal.sample(rng);
            Complex64::new(re, im)
        })
        .collect()
}

/// Random Hermitian matrix `(G + G†)/2` with Gaussian entries.
pub fn random_hermitian(rng: &mut ChaCha8Rng, dim: usize) -> ComplexMatrix {
    let g = ComplexMatrix::from_entries(dim, gaussian_vector(rng, dim * dim)).unwrap();
    (&g + &g.adjoint()).scale(0.5)
}

/// Orthogonal projector onto a random subspace of random rank 1..dim.
pub fn random_projector(rng: &mut ChaCha8Rng, dim: usize) -> ComplexMatrix {
    let rank = rng.random_range(1..dim);
    let mut basis: Vec<Vec<Complex64>> = Vec::new();
    while basis.len() < rank {
        let mut v = gaussian_vector(rng, dim);
        for u in &basis {
            let overlap: Complex64 = u.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
            for (x, y) in v.iter_mut().zip(u) {
                *x -= overlap * y;
            }
        }
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-8 {
            basis.push(v.into_iter().map(|z| z / norm).collect());
        }
    }
    let mut p = ComplexMatrix::zeros(dim).unwrap();
    for u in &basis {
        p = &p + &ComplexMatrix::outer(u, u).unwrap();
    }
    p
}

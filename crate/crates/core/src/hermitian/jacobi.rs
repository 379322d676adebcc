//! Cyclic Jacobi eigenvalue solver for small complex Hermitian matrices.
//!
//! Each rotation first removes the phase of the pivot `h[p][q]` with a
//! diagonal unitary and then applies a real plane rotation, so the combined
//! transformation `G = D·R` stays unitary and `G† H G` zeroes the pivot.

use num_complex::Complex64;

use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};

/// Inputs must be Hermitian to within this entry-wise deviation.
pub const HERMITIAN_INPUT_TOL: f64 = 1e-10;

/// Off-diagonal Frobenius mass at which the sweep stops (scaled by the
/// matrix norm when that exceeds one).
pub const OFF_DIAGONAL_TOL: f64 = 1e-14;

const MAX_SWEEPS: usize = 64;

/// All real eigenvalues of a Hermitian matrix, sorted descending.
pub fn hermitian_eigenvalues(h: &ComplexMatrix) -> Result<Vec<f64>> {
    let deviation = h.hermitian_deviation();
    if deviation > HERMITIAN_INPUT_TOL {
        return Err(Error::NotHermitian(deviation));
    }
    let n = h.dim();
    let mut a = h.clone();
    // symmetrize away the admissible deviation
    for r in 0..n {
        a.set(r, r, Complex64::new(a.get(r, r).re, 0.0));
        for c in r + 1..n {
            let avg = (a.get(r, c) + a.get(c, r).conj()) * 0.5;
            a.set(r, c, avg);
            a.set(c, r, avg.conj());
        }
    }

    let scale = a.entries().iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt().max(1.0);
    let threshold = OFF_DIAGONAL_TOL * scale;

    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&a) < threshold {
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                rotate(&mut a, p, q);
            }
        }
    }

    let mut eigenvalues: Vec<f64> = (0..n).map(|i| a.get(i, i).re).collect();
    eigenvalues.sort_by(|x, y| y.total_cmp(x));
    Ok(eigenvalues)
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.dim();
    let mut acc = 0.0;
    for r in 0..n {
        for c in 0..n {
            if r != c {
                acc += a.get(r, c).norm_sqr();
            }
        }
    }
    acc.sqrt()
}

fn rotate(a: &mut ComplexMatrix, p: usize, q: usize) {
    let pivot = a.get(p, q);
    let magnitude = pivot.norm();
    if magnitude == 0.0 {
        return;
    }
    let phase = pivot / magnitude;
    let app = a.get(p, p).re;
    let aqq = a.get(q, q).re;

    let tau = (aqq - app) / (2.0 * magnitude);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let cs = 1.0 / (1.0 + t * t).sqrt();
    let sn = t * cs;

    // G restricted to the (p, q) plane: [[cs, sn], [-conj(phase)·sn, conj(phase)·cs]]
    let g00 = Complex64::new(cs, 0.0);
    let g01 = Complex64::new(sn, 0.0);
    let g10 = -phase.conj() * sn;
    let g11 = phase.conj() * cs;

    let n = a.dim();
    // A ← A·G
    for r in 0..n {
        let x = a.get(r, p);
        let y = a.get(r, q);
        a.set(r, p, x * g00 + y * g10);
        a.set(r, q, x * g01 + y * g11);
    }
    // A ← G†·A
    for c in 0..n {
        let x = a.get(p, c);
        let y = a.get(q, c);
        a.set(p, c, g00.conj() * x + g10.conj() * y);
        a.set(q, c, g01.conj() * x + g11.conj() * y);
    }
    a.set(p, q, Complex64::new(0.0, 0.0));
    a.set(q, p, Complex64::new(0.0, 0.0));
    a.set(p, p, Complex64::new(a.get(p, p).re, 0.0));
    a.set(q, q, Complex64::new(a.get(q, q).re, 0.0));
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hermitian::matrix::kron;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn ghz_projector() -> ComplexMatrix {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let mut v = vec![c(0.0, 0.0); 8];
        v[0] = c(s, 0.0);
        v[7] = c(s, 0.0);
        ComplexMatrix::outer(&v, &v).unwrap()
    }

    #[test]
    fn pauli_z_spectrum() {
        let z = ComplexMatrix::from_real(2, &[1.0, 0.0, 0.0, -1.0]).unwrap();
        assert_eq!(hermitian_eigenvalues(&z).unwrap(), vec![1.0, -1.0]);
    }

    #[test]
    fn pauli_y_spectrum() {
        let y = ComplexMatrix::from_entries(2, vec![c(0.0, 0.0), c(0.0, -1.0), c(0.0, 1.0), c(0.0, 0.0)]).unwrap();
        let ev = hermitian_eigenvalues(&y).unwrap();
        assert!((ev[0] - 1.0).abs() < 1e-14 && (ev[1] + 1.0).abs() < 1e-14, "{ev:?}");
    }

    #[test]
    fn ghz_projector_is_rank_one() {
        let ev = hermitian_eigenvalues(&ghz_projector()).unwrap();
        assert!((ev[0] - 1.0).abs() < 1e-12);
        for x in &ev[1..] {
            assert!(x.abs() < 1e-12, "{ev:?}");
        }
    }

    #[test]
    fn white_noise_difference_spectrum() {
        // (I/8 - P_GHZ) has 1/8 on the seven-dimensional complement of |GHZ⟩
        // and 1/8 - 1 = -7/8 along |GHZ⟩.
        let diff = &ComplexMatrix::identity(8).unwrap().scale(0.125) - &ghz_projector();
        let ev = hermitian_eigenvalues(&diff).unwrap();
        for x in &ev[..7] {
            assert!((x - 0.125).abs() < 1e-12, "{ev:?}");
        }
        assert!((ev[7] + 0.875).abs() < 1e-12);
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = ComplexMatrix::from_real(2, &[0.0, 1.0, 0.0, 0.0]).unwrap();
        assert!(matches!(hermitian_eigenvalues(&m), Err(Error::NotHermitian(_))));
    }

    #[test]
    fn degenerate_tensor_spectrum() {
        let y = ComplexMatrix::from_entries(2, vec![c(0.0, 0.0), c(0.0, -1.0), c(0.0, 1.0), c(0.0, 0.0)]).unwrap();
        let x = ComplexMatrix::from_real(2, &[0.0, 1.0, 1.0, 0.0]).unwrap();
        let xyy = kron(&kron(&x, &y).unwrap(), &y).unwrap();
        let ev = hermitian_eigenvalues(&xyy).unwrap();
        for (i, v) in ev.iter().enumerate() {
            let want = if i < 4 { 1.0 } else { -1.0 };
            assert!((v - want).abs() < 1e-12, "{ev:?}");
        }
    }
}

//! Dense phase-one simplex for tiny feasibility problems `A·x = b, x ≥ 0`.
//!
//! One artificial variable per row starts as the basis; the sum of the
//! artificials is minimized with Bland's rule, which cannot cycle. The
//! system is feasible iff that minimum is (numerically) zero.

const PIVOT_TOL: f64 = 1e-12;

/// Outcome of a phase-one solve.
#[derive(Clone, Debug, PartialEq)]
pub enum PhaseOne {
    Feasible(Vec<f64>),
    /// The minimal total infeasibility reached.
    Infeasible(f64),
}

/// Finds `x ≥ 0` with `A·x = b` to within `tol` per row, if one exists.
///
/// `rows` holds `A` row by row; every row must have the same length.
pub fn phase_one(rows: &[Vec<f64>], rhs: &[f64], tol: f64) -> PhaseOne {
    assert_eq!(rows.len(), rhs.len(), "one right-hand side per row");
    let m = rows.len();
    let n = rows.first().map_or(0, Vec::len);
    assert!(rows.iter().all(|r| r.len() == n), "ragged constraint matrix");

    let width = n + m + 1;
    let mut tableau = vec![vec![0.0; width]; m];
    for (i, (row, &b)) in rows.iter().zip(rhs).enumerate() {
        let flip = if b < 0.0 { -1.0 } else { 1.0 };
        for (j, &a) in row.iter().enumerate() {
            tableau[i][j] = flip * a;
        }
        tableau[i][n + i] = 1.0;
        tableau[i][width - 1] = flip * b;
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    // reduced costs of "minimize Σ artificials" with the artificial basis priced out
    let mut cost = vec![0.0; width];
    for row in &tableau {
        for j in 0..n {
            cost[j] -= row[j];
        }
        cost[width - 1] -= row[width - 1];
    }

    while let Some(entering) = (0..n + m).find(|&j| cost[j] < -PIVOT_TOL) {
        let mut leaving: Option<usize> = None;
        let mut best = f64::INFINITY;
        for i in 0..m {
            let a = tableau[i][entering];
            if a > PIVOT_TOL {
                let ratio = tableau[i][width - 1] / a;
                let better = match leaving {
                    None => true,
                    Some(l) => ratio < best - PIVOT_TOL || (ratio <= best + PIVOT_TOL && basis[i] < basis[l]),
                };
                if better {
                    best = ratio;
                    leaving = Some(i);
                }
            }
        }
        // The phase-one objective is bounded below by zero, so a column with
        // negative reduced cost always has a positive entry.
        let Some(pivot_row) = leaving else { break };
        pivot(&mut tableau, &mut cost, pivot_row, entering);
        basis[pivot_row] = entering;
    }

    let infeasibility = -cost[width - 1];
    if infeasibility > tol {
        return PhaseOne::Infeasible(infeasibility);
    }

    let mut x = vec![0.0; n];
    for (i, &var) in basis.iter().enumerate() {
        if var < n {
            x[var] = tableau[i][width - 1].max(0.0);
        }
    }
    let max_residual = rows
        .iter()
        .zip(rhs)
        .map(|(row, b)| (row.iter().zip(&x).map(|(a, v)| a * v).sum::<f64>() - b).abs())
        .fold(0.0, f64::max);
    if max_residual > tol {
        return PhaseOne::Infeasible(max_residual);
    }
    PhaseOne::Feasible(x)
}

fn pivot(tableau: &mut [Vec<f64>], cost: &mut [f64], row: usize, col: usize) {
    let inv = 1.0 / tableau[row][col];
    for v in tableau[row].iter_mut() {
        *v *= inv;
    }
    let pivot_row = tableau[row].clone();
    for (i, r) in tableau.iter_mut().enumerate() {
        if i == row {
            continue;
        }
        let factor = r[col];
        if factor != 0.0 {
            for (v, p) in r.iter_mut().zip(&pivot_row) {
                *v -= factor * p;
            }
            r[col] = 0.0;
        }
    }
    let factor = cost[col];
    if factor != 0.0 {
        for (v, p) in cost.iter_mut().zip(&pivot_row) {
            *v -= factor * p;
        }
        cost[col] = 0.0;
    }
}

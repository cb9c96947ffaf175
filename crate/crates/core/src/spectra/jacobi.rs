//! Cyclic Jacobi eigensolver for dense real symmetric matrices.

use super::SquareMatrix;
use crate::error::{Error, Result};

/// Entry-wise symmetry tolerance on the input.
pub const SYMMETRY_TOL: f64 = 1e-12;
pub const MAX_SWEEPS: usize = 100;

/// Eigenvalues in descending order with matching eigenvectors as columns.
#[derive(Debug, Clone)]
pub struct SymmetricEigen {
    pub values: Vec<f64>,
    pub vectors: SquareMatrix,
}

fn off_diagonal_norm(a: &SquareMatrix) -> f64 {
    let n = a.order();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)] * a[(i, j)];
            }
        }
    }
    s.sqrt()
}

/// Diagonalises `m` by cyclic sweeps of plane rotations.
///
/// Stops once the off-diagonal Frobenius norm drops below
/// `tol · max(1, ‖m‖_F)`.
pub fn symmetric_eigen(m: &SquareMatrix, tol: f64) -> Result<SymmetricEigen> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::domain("eigensolver tolerance must be positive"));
    }
    let asym = m.asymmetry();
    if asym > SYMMETRY_TOL {
        return Err(Error::domain(format!("matrix is not symmetric (defect {asym:e})")));
    }
    let n = m.order();
    let mut a = m.clone();
    let mut v = SquareMatrix::identity(n);
    let threshold = tol * m.frobenius_norm().max(1.0);

    let mut converged = false;
    for _sweep in 0..=MAX_SWEEPS {
        if off_diagonal_norm(&a) < threshold {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[(k, p)], a[(k, q)]);
                    a[(k, p)] = c * akp - s * akq;
                    a[(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[(p, k)], a[(q, k)]);
                    a[(p, k)] = c * apk - s * aqk;
                    a[(q, k)] = s * apk + c * aqk;
                }
                a[(p, q)] = 0.0;
                a[(q, p)] = 0.0;
                for k in 0..n {
                    let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
                    v[(k, p)] = c * vkp - s * vkq;
                    v[(k, q)] = s * vkp + c * vkq;
                }
            }
        }
    }
    if !converged {
        return Err(Error::numerical(format!("Jacobi iteration did not converge in {MAX_SWEEPS} sweeps")));
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(j, j)].total_cmp(&a[(i, i)]));
    let values = order.iter().map(|&i| a[(i, i)]).collect();
    let mut vectors = SquareMatrix::zeros(n);
    for (col, &src) in order.iter().enumerate() {
        for k in 0..n {
            vectors[(k, col)] = v[(k, src)];
        }
    }
    Ok(SymmetricEigen { values, vectors })
}

/// Eigenvalues only, descending.
pub fn symmetric_eigenvalues(m: &SquareMatrix, tol: f64) -> Result<Vec<f64>> {
    symmetric_eigen(m, tol).map(|e| e.values)
}

//! `A_α` and related matrices of a digraph, their singular values and the α trace norm.
//!
//! Singular values come from a Jacobi diagonalisation of the Gram matrix
//! `M·Mᵀ`. Each value is taken as `‖Mᵀ v‖` for the corresponding unit
//! eigenvector `v`, which equals `√μ` but keeps zero singular values at
//! rounding level instead of at the square root of it.

mod jacobi;
mod matrix;

pub use jacobi::{symmetric_eigen, symmetric_eigenvalues, SymmetricEigen, MAX_SWEEPS, SYMMETRY_TOL};
pub use matrix::SquareMatrix;

use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// Eigensolver convergence tolerance.
pub const EIGEN_TOL: f64 = 1e-12;
/// Gram eigenvalues below `-NEGATIVE_GRAM_TOL · scale` are a hard error.
pub const NEGATIVE_GRAM_TOL: f64 = 1e-10;
/// Singular values closer than this are reported as one value with multiplicity.
pub const MULTIPLICITY_TOL: f64 = 1e-8;

/// A value of α in `[0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct AlphaParam(f64);

impl AlphaParam {
    pub fn new(value: f64) -> Result<Self> {
        if (0.0..1.0).contains(&value) {
            Ok(AlphaParam(value))
        } else {
            Err(Error::domain(format!("alpha must lie in [0, 1), got {value}")))
        }
    }

    pub const ZERO: AlphaParam = AlphaParam(0.0);
    pub const HALF: AlphaParam = AlphaParam(0.5);

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0.0
    }
}

impl TryFrom<f64> for AlphaParam {
    type Error = Error;
    fn try_from(v: f64) -> Result<Self> {
        AlphaParam::new(v)
    }
}

impl From<AlphaParam> for f64 {
    fn from(a: AlphaParam) -> f64 {
        a.0
    }
}

/// `A_α(D) = αΔ⁺(D) + (1 − α)A(D)` for a specific digraph and α.
#[derive(Debug, Clone, PartialEq)]
pub struct AlphaMatrix {
    alpha: AlphaParam,
    matrix: SquareMatrix,
}

impl AlphaMatrix {
    pub fn alpha(&self) -> AlphaParam {
        self.alpha
    }

    pub fn matrix(&self) -> &SquareMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> SquareMatrix {
        self.matrix
    }

    pub fn order(&self) -> usize {
        self.matrix.order()
    }
}

pub fn alpha_matrix(d: &Digraph, alpha: AlphaParam) -> AlphaMatrix {
    let a = alpha.value();
    let mut m = SquareMatrix::zeros(d.order());
    for &(u, v) in d.arcs() {
        m[(u, v)] = 1.0 - a;
        m[(u, u)] += a;
    }
    AlphaMatrix { alpha, matrix: m }
}

/// `A(D)`.
pub fn adjacency_matrix(d: &Digraph) -> SquareMatrix {
    alpha_matrix(d, AlphaParam::ZERO).into_matrix()
}

/// `Δ⁺(D)`.
pub fn out_degree_matrix(d: &Digraph) -> SquareMatrix {
    let mut m = SquareMatrix::zeros(d.order());
    for (i, k) in d.degrees().out_degree.into_iter().enumerate() {
        m[(i, i)] = k as f64;
    }
    m
}

/// `L(D) = Δ⁺(D) − A(D)`.
pub fn laplacian(d: &Digraph) -> SquareMatrix {
    let mut m = out_degree_matrix(d);
    for &(u, v) in d.arcs() {
        m[(u, v)] = -1.0;
    }
    m
}

/// `Q(D) = Δ⁺(D) + A(D)`.
pub fn signless_laplacian(d: &Digraph) -> SquareMatrix {
    let mut m = out_degree_matrix(d);
    for &(u, v) in d.arcs() {
        m[(u, v)] = 1.0;
    }
    m
}

/// Singular values sorted descending together with their sum.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SingularSpectrum {
    pub values: Vec<f64>,
    pub trace_norm: f64,
}

impl SingularSpectrum {
    /// Groups consecutive values within [`MULTIPLICITY_TOL`] of the group's
    /// leading value.
    pub fn with_multiplicities(&self) -> Vec<(f64, usize)> {
        let mut groups: Vec<(f64, usize)> = Vec::new();
        for &s in &self.values {
            match groups.last_mut() {
                Some((lead, count)) if (*lead - s).abs() <= MULTIPLICITY_TOL => *count += 1,
                _ => groups.push((s, 1)),
            }
        }
        groups
    }

    pub fn sum_of_squares(&self) -> f64 {
        self.values.iter().map(|s| s * s).sum()
    }
}

/// Singular values of an arbitrary square matrix through its Gram matrix.
pub fn singular_values(m: &SquareMatrix, tol: f64) -> Result<SingularSpectrum> {
    let n = m.order();
    let eig = symmetric_eigen(&m.gram(), tol)?;
    let fro2 = m.frobenius_norm().powi(2);
    let scale = if fro2 == 0.0 { 1.0 } else { fro2 };
    if let Some(&mu) = eig.values.iter().find(|&&mu| mu < -NEGATIVE_GRAM_TOL * scale) {
        return Err(Error::numerical(format!("Gram matrix has eigenvalue {mu:e}, below the PSD threshold")));
    }
    let mut values: Vec<f64> = (0..n)
        .map(|col| {
            // ‖Mᵀ v‖ for the eigenvector in column `col`.
            (0..n)
                .map(|j| {
                    let x: f64 = (0..n).map(|i| m[(i, j)] * eig.vectors[(i, col)]).sum();
                    x * x
                })
                .sum::<f64>()
                .sqrt()
        })
        .collect();
    values.sort_by(|a, b| b.total_cmp(a));
    let trace_norm = values.iter().sum();
    Ok(SingularSpectrum { values, trace_norm })
}

/// Nuclear norm of a square matrix.
pub fn matrix_trace_norm(m: &SquareMatrix) -> Result<f64> {
    singular_values(m, EIGEN_TOL).map(|s| s.trace_norm)
}

/// α singular values of a digraph.
pub fn alpha_spectrum(d: &Digraph, alpha: AlphaParam) -> Result<SingularSpectrum> {
    singular_values(alpha_matrix(d, alpha).matrix(), EIGEN_TOL)
}

/// `‖A_α(D)‖_*`.
pub fn trace_norm(d: &Digraph, alpha: AlphaParam) -> Result<f64> {
    alpha_spectrum(d, alpha).map(|s| s.trace_norm)
}

/// `‖M1 + M2‖_* ≤ ‖M1‖_* + ‖M2‖_* + tol`.
pub fn subadditivity_check(m1: &SquareMatrix, m2: &SquareMatrix, tol: f64) -> Result<bool> {
    let sum = m1.try_add(m2)?;
    Ok(matrix_trace_norm(&sum)? <= matrix_trace_norm(m1)? + matrix_trace_norm(m2)? + tol)
}

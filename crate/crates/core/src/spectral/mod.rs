//! Spectra of averaging operators and the derived expansion quantities.

mod eigen;
mod matrix;

use serde::{Deserialize, Serialize};

pub use eigen::{sym_eigenvalues, sym_eigenvalues_capped, DEFAULT_DIM_CAP, SYMMETRY_TOL};
pub use matrix::Matrix;

use crate::error::{Error, Result};
use crate::schreier::SchreierGraph;

/// Absolute tolerance for eigenvalue-level comparisons.
pub const EIGEN_TOL: f64 = 1e-8;

/// Spectrum of a walk matrix together with its gap and two-sided expansion.
///
/// On a single vertex there is no non-trivial eigenvalue: `lambda2` and
/// `lambda_min` are `None`, the two-sided value is 0 and the gap is pinned at
/// the top of its range, 2.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralSummary {
    /// Descending.
    pub eigenvalues: Vec<f64>,
    pub lambda2: Option<f64>,
    pub lambda_min: Option<f64>,
    /// `1 - λ₂`, clamped to `[0, 2]`.
    pub gap: f64,
    /// `max(|λ₂|, |λ_min|)`.
    pub two_sided_lambda: f64,
}

impl SpectralSummary {
    /// Builds the summary from a descending spectrum whose top entry is the
    /// trivial eigenvalue 1.
    pub fn from_eigenvalues(eigenvalues: Vec<f64>) -> Self {
        let lambda2 = eigenvalues.get(1).copied();
        let lambda_min = if eigenvalues.len() > 1 { eigenvalues.last().copied() } else { None };
        let gap = match lambda2 {
            Some(l2) => (1.0 - l2).clamp(0.0, 2.0),
            None => 2.0,
        };
        let two_sided_lambda = match (lambda2, lambda_min) {
            (Some(a), Some(b)) => a.abs().max(b.abs()),
            _ => 0.0,
        };
        SpectralSummary { eigenvalues, lambda2, lambda_min, gap, two_sided_lambda }
    }
}

pub fn spectral_summary(graph: &SchreierGraph) -> Result<SpectralSummary> {
    spectral_summary_capped(graph, DEFAULT_DIM_CAP)
}

pub fn spectral_summary_capped(graph: &SchreierGraph, cap: usize) -> Result<SpectralSummary> {
    let eigenvalues = sym_eigenvalues_capped(&graph.walk(), cap)?;
    Ok(SpectralSummary::from_eigenvalues(eigenvalues))
}

/// `⟨Mv, v⟩ / ⟨v, v⟩`.
pub fn rayleigh_quotient(m: &Matrix, v: &[f64]) -> Result<f64> {
    if v.len() != m.dim() {
        return Err(Error::DimensionMismatch { expected: m.dim(), found: v.len() });
    }
    let norm: f64 = v.iter().map(|x| x * x).sum();
    if norm == 0.0 {
        return Err(Error::ZeroVector);
    }
    let mv = m.mul_vec(v);
    Ok(mv.iter().zip(v).map(|(a, b)| a * b).sum::<f64>() / norm)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summary_of_complete_bipartite_walk() {
        let s = SpectralSummary::from_eigenvalues(vec![1.0, 0.0, 0.0, 0.0, 0.0, -1.0]);
        assert_eq!(s.gap, 1.0);
        assert_eq!(s.two_sided_lambda, 1.0);
    }

    #[test]
    fn single_vertex_summary() {
        let s = SpectralSummary::from_eigenvalues(vec![1.0]);
        assert_eq!((s.lambda2, s.lambda_min), (None, None));
        assert_eq!(s.two_sided_lambda, 0.0);
        assert_eq!(s.gap, 2.0);
    }

    #[test]
    fn gap_is_clamped() {
        let s = SpectralSummary::from_eigenvalues(vec![1.0, 1.0 + 1e-15]);
        assert_eq!(s.gap, 0.0);
    }

    #[test]
    fn rayleigh_examples() {
        let m = Matrix::from_rows(&[vec![2.0, 1.0], vec![1.0, 2.0]]).unwrap();
        assert!((rayleigh_quotient(&m, &[1.0, 1.0]).unwrap() - 3.0).abs() < 1e-15);
        assert!((rayleigh_quotient(&m, &[1.0, -1.0]).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(rayleigh_quotient(&m, &[0.0, 0.0]).unwrap_err(), Error::ZeroVector);
        assert!(matches!(rayleigh_quotient(&m, &[1.0]), Err(Error::DimensionMismatch { .. })));

        let walk = Matrix::from_fn(4, |_, _| 0.25);
        assert!((rayleigh_quotient(&walk, &[3.0; 4]).unwrap() - 1.0).abs() < 1e-15);
    }
}

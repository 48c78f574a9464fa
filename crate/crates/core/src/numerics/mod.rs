//! Exact rational and complex floating-point linear algebra.

pub mod linsolve;
pub mod qmatrix;
pub mod rational;
pub mod span;
pub mod spectral;
pub mod tensor;

pub use linsolve::{coordinates, q_nullspace, q_solve, SparseRow, SparseSystem};
pub use qmatrix::{vecops, QMatrix};
pub use rational::{format_q, parse_q, q, qf, QStr, Q};
pub use span::SpanBuilder;
pub use spectral::{eig_decompose, perron, round_int, round_int_real, CMatrix, EigenCluster, C64};
pub use tensor::Tensor3;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumericsError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("linear system has no solution")]
    NoSolution,
    #[error("matrix is nilpotent")]
    NilpotentInput,
    #[error("matrix has a negative entry")]
    NegativeEntry,
    #[error("eigenvalue clusters are ambiguously separated (distance {distance:e})")]
    NumericallyIndistinct { distance: f64 },
    #[error("value {value_re}{value_im:+}i is not within tolerance of an integer")]
    NotIntegral { value_re: f64, value_im: f64 },
    #[error("invalid tolerances: {0}")]
    InvalidTolerances(String),
}

/// Tolerances for the floating-point layer. Exact computations ignore them.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub eig_cluster: f64,
    pub int_round: f64,
    pub zero: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { eig_cluster: 1e-8, int_round: 1e-6, zero: 1e-10 }
    }
}

impl Tolerances {
    pub fn new(eig_cluster: f64, int_round: f64, zero: f64) -> Result<Self, NumericsError> {
        let t = Tolerances { eig_cluster, int_round, zero };
        t.validate()?;
        Ok(t)
    }

    pub fn validate(&self) -> Result<(), NumericsError> {
        let all_pos = [self.eig_cluster, self.int_round, self.zero].iter().all(|x| x.is_finite() && *x > 0.0);
        if !all_pos {
            return Err(NumericsError::InvalidTolerances("all tolerances must be positive".into()));
        }
        if self.eig_cluster <= self.zero {
            return Err(NumericsError::InvalidTolerances("eig_cluster must exceed zero".into()));
        }
        Ok(())
    }

    /// The `10·zero` slack used by float identity checks.
    pub fn check(&self) -> f64 {
        10.0 * self.zero
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tolerance_validation() {
        assert!(Tolerances::default().validate().is_ok());
        assert!(Tolerances::new(1e-12, 1e-6, 1e-10).is_err());
        assert!(Tolerances::new(1e-8, 0.0, 1e-10).is_err());
        assert!(Tolerances::new(1e-8, 1e-6, f64::NAN).is_err());
    }
}

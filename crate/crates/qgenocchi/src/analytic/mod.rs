//! Floating-point validation of the analytic representations: q-Zeta
//! series and their exact negative-integer values, the contour-integral
//! coefficient formula, and the derivative-limit formula.
//!
//! Exact paths (Q(q) values) and floating paths never mix except at
//! explicit comparison points. Node evaluations and series terms are
//! independent; accumulation order is fixed (pairwise summation) so
//! results are bit-reproducible.

mod contour;
mod deriv;
mod zeta;

pub use contour::cauchy_contour;
pub use deriv::{derivative_limit, DerivEstimate};
pub use zeta::{
    alternating_power_sum, interpolation_residual, zeta_neg_exact_number, zeta_neg_exact_poly,
    zeta_series,
};

use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AnalyticError {
    #[error("invalid parameter: {0}")]
    InvalidParams(String),
    #[error("radius {radius} reaches within the safety margin of the nearest singularity (limit {limit})")]
    RadiusTooLarge { radius: f64, limit: f64 },
    #[error("series did not converge: tail bound {tail_bound} > tolerance {tolerance}")]
    NonConvergence { tail_bound: f64, tolerance: f64 },
    #[error("non-finite value produced")]
    NonFinite,
}

/// Parameters of the numeric q-Zeta summation; |q0| < 1 keeps the series
/// geometrically convergent.
#[derive(Debug, Clone)]
pub struct ZetaParams {
    pub q0: f64,
    pub x0: f64,
    pub tail_terms: usize,
    pub tolerance: f64,
}

impl ZetaParams {
    pub fn validate(&self) -> Result<(), AnalyticError> {
        if !(self.q0 > 0.0 && self.q0 < 1.0) {
            return Err(AnalyticError::InvalidParams(format!(
                "q0 = {} must lie in (0, 1)",
                self.q0
            )));
        }
        if self.x0 < 0.0 {
            return Err(AnalyticError::InvalidParams(format!(
                "x0 = {} must be >= 0",
                self.x0
            )));
        }
        if self.tolerance <= 0.0 || self.tail_terms == 0 {
            return Err(AnalyticError::InvalidParams(
                "tolerance and tail_terms must be positive".to_string(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZetaVariant {
    Printed,
    Hurwitz,
}

/// Outcome of a truncated summation: the value, how many terms were
/// consumed, and the reported bound on everything left out.
#[derive(Debug, Clone, Copy)]
pub struct SeriesEval {
    pub value: Complex64,
    pub terms_used: usize,
    pub tail_bound: f64,
}

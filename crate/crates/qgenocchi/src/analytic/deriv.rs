//! The derivative-limit formula
//! `G_{k,q}(x) = lim_{t->0} d^k/dt^k [2t e^{xt}/(q e^t + 1)]`,
//! exercised numerically: central finite differences over a step schedule,
//! extrapolated to h -> 0. Semantically this is series-coefficient
//! extraction, but it is deliberately run as stated, in plain f64.

use super::AnalyticError;
use crate::algebra::binomial;

#[derive(Debug, Clone, Copy)]
pub struct DerivEstimate {
    pub value: f64,
    /// Set when successive extrapolants diverged: the step schedule has
    /// crossed into catastrophic cancellation.
    pub cancellation_warning: bool,
}

fn f(t: f64, x0: f64, q0: f64) -> f64 {
    2.0 * t * (x0 * t).exp() / (q0 * t.exp() + 1.0)
}

/// k-th central difference at 0 with step h; node offsets are
/// half-integers for odd k.
fn central_difference(k: usize, h: f64, x0: f64, q0: f64) -> f64 {
    let mut acc = 0.0;
    for j in 0..=k {
        let c = binomial(k as u64, j as i64).to_f64();
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        let offset = k as f64 / 2.0 - j as f64;
        acc += sign * c * f(offset * h, x0, q0);
    }
    acc / h.powi(k as i32)
}

/// Estimate `d^n/dt^n` of the generating function at t = 0 by Richardson
/// extrapolation (Neville in h^2) across the step schedule. The schedule
/// must be strictly decreasing and positive.
pub fn derivative_limit(
    n: usize,
    x0: f64,
    q0: f64,
    h_schedule: &[f64],
) -> Result<DerivEstimate, AnalyticError> {
    if h_schedule.is_empty() {
        return Err(AnalyticError::InvalidParams(
            "empty step schedule".to_string(),
        ));
    }
    for w in h_schedule.windows(2) {
        if !(w[1] > 0.0 && w[1] < w[0]) {
            return Err(AnalyticError::InvalidParams(
                "step schedule must be strictly decreasing and positive".to_string(),
            ));
        }
    }
    if !(h_schedule[0] > 0.0) {
        return Err(AnalyticError::InvalidParams(
            "steps must be positive".to_string(),
        ));
    }

    let mut table: Vec<f64> = h_schedule
        .iter()
        .map(|&h| central_difference(n, h, x0, q0))
        .collect();
    let xs: Vec<f64> = h_schedule.iter().map(|&h| h * h).collect();
    let mut last_diag = table[0];
    let mut prev_step = f64::INFINITY;
    let mut warning = false;
    // Neville toward h^2 = 0; table[i] holds the degree-j interpolant
    // through points i-j ..= i after pass j
    for j in 1..table.len() {
        for i in (j..table.len()).rev() {
            table[i] = (xs[i - j] * table[i] - xs[i] * table[i - 1]) / (xs[i - j] - xs[i]);
        }
        let diag = table[j];
        let step = (diag - last_diag).abs();
        if j >= 2 && step > 4.0 * prev_step && step > 1e-12 * diag.abs().max(1.0) {
            warning = true;
        }
        prev_step = step;
        last_diag = diag;
    }
    if !last_diag.is_finite() {
        return Err(AnalyticError::NonFinite);
    }
    Ok(DerivEstimate {
        value: last_diag,
        cancellation_warning: warning,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn schedule() -> Vec<f64> {
        vec![0.5, 0.25, 0.125, 0.0625, 0.03125]
    }

    #[test]
    fn zeroth_derivative_is_zero() {
        let est = derivative_limit(0, 0.0, 0.5, &schedule()).unwrap();
        assert_eq!(est.value, 0.0);
    }

    #[test]
    fn first_two_derivatives_at_half() {
        // G_1 = 4/3, G_2 = -8/9 at q = 1/2
        let est = derivative_limit(1, 0.0, 0.5, &schedule()).unwrap();
        assert!((est.value - 4.0 / 3.0).abs() < 1e-6, "{}", est.value);
        let est = derivative_limit(2, 0.0, 0.5, &schedule()).unwrap();
        assert!((est.value + 8.0 / 9.0).abs() < 1e-5, "{}", est.value);
    }

    #[test]
    fn schedule_validation() {
        assert!(derivative_limit(1, 0.0, 0.5, &[]).is_err());
        assert!(derivative_limit(1, 0.0, 0.5, &[0.1, 0.2]).is_err());
        assert!(derivative_limit(1, 0.0, 0.5, &[0.2, -0.1]).is_err());
    }
}

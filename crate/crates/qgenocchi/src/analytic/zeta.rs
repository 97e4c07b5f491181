//! The q-Zeta series and its exact values at negative integers.
//!
//! Two series variants are implemented side by side:
//!
//! * printed: `ζ(s, x : q) = 2 Σ_{n>=1} (-1)^n q^n / n^s`, which carries no
//!   x dependence;
//! * hurwitz: `2 Σ_{n>=0} (-1)^n q^n (n+x)^{-s}`, the x-dependent form the
//!   Mellin integrand of the generating function actually produces.
//!
//! At s = -m the value is exact in Q(q): with
//! `A_0 = -q/(1+q)` and `A_m = q d/dq A_{m-1}` (so that
//! `A_m = Σ_{n>=1} (-q)^n n^m` as a rational function), the x-free value is
//! `2 A_m` and the x-form is `2 Σ_j C(m,j) x^{m-j} (A_j + [j=0])`. The
//! second interpolates `G_{m+1,q}(x)/(m+1)` exactly, which the residual
//! operation below verifies symbolically.

use num_complex::Complex64;

use crate::algebra::{binomial, PolyQ, PolyXY, RatFuncQ, Rational};
use crate::genocchi::GenocchiTable;

use super::{AnalyticError, SeriesEval, ZetaParams, ZetaVariant};

/// `A_m = Σ_{n>=1} (-q)^n n^m` as an element of Q(q), computed by m
/// applications of q d/dq to the geometric value -q/(1+q).
pub fn alternating_power_sum(m: usize) -> RatFuncQ {
    let q = RatFuncQ::q();
    let mut acc = RatFuncQ::new(
        PolyQ::monomial(Rational::from_int(-1), 1),
        crate::algebra::qbracket(2),
    )
    .unwrap();
    for _ in 0..m {
        acc = &q * &acc.derivative();
    }
    acc
}

/// Exact `ζ(-m : q)` for the x-free series: `2 A_m`. For m = 0 this is
/// `-2q/(1+q)`, which is *not* `G_{1,q}`; the x-free interpolation only
/// starts at m = 1.
pub fn zeta_neg_exact_number(m: usize) -> RatFuncQ {
    alternating_power_sum(m).mul_rational(&Rational::from_int(2))
}

/// Exact `ζ(-m, x : q)` for the hurwitz series:
/// `2 Σ_j C(m,j) x^{m-j} (A_j + [j=0])`; the n = 0 term contributes the
/// Kronecker delta through the 0^0 = 1 convention.
pub fn zeta_neg_exact_poly(m: usize) -> PolyXY {
    let mut coeffs = vec![RatFuncQ::zero(); m + 1];
    for j in 0..=m {
        let mut aj = alternating_power_sum(j);
        if j == 0 {
            aj = &aj + &RatFuncQ::one();
        }
        coeffs[m - j] = aj.mul_rational(&(&Rational::from_int(2) * &binomial(m as u64, j as i64)));
    }
    PolyXY::from_x_coeffs(coeffs)
}

/// `zeta_neg_exact_poly(m) - G_{m+1,q}(x)/(m+1)`: the canonical zero iff
/// the hurwitz series interpolates the polynomial family at s = -m.
pub fn interpolation_residual(table: &GenocchiTable, m: usize) -> PolyXY {
    assert!(m >= 1, "interpolation starts at m = 1");
    let expected = table
        .poly(m + 1)
        .mul_rational(&Rational::ratio(1, m as i64 + 1));
    &zeta_neg_exact_poly(m) - &expected
}

/// Numeric evaluation of the q-Zeta series. Plain summation with a
/// geometric tail bound; Euler transformation of the alternating series
/// when q0 > 0.6, where plain alternation converges too slowly.
pub fn zeta_series(
    s: Complex64,
    params: &ZetaParams,
    variant: ZetaVariant,
) -> Result<SeriesEval, AnalyticError> {
    params.validate()?;
    let start = match variant {
        ZetaVariant::Printed => 1,
        ZetaVariant::Hurwitz => {
            if params.x0 == 0.0 {
                1
            } else {
                0
            }
        }
    };
    let magnitude = |n: usize| -> Complex64 {
        // the unsigned term 2 q^n (n+x)^{-s}, with x = 0 for the printed form
        let base = match variant {
            ZetaVariant::Printed => n as f64,
            ZetaVariant::Hurwitz => n as f64 + params.x0,
        };
        let ln_base = base.ln();
        2.0 * params.q0.powi(n as i32) * (-(s * ln_base)).exp()
    };
    let eval = if params.q0 > 0.6 {
        euler_transform_sum(magnitude, start, params)
    } else {
        plain_alternating_sum(magnitude, start, s.re, params)
    }?;
    if !eval.value.re.is_finite() || !eval.value.im.is_finite() {
        return Err(AnalyticError::NonFinite);
    }
    Ok(eval)
}

fn plain_alternating_sum(
    magnitude: impl Fn(usize) -> Complex64,
    start: usize,
    s_re: f64,
    params: &ZetaParams,
) -> Result<SeriesEval, AnalyticError> {
    let mut acc = Complex64::new(0.0, 0.0);
    let mut tail_bound = f64::INFINITY;
    for i in 0..params.tail_terms {
        let n = start + i;
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        acc += sign * magnitude(n);
        // ratio bound for every later term; the power factor decreases in n
        let x = params.x0.max(0.0);
        let growth = ((n as f64 + x + 2.0) / (n as f64 + x + 1.0)).powf((-s_re).max(0.0));
        let ratio = params.q0 * growth;
        if ratio < 1.0 {
            tail_bound = magnitude(n + 1).norm() / (1.0 - ratio);
            if tail_bound <= params.tolerance {
                return Ok(SeriesEval {
                    value: acc,
                    terms_used: i + 1,
                    tail_bound,
                });
            }
        }
    }
    Err(AnalyticError::NonConvergence {
        tail_bound,
        tolerance: params.tolerance,
    })
}

/// Σ_{n>=start} (-1)^n a_n = ± Σ_k (-1)^k Δ^k a_start / 2^{k+1}; the
/// transformed terms decay like 2^{-k} even as q0 -> 1.
fn euler_transform_sum(
    magnitude: impl Fn(usize) -> Complex64,
    start: usize,
    params: &ZetaParams,
) -> Result<SeriesEval, AnalyticError> {
    let outer_sign = if start % 2 == 0 { 1.0 } else { -1.0 };
    let mut values: Vec<Complex64> = Vec::new();
    let mut acc = Complex64::new(0.0, 0.0);
    let mut tail_bound = f64::INFINITY;
    for k in 0..params.tail_terms {
        values.push(magnitude(start + k));
        // collapse in place: values[j] becomes Δ^{k-j} a_{start+j}; only
        // the leading entry Δ^k a_start is consumed
        for j in (0..k).rev() {
            values[j] = values[j + 1] - values[j];
        }
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let term = outer_sign * sign * values[0] / 2f64.powi(k as i32 + 1);
        acc += term;
        tail_bound = 2.0 * term.norm();
        if k >= 2 && tail_bound <= params.tolerance {
            return Ok(SeriesEval {
                value: acc,
                terms_used: k + 1,
                tail_bound,
            });
        }
    }
    Err(AnalyticError::NonConvergence {
        tail_bound,
        tolerance: params.tolerance,
    })
}

//! Coefficient extraction by contour quadrature:
//! `G_{n,q}(x) = (n!/2πi) ∮_C 2t e^{xt}/(q e^t + 1) dt/t^{n+1}` over a
//! circle around the origin.
//!
//! The trapezoidal rule on a circle is spectrally accurate for this
//! integrand, so discretization error is negligible already at modest node
//! counts; what limits plain f64 is roundoff, amplified by n! and by the
//! heavy cancellation in the oscillatory sum. Node evaluation and
//! accumulation therefore run in double-double precision (~31 significant
//! digits), and only the final value is rounded to f64.

use num_complex::Complex64;
use twofloat::TwoFloat;

use super::AnalyticError;

/// Complex arithmetic over double-double components; just enough for the
/// quadrature kernel.
#[derive(Clone, Copy, Debug)]
struct DdComplex {
    re: TwoFloat,
    im: TwoFloat,
}

impl DdComplex {
    fn zero() -> Self {
        DdComplex {
            re: TwoFloat::from(0.0),
            im: TwoFloat::from(0.0),
        }
    }

    fn add(self, rhs: Self) -> Self {
        DdComplex {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }

    fn mul(self, rhs: Self) -> Self {
        DdComplex {
            re: self.re * rhs.re - self.im * rhs.im,
            im: self.re * rhs.im + self.im * rhs.re,
        }
    }

    fn scale(self, c: TwoFloat) -> Self {
        DdComplex {
            re: self.re * c,
            im: self.im * c,
        }
    }

    fn div(self, rhs: Self) -> Self {
        let denom = rhs.re * rhs.re + rhs.im * rhs.im;
        DdComplex {
            re: (self.re * rhs.re + self.im * rhs.im) / denom,
            im: (self.im * rhs.re - self.re * rhs.im) / denom,
        }
    }

    /// e^{re + i im} = e^{re} (cos im + i sin im).
    fn exp(self) -> Self {
        let r = self.re.exp();
        let (s, c) = self.im.sin_cos();
        DdComplex {
            re: r * c,
            im: r * s,
        }
    }
}

/// cos θ + i sin θ.
fn cis(theta: TwoFloat) -> DdComplex {
    let (s, c) = theta.sin_cos();
    DdComplex { re: c, im: s }
}

/// Fixed-order pairwise reduction, independent of any evaluation order.
fn pairwise_sum(terms: &mut [DdComplex]) -> DdComplex {
    match terms.len() {
        0 => DdComplex::zero(),
        1 => terms[0],
        n => {
            let (a, b) = terms.split_at_mut(n / 2);
            pairwise_sum(a).add(pairwise_sum(b))
        }
    }
}

fn factorial_dd(n: usize) -> TwoFloat {
    let mut acc = TwoFloat::from(1.0);
    for k in 2..=n {
        acc = acc * TwoFloat::from(k as f64);
    }
    acc
}

/// Largest safe radius: 0.9 times the distance from the origin to the
/// nearest zero of `q e^t + 1`, which sits at `-ln q ± iπ` for real q > 0.
pub(crate) fn radius_limit(q0: f64) -> f64 {
    0.9 * (q0.ln().powi(2) + std::f64::consts::PI.powi(2)).sqrt()
}

/// Trapezoidal contour quadrature
/// `(n!/M) Σ_k F_{q0}(x0, t_k) t_k^{-n}` over `t_k = r e^{2πik/M}`.
/// The imaginary part of the result is a numerical defect the caller can
/// inspect; it must sit at the noise floor.
pub fn cauchy_contour(
    n: usize,
    x0: f64,
    q0: f64,
    radius: f64,
    nodes: usize,
) -> Result<Complex64, AnalyticError> {
    if !(q0 > 0.0) || !q0.is_finite() {
        return Err(AnalyticError::InvalidParams(format!(
            "q0 = {q0} must be a positive real"
        )));
    }
    if nodes < 16 {
        return Err(AnalyticError::InvalidParams(format!(
            "nodes = {nodes} must be >= 16"
        )));
    }
    let limit = radius_limit(q0);
    if !(radius > 0.0) || radius > limit {
        return Err(AnalyticError::RadiusTooLarge { radius, limit });
    }

    let m = nodes;
    let two_pi = TwoFloat::from(2.0) * twofloat::consts::PI;
    let r = TwoFloat::from(radius);
    let q = TwoFloat::from(q0);
    let x = TwoFloat::from(x0);
    let m_dd = TwoFloat::from(m as f64);
    // r^{-n} is a common scale; fold it in once at the end
    let mut r_pow = TwoFloat::from(1.0);
    for _ in 0..n {
        r_pow = r_pow / r;
    }

    let mut terms = Vec::with_capacity(m);
    for k in 0..m {
        let theta = two_pi * TwoFloat::from(k as f64) / m_dd;
        let t = cis(theta).scale(r);
        // t^{-n} via an exactly reduced angle: -nk mod M stays tiny
        let reduced = (m - (n * k) % m) % m;
        let w = cis(two_pi * TwoFloat::from(reduced as f64) / m_dd);
        let e_t = t.exp();
        let denom = DdComplex {
            re: q * e_t.re + TwoFloat::from(1.0),
            im: q * e_t.im,
        };
        let mut numer = t.scale(TwoFloat::from(2.0));
        if x0 != 0.0 {
            numer = numer.mul(t.scale(x).exp());
        }
        terms.push(numer.div(denom).mul(w));
    }
    let total = pairwise_sum(&mut terms);
    let scale = factorial_dd(n) * r_pow / m_dd;
    let value = Complex64::new(f64::from(total.re * scale), f64::from(total.im * scale));
    if !value.re.is_finite() || !value.im.is_finite() {
        return Err(AnalyticError::NonFinite);
    }
    Ok(value)
}

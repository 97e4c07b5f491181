//! Truncated formal power series in t, and the generating-function oracle.
//!
//! [`TruncSeries`] is generic over its coefficient ring so the same
//! machinery extracts `G_{n,q}(x)` symbolically over Q(q)[x] and, as a
//! fast path, numerically over Q at a specialized q. The oracle never
//! touches the umbral recurrence; agreement between the two is the
//! strongest internal consistency check this crate has.

use std::fmt;

use thiserror::Error;

use crate::algebra::{factorial, PolyXY, RatFuncQ, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("constant term is not invertible in the coefficient ring")]
    NonInvertibleConstant,
}

/// Coefficient ring for truncated series arithmetic.
pub trait CoeffRing: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// Multiplicative inverse when one exists in the ring.
    fn inv(&self) -> Option<Self>;
    fn from_rational(r: &Rational) -> Self;
}

impl CoeffRing for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        self.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn inv(&self) -> Option<Self> {
        self.recip().ok()
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
}

impl CoeffRing for RatFuncQ {
    fn zero() -> Self {
        RatFuncQ::zero()
    }
    fn one() -> Self {
        RatFuncQ::one()
    }
    fn is_zero(&self) -> bool {
        self.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn inv(&self) -> Option<Self> {
        RatFuncQ::inv(self).ok()
    }
    fn from_rational(r: &Rational) -> Self {
        RatFuncQ::from_rational(r.clone())
    }
}

/// In Q(q)[x, y] only the nonzero constants are invertible.
impl CoeffRing for PolyXY {
    fn zero() -> Self {
        PolyXY::zero()
    }
    fn one() -> Self {
        PolyXY::one()
    }
    fn is_zero(&self) -> bool {
        self.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn inv(&self) -> Option<Self> {
        if self.deg_x() == Some(0) && self.deg_y() == Some(0) {
            self.coeff(0, 0).inv().ok().map(PolyXY::from_ratfunc)
        } else {
            None
        }
    }
    fn from_rational(r: &Rational) -> Self {
        PolyXY::from_rational(r.clone())
    }
}

/// Series known modulo t^{order+1}; arithmetic never reads past `order`.
#[derive(Clone, PartialEq, Debug)]
pub struct TruncSeries<R: CoeffRing> {
    coeffs: Vec<R>,
}

impl<R: CoeffRing> TruncSeries<R> {
    pub fn from_coeffs(order: usize, mut coeffs: Vec<R>) -> Self {
        coeffs.truncate(order + 1);
        coeffs.resize(order + 1, R::zero());
        TruncSeries { coeffs }
    }

    pub fn from_fn(order: usize, f: impl Fn(usize) -> R) -> Self {
        TruncSeries {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn constant(order: usize, c: R) -> Self {
        Self::from_fn(order, |n| if n == 0 { c.clone() } else { R::zero() })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &R {
        &self.coeffs[n]
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        Self::from_fn(order, |n| self.coeffs[n].add(&rhs.coeffs[n]))
    }

    pub fn scale(&self, c: &R) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    /// Truncated Cauchy product at the smaller of the two orders.
    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        Self::from_fn(order, |n| {
            let mut acc = R::zero();
            for k in 0..=n {
                let (a, b) = (&self.coeffs[k], &rhs.coeffs[n - k]);
                if !a.is_zero() && !b.is_zero() {
                    acc = acc.add(&a.mul(b));
                }
            }
            acc
        })
    }

    /// Reciprocal by recursive convolution:
    /// b_0 = a_0^{-1}, b_n = -a_0^{-1} Σ_{k=1..n} a_k b_{n-k}.
    pub fn recip(&self) -> Result<Self, SeriesError> {
        let a0_inv = self.coeffs[0].inv().ok_or(SeriesError::NonInvertibleConstant)?;
        let mut out: Vec<R> = Vec::with_capacity(self.coeffs.len());
        out.push(a0_inv.clone());
        for n in 1..=self.order() {
            let mut acc = R::zero();
            for k in 1..=n {
                let a = &self.coeffs[k];
                if !a.is_zero() {
                    acc = acc.add(&a.mul(&out[n - k]));
                }
            }
            out.push(acc.mul(&a0_inv).neg());
        }
        Ok(TruncSeries { coeffs: out })
    }

    /// Multiply by t^k: coefficients shift up, the top k drop off.
    pub fn shift_up(&self, k: usize) -> Self {
        Self::from_fn(self.order(), |n| {
            if n < k {
                R::zero()
            } else {
                self.coeffs[n - k].clone()
            }
        })
    }
}

/// e^t: coefficient of t^n is 1/n!.
pub fn exp_t<R: CoeffRing>(order: usize) -> TruncSeries<R> {
    let mut inv_fact = Vec::with_capacity(order + 1);
    let mut f = Rational::one();
    for n in 0..=order {
        if n > 0 {
            f = &f * &Rational::from_int(n as i64);
        }
        inv_fact.push(R::from_rational(&f.recip().unwrap()));
    }
    TruncSeries { coeffs: inv_fact }
}

/// e^{xt} over Q(q)[x]: coefficient of t^n is x^n/n!.
pub fn exp_xt(order: usize) -> TruncSeries<PolyXY> {
    let mut f = Rational::one();
    let mut coeffs = Vec::with_capacity(order + 1);
    for n in 0..=order {
        if n > 0 {
            f = &f * &Rational::from_int(n as i64);
        }
        coeffs.push(PolyXY::monomial(
            RatFuncQ::from_rational(f.recip().unwrap()),
            n,
            0,
        ));
    }
    TruncSeries { coeffs }
}

/// Coefficient extraction from `2t e^{xt} / (q e^t + 1)`: entry n is
/// `G_{n,q}(x)` as an element of Q(q)[x]. The constant term of the
/// denominator is q + 1, invertible in Q(q), so the expansion always
/// exists.
pub fn genocchi_from_series(n_max: usize) -> Vec<PolyXY> {
    let order = n_max;
    let q = PolyXY::from_ratfunc(RatFuncQ::q());
    let denom = exp_t::<PolyXY>(order)
        .scale(&q)
        .add(&TruncSeries::constant(order, PolyXY::one()));
    let inv = denom.recip().expect("q + 1 is invertible in Q(q)");
    let core = exp_xt(order).mul(&inv);
    // G_n = n! [t^n] 2 t core = 2 n! core_{n-1}
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(PolyXY::zero());
    let mut fact = Rational::one();
    for n in 1..=n_max {
        fact = &fact * &Rational::from_int(n as i64);
        let c = &Rational::from_int(2) * &fact;
        out.push(core.coeff(n - 1).mul_rational(&c));
    }
    out
}

/// Same extraction with q and x specialized to exact rationals:
/// `2t e^{x0 t} / (q0 e^t + 1)` over Q. Errors when q0 = -1.
pub fn genocchi_series_at(
    q0: &Rational,
    x0: &Rational,
    n_max: usize,
) -> Result<Vec<Rational>, SeriesError> {
    let order = n_max;
    let denom = exp_t::<Rational>(order)
        .scale(q0)
        .add(&TruncSeries::constant(order, Rational::one()));
    let inv = denom.recip()?;
    let e_xt = TruncSeries::from_fn(order, |n| &x0.pow(n as i64) / &factorial(n as u64));
    let core = e_xt.mul(&inv);
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(Rational::zero());
    let mut fact = Rational::one();
    for n in 1..=n_max {
        fact = &fact * &Rational::from_int(n as i64);
        out.push(&(&Rational::from_int(2) * &fact) * core.coeff(n - 1));
    }
    Ok(out)
}

/// Classical Genocchi numbers: q = 1, x = 0, generating function
/// `2t/(e^t + 1)`.
pub fn classical_genocchi(n_max: usize) -> Vec<Rational> {
    genocchi_series_at(&Rational::one(), &Rational::zero(), n_max)
        .expect("q = 1 is not a pole of the generating function")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exp_xt_taylor_coefficients() {
        let s = exp_xt(2);
        assert_eq!(s.coeff(0), &PolyXY::one());
        assert_eq!(s.coeff(1), &PolyXY::x());
        assert_eq!(
            s.coeff(2),
            &PolyXY::monomial(RatFuncQ::from_rational(Rational::ratio(1, 2)), 2, 0)
        );
        let trivial = exp_xt(0);
        assert_eq!(trivial.coeff(0), &PolyXY::one());
    }

    #[test]
    fn exp_xt_at_x_zero_is_one() {
        let s = exp_xt(3);
        for n in 0..=3 {
            let v = s
                .coeff(n)
                .eval(&Rational::ratio(1, 2), &Rational::zero(), &Rational::zero())
                .unwrap();
            let expect = if n == 0 { Rational::one() } else { Rational::zero() };
            assert_eq!(v, expect);
        }
    }

    #[test]
    fn oracle_low_entries() {
        let g = genocchi_from_series(2);
        assert!(g[0].is_zero());
        // G_1 = 2/(1+q)
        let one_plus_q = crate::algebra::PolyQ::new(vec![Rational::one(), Rational::one()]);
        let g1 = RatFuncQ::new(
            crate::algebra::PolyQ::constant(Rational::from_int(2)),
            one_plus_q.clone(),
        )
        .unwrap();
        assert_eq!(g[1], PolyXY::from_ratfunc(g1));
        // G_2 at x=0 is -4q/(1+q)^2
        let g2_num = RatFuncQ::new(
            crate::algebra::PolyQ::monomial(Rational::from_int(-4), 1),
            one_plus_q.pow(2),
        )
        .unwrap();
        assert_eq!(
            g[2].eval_x_scalar(&Rational::zero()),
            g2_num
        );
    }

    #[test]
    fn classical_sequence() {
        let g = classical_genocchi(8);
        let expect: Vec<Rational> = [0, 1, -1, 0, 1, 0, -3, 0, 17]
            .iter()
            .map(|&v| Rational::from_int(v))
            .collect();
        assert_eq!(g, expect);
    }

    #[test]
    fn classical_odd_entries_vanish() {
        let g = classical_genocchi(21);
        for k in 1..=10 {
            assert!(g[2 * k + 1].is_zero(), "G_{} should vanish", 2 * k + 1);
        }
        assert_eq!(g[1], Rational::one());
    }

    #[test]
    fn reciprocal_inverts() {
        let s = TruncSeries::<Rational>::from_coeffs(
            6,
            vec![
                Rational::ratio(3, 2),
                Rational::from_int(-1),
                Rational::ratio(1, 3),
                Rational::from_int(2),
            ],
        );
        let inv = s.recip().unwrap();
        let prod = s.mul(&inv);
        assert_eq!(prod.coeff(0), &Rational::one());
        for n in 1..=6 {
            assert!(prod.coeff(n).is_zero());
        }
        let not_invertible =
            TruncSeries::<Rational>::from_coeffs(3, vec![Rational::zero(), Rational::one()]);
        assert!(not_invertible.recip().is_err());
    }

    #[test]
    fn series_at_minus_one_rejected() {
        assert!(genocchi_series_at(&Rational::from_int(-1), &Rational::zero(), 4).is_err());
    }
}

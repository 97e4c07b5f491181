//! Fermionic p-adic validation at finite truncation.
//!
//! The integral representation `G_{n,q}(x) = n ∫ q^ξ (x+ξ)^{n-1} dμ_{-1}(ξ)`
//! is checked against the recurrence by computing the alternating partial
//! Riemann sums `Σ_{ξ=0}^{p^N-1} (-1)^ξ f(ξ)` exactly in Q and measuring
//! the p-adic valuation of the defect. No truncated p-adic number type
//! exists here: all sums are exact rationals, and only the final valuation
//! is p-adic, which removes precision bugs wholesale.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::algebra::Rational;
use crate::genocchi::GenocchiTable;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PadicError {
    #[error("p = {0} is not an odd prime")]
    NotAnOddPrime(u64),
    #[error("|1 - q0|_p must be < 1: v_{p}(1 - {q0}) = {val}")]
    QNotClose { p: u64, q0: String, val: String },
    #[error("truncation level {requested} exceeds the context bound {max}")]
    LevelTooDeep { requested: u32, max: u32 },
}

/// p-adic valuation: the exponent of p, with v_p(0) = +infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Vp {
    Finite(i64),
    Infinite,
}

impl fmt::Display for Vp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vp::Finite(v) => write!(f, "{v}"),
            Vp::Infinite => write!(f, "+inf"),
        }
    }
}

fn vp_bigint(mut n: BigInt, p: u64) -> Option<i64> {
    if n.is_zero() {
        return None;
    }
    let p = BigInt::from(p);
    let mut v = 0;
    loop {
        let (q, r) = num_integer::Integer::div_rem(&n, &p);
        if !r.is_zero() {
            return Some(v);
        }
        n = q;
        v += 1;
    }
}

/// v_p(x) = v_p(numerator) - v_p(denominator); |x|_p = p^{-v_p(x)}.
pub fn vp(x: &Rational, p: u64) -> Vp {
    match vp_bigint(x.numer().clone(), p) {
        None => Vp::Infinite,
        Some(vn) => {
            let vd = vp_bigint(x.denom().clone(), p).expect("nonzero denominator");
            Vp::Finite(vn - vd)
        }
    }
}

fn is_odd_prime(p: u64) -> bool {
    if p < 3 || p % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Fixed odd prime p, a specialization point q0 with |1 - q0|_p < 1, and a
/// truncation bound.
#[derive(Debug, Clone)]
pub struct PadicContext {
    p: u64,
    q0: Rational,
    max_level: u32,
}

impl PadicContext {
    pub fn new(p: u64, q0: Rational, max_level: u32) -> Result<Self, PadicError> {
        if !is_odd_prime(p) {
            return Err(PadicError::NotAnOddPrime(p));
        }
        let dist = &Rational::one() - &q0;
        let val = vp(&dist, p);
        let close = match val {
            Vp::Infinite => true,
            Vp::Finite(v) => v >= 1,
        };
        if !close {
            return Err(PadicError::QNotClose {
                p,
                q0: q0.to_string(),
                val: val.to_string(),
            });
        }
        Ok(PadicContext { p, q0, max_level })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q0(&self) -> &Rational {
        &self.q0
    }

    pub fn max_level(&self) -> u32 {
        self.max_level
    }

    fn check_level(&self, level: u32) -> Result<u64, PadicError> {
        if level > self.max_level {
            return Err(PadicError::LevelTooDeep {
                requested: level,
                max: self.max_level,
            });
        }
        Ok(self.p.pow(level))
    }
}

/// Exact alternating partial sum `Σ_{ξ=0}^{p^N-1} (-1)^ξ f(ξ)`.
pub fn fermionic_partial_sum(
    f: impl Fn(u64) -> Rational,
    level: u32,
    ctx: &PadicContext,
) -> Result<Rational, PadicError> {
    let bound = ctx.check_level(level)?;
    let mut acc = Rational::zero();
    for xi in 0..bound {
        let term = f(xi);
        if xi % 2 == 0 {
            acc += &term;
        } else {
            acc -= &term;
        }
    }
    Ok(acc)
}

/// `S_N(f(.+1)) + S_N(f) - f(0) - f(p^N)`. Telescoping over an odd-length
/// range makes this exactly zero for every N; the deviation from the limit
/// functional equation `I(f(.+1)) + I(f) = 2 f(0)` is `f(p^N) - f(0)`,
/// whose valuation grows with N for the admissible integrands.
pub fn functional_equation_check(
    f: impl Fn(u64) -> Rational,
    level: u32,
    ctx: &PadicContext,
) -> Result<Rational, PadicError> {
    let bound = ctx.check_level(level)?;
    let shifted = fermionic_partial_sum(|xi| f(xi + 1), level, ctx)?;
    let plain = fermionic_partial_sum(&f, level, ctx)?;
    Ok(&(&shifted + &plain) - &(&f(0) + &f(bound)))
}

/// Partial sums `n Σ_{ξ<p^N} (-1)^ξ q0^ξ (x0+ξ)^{n-1}` for N = 1..=levels,
/// captured in a single pass with an incrementally maintained q0^ξ.
pub fn genocchi_partial_sums(
    n: usize,
    x0: &Rational,
    ctx: &PadicContext,
    levels: u32,
) -> Result<Vec<Rational>, PadicError> {
    assert!(n >= 1, "the integrand needs n >= 1");
    let top = ctx.check_level(levels)?;
    let mut checkpoints = Vec::with_capacity(levels as usize);
    let mut next_checkpoint = ctx.p;
    let mut acc = Rational::zero();
    let mut q_pow = Rational::one();
    for xi in 0..top {
        // (x0 + ξ)^{n-1} with the 0^0 = 1 convention at ξ = 0, x0 = 0, n = 1
        let base = x0 + &Rational::from_int(xi as i64);
        let term = &q_pow * &base.pow((n - 1) as i64);
        if xi % 2 == 0 {
            acc += &term;
        } else {
            acc -= &term;
        }
        q_pow *= ctx.q0();
        if xi + 1 == next_checkpoint {
            checkpoints.push(&acc * &Rational::from_int(n as i64));
            next_checkpoint *= ctx.p;
        }
    }
    Ok(checkpoints)
}

/// Valuation of (partial Riemann sum at level N) - (recurrence value
/// `G_{n,q0}(x0)`). `Vp::Infinite` means the truncation is already exact.
pub fn integral_vs_recurrence(
    table: &GenocchiTable,
    n: usize,
    x0: &Rational,
    level: u32,
    ctx: &PadicContext,
) -> Result<Vp, PadicError> {
    let sums = genocchi_partial_sums(n, x0, ctx, level)?;
    let exact = table
        .poly_at(n, x0)
        .eval(ctx.q0())
        .expect("no pole: |1-q0|_p < 1 keeps q0 away from the denominator zeros");
    let err = &sums[level as usize - 1] - &exact;
    Ok(vp(&err, ctx.p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx34() -> PadicContext {
        PadicContext::new(3, Rational::from_int(4), 8).unwrap()
    }

    #[test]
    fn valuation_basics() {
        assert_eq!(vp(&Rational::ratio(9, 2), 3), Vp::Finite(2));
        assert_eq!(vp(&Rational::ratio(1, 3), 3), Vp::Finite(-1));
        assert_eq!(vp(&Rational::zero(), 5), Vp::Infinite);
        assert!(Vp::Infinite > Vp::Finite(1 << 40));
    }

    #[test]
    fn context_validation() {
        assert!(matches!(
            PadicContext::new(4, Rational::from_int(5), 3),
            Err(PadicError::NotAnOddPrime(4))
        ));
        assert!(matches!(
            PadicContext::new(2, Rational::from_int(3), 3),
            Err(PadicError::NotAnOddPrime(2))
        ));
        // v_3(1 - 5) = 0: too far from 1
        assert!(PadicContext::new(3, Rational::from_int(5), 3).is_err());
        assert!(PadicContext::new(5, Rational::from_int(6), 3).is_ok());
    }

    #[test]
    fn alternating_sum_of_ones() {
        let ctx = ctx34();
        for level in 1..=3 {
            let s = fermionic_partial_sum(|_| Rational::one(), level, &ctx).unwrap();
            assert_eq!(s, Rational::one());
        }
    }

    #[test]
    fn alternating_sum_of_identity() {
        let ctx = ctx34();
        // 0 - 1 + 2 = 1
        let s = fermionic_partial_sum(|xi| Rational::from_int(xi as i64), 1, &ctx).unwrap();
        assert_eq!(s, Rational::one());
    }

    #[test]
    fn geometric_alternating_sum() {
        let ctx = ctx34();
        // Σ_{ξ<9} (-4)^ξ = (1 + 4^9)/5 = 52429
        let q = Rational::from_int(4);
        let s = fermionic_partial_sum(|xi| q.pow(xi as i64), 2, &ctx).unwrap();
        assert_eq!(s, Rational::from_int(52429));
    }

    #[test]
    fn functional_equation_is_exactly_zero() {
        let ctx = ctx34();
        let q = Rational::from_int(4);
        for level in 1..=3 {
            let r = functional_equation_check(
                |xi| &q.pow(xi as i64) * &Rational::from_int(xi as i64),
                level,
                &ctx,
            )
            .unwrap();
            assert!(r.is_zero());
            let c = functional_equation_check(|_| Rational::ratio(7, 3), level, &ctx).unwrap();
            assert!(c.is_zero());
        }
    }

    #[test]
    fn boundary_term_valuation_grows() {
        // v_3(f(3^N) - f(0)) >= N for f = q0^ξ ξ and for q0^ξ
        let ctx = ctx34();
        let q = Rational::from_int(4);
        for level in 1..=4u32 {
            let bound = 3u64.pow(level);
            let f = |xi: u64| &q.pow(xi as i64) * &Rational::from_int(xi as i64);
            let v = vp(&(&f(bound) - &f(0)), 3);
            assert!(v >= Vp::Finite(level as i64), "level {level}: {v}");
            let g = |xi: u64| q.pow(xi as i64);
            let v = vp(&(&g(bound) - &g(0)), 3);
            assert!(v >= Vp::Finite(level as i64 + 1), "level {level}: {v}");
        }
    }

    #[test]
    fn integral_matches_recurrence_for_low_n() {
        let table = GenocchiTable::new(4);
        let ctx = ctx34();
        // G_{2,4} = -16/25 and G_{2,4}(1) = 4/25
        assert_eq!(
            table.poly_at(2, &Rational::zero()).eval(&Rational::from_int(4)).unwrap(),
            Rational::ratio(-16, 25)
        );
        assert_eq!(
            table.poly_at(2, &Rational::one()).eval(&Rational::from_int(4)).unwrap(),
            Rational::ratio(4, 25)
        );
        let mut prev = Vp::Finite(i64::MIN);
        for level in 1..=5 {
            let v = integral_vs_recurrence(&table, 2, &Rational::zero(), level, &ctx).unwrap();
            assert!(v >= Vp::Finite(level as i64), "level {level}: v = {v}");
            assert!(v >= prev, "valuation not monotone at level {level}");
            prev = v;
        }
        let v = integral_vs_recurrence(&table, 2, &Rational::one(), 4, &ctx).unwrap();
        assert!(v >= Vp::Finite(4));
    }

    #[test]
    fn n_one_geometric_closed_form() {
        // S = Σ (-q0)^ξ over p^N terms = (1 + q0^{p^N})/(1 + q0); defect
        // against 2/(1+q0) has valuation N + 1 at (p, q0) = (3, 4)
        let table = GenocchiTable::new(1);
        let ctx = ctx34();
        for level in 1..=4 {
            let v = integral_vs_recurrence(&table, 1, &Rational::zero(), level, &ctx).unwrap();
            assert_eq!(v, Vp::Finite(level as i64 + 1));
        }
    }

    #[test]
    fn zero_power_zero_summand() {
        // n = 1, x0 = 0: the ξ = 0 summand is 0^0 = 1
        let ctx = ctx34();
        let sums = genocchi_partial_sums(1, &Rational::zero(), &ctx, 1).unwrap();
        // 1 - 4 + 16 = 13
        assert_eq!(sums[0], Rational::from_int(13));
    }
}

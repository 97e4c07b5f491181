//! Dense univariate polynomials over the exact rationals, in the
//! indeterminate `q`.
//!
//! Canonical form: no trailing zero coefficient; the zero polynomial is the
//! empty coefficient list (degree `None`). Gcd runs fraction-free on
//! cleared-denominator integer polynomials (primitive PRS) so remainder
//! coefficients stay near-minimal.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{AlgebraError, Rational};

/// Polynomial in `q` with `Rational` coefficients, index = degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyQ {
    coeffs: Vec<Rational>,
}

impl PolyQ {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        PolyQ { coeffs }
    }

    pub fn zero() -> Self {
        PolyQ { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        PolyQ::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        PolyQ::new(vec![c])
    }

    /// The variable q itself.
    pub fn var() -> Self {
        PolyQ::monomial(Rational::one(), 1)
    }

    /// c * q^k.
    pub fn monomial(c: Rational, k: usize) -> Self {
        if c.is_zero() {
            return PolyQ::zero();
        }
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        PolyQ { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` is the degree sentinel of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, q0: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * q0) + c;
        }
        acc
    }

    pub fn mul_scalar(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return PolyQ::zero();
        }
        PolyQ {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return PolyQ::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * &Rational::from_int(i as i64))
            .collect();
        PolyQ::new(coeffs)
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = PolyQ::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// q -> q^d on the variable, d >= 1.
    pub fn subst_q_power(&self, d: u32) -> Self {
        assert!(d >= 1);
        if self.is_zero() {
            return PolyQ::zero();
        }
        let d = d as usize;
        let mut coeffs = vec![Rational::zero(); (self.coeffs.len() - 1) * d + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * d] = c.clone();
        }
        PolyQ { coeffs }
    }

    /// Quotient and remainder; `deg r < deg d`. Errors on division by zero.
    pub fn div_rem(&self, d: &PolyQ) -> Result<(PolyQ, PolyQ), AlgebraError> {
        let dd = d.degree().ok_or(AlgebraError::DivisionByZero)?;
        let Some(nd) = self.degree() else {
            return Ok((PolyQ::zero(), PolyQ::zero()));
        };
        if nd < dd {
            return Ok((PolyQ::zero(), self.clone()));
        }
        let lead_inv = d.leading().unwrap().recip()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for i in (dd..=nd).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let factor = &rem[i] * &lead_inv;
            for (j, dc) in d.coeffs.iter().enumerate() {
                let t = &factor * dc;
                rem[i - dd + j] -= &t;
            }
            quot[i - dd] = factor;
        }
        rem.truncate(dd);
        Ok((PolyQ::new(quot), PolyQ::new(rem)))
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub fn exact_div(&self, d: &PolyQ) -> PolyQ {
        let (q, r) = self.div_rem(d).expect("division by zero polynomial");
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Scale so the leading coefficient is 1 (zero stays zero).
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => PolyQ::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => self.mul_scalar(&l.recip().unwrap()),
        }
    }

    /// Monic gcd via the primitive polynomial remainder sequence over Z.
    pub fn gcd(a: &PolyQ, b: &PolyQ) -> PolyQ {
        if a.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return a.monic();
        }
        let mut f = a.to_primitive_integer();
        let mut g = b.to_primitive_integer();
        if f.len() < g.len() {
            std::mem::swap(&mut f, &mut g);
        }
        loop {
            let r = pseudo_rem(&f, &g);
            if r.is_empty() {
                return PolyQ::from_integer_coeffs(&g).monic();
            }
            f = g;
            g = primitive_part(r);
        }
    }

    /// Clear denominators and divide out the content; returns integer
    /// coefficients of a primitive associate.
    fn to_primitive_integer(&self) -> Vec<BigInt> {
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        primitive_part(ints)
    }

    fn from_integer_coeffs(ints: &[BigInt]) -> PolyQ {
        PolyQ::new(ints.iter().map(|n| Rational::from_bigint(n.clone())).collect())
    }
}

fn primitive_part(mut ints: Vec<BigInt>) -> Vec<BigInt> {
    while ints.last().is_some_and(Zero::is_zero) {
        ints.pop();
    }
    let mut content = BigInt::zero();
    for c in &ints {
        content = content.gcd(c);
        if content.is_one() {
            return ints;
        }
    }
    if content.is_zero() || content.is_one() {
        return ints;
    }
    for c in &mut ints {
        *c = &*c / &content;
    }
    ints
}

/// Pseudo-remainder of primitive integer polynomials, `deg f >= deg g >= 0`.
fn pseudo_rem(f: &[BigInt], g: &[BigInt]) -> Vec<BigInt> {
    let mut rem = f.to_vec();
    let dg = g.len() - 1;
    let lead = &g[dg];
    while rem.len() > dg {
        let dr = rem.len() - 1;
        if rem[dr].is_zero() {
            rem.pop();
            continue;
        }
        let factor = rem[dr].clone();
        for c in rem.iter_mut() {
            *c = &*c * lead;
        }
        for (j, gc) in g.iter().enumerate() {
            let t = gc * &factor;
            rem[dr - dg + j] -= t;
        }
        while rem.last().is_some_and(Zero::is_zero) {
            rem.pop();
        }
    }
    rem
}

impl Add for &PolyQ {
    type Output = PolyQ;
    fn add(self, rhs: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect();
        PolyQ::new(coeffs)
    }
}

impl Sub for &PolyQ {
    type Output = PolyQ;
    fn sub(self, rhs: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect();
        PolyQ::new(coeffs)
    }
}

impl Mul for &PolyQ {
    type Output = PolyQ;
    fn mul(self, rhs: &PolyQ) -> PolyQ {
        if self.is_zero() || rhs.is_zero() {
            return PolyQ::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += &(a * b);
            }
        }
        PolyQ::new(coeffs)
    }
}

impl Neg for &PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        PolyQ {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_value_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for PolyQ {
            type Output = PolyQ;
            fn $method(self, rhs: PolyQ) -> PolyQ {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&PolyQ> for PolyQ {
            type Output = PolyQ;
            fn $method(self, rhs: &PolyQ) -> PolyQ {
                (&self).$method(rhs)
            }
        }
        impl $trait<PolyQ> for &PolyQ {
            type Output = PolyQ;
            fn $method(self, rhs: PolyQ) -> PolyQ {
                self.$method(&rhs)
            }
        }
    };
}

forward_value_binop!(Add, add);
forward_value_binop!(Sub, sub);
forward_value_binop!(Mul, mul);

impl Neg for PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        -&self
    }
}

/// Terms in descending degree with explicit signs: `q^2 + 2*q + 1`, `-4*q`.
impl fmt::Display for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let power = match k {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{k}"),
            };
            if k == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{power}")?;
            } else {
                write!(f, "{mag}*{power}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> PolyQ {
        PolyQ::new(coeffs.iter().map(|&c| Rational::from_int(c)).collect())
    }

    #[test]
    fn canonical_trim() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(PolyQ::zero().degree(), None);
    }

    #[test]
    fn degree_adds_under_mul() {
        let a = p(&[1, 2, 3]);
        let b = p(&[-5, 0, 0, 7]);
        assert_eq!(
            (&a * &b).degree(),
            Some(a.degree().unwrap() + b.degree().unwrap())
        );
    }

    #[test]
    fn div_rem_roundtrip() {
        let a = p(&[3, -2, 0, 1, 4]);
        let d = p(&[1, 1]);
        let (q, r) = a.div_rem(&d).unwrap();
        assert_eq!(&(&q * &d) + &r, a);
        assert!(r.degree() < d.degree());
        assert!(p(&[1]).div_rem(&PolyQ::zero()).is_err());
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (q+1)^2 (q-2)  vs  (q+1)(q+3)
        let a = &p(&[1, 1]).pow(2) * &p(&[-2, 1]);
        let b = &p(&[1, 1]) * &p(&[3, 1]);
        assert_eq!(PolyQ::gcd(&a, &b), p(&[1, 1]));
        assert_eq!(PolyQ::gcd(&a, &PolyQ::zero()), a.monic());
    }

    #[test]
    fn gcd_of_coprime_is_one() {
        let a = p(&[1, 1]);
        let b = p(&[2, 1]);
        assert!(PolyQ::gcd(&a, &b).is_one());
    }

    #[test]
    fn display_descending_with_signs() {
        assert_eq!(p(&[1, 2, 1]).to_string(), "q^2 + 2*q + 1");
        assert_eq!(p(&[0, -4]).to_string(), "-4*q");
        assert_eq!(p(&[0, -1, 0, 1]).to_string(), "q^3 - q");
        assert_eq!(PolyQ::zero().to_string(), "0");
        let half = PolyQ::new(vec![Rational::ratio(-1, 2), Rational::ratio(3, 2)]);
        assert_eq!(half.to_string(), "3/2*q - 1/2");
    }

    #[test]
    fn subst_power_spreads_exponents() {
        let a = p(&[1, 2, 3]);
        assert_eq!(a.subst_q_power(3), p(&[1, 0, 0, 2, 0, 0, 3]));
        assert_eq!(a.subst_q_power(1), a);
    }

    #[test]
    fn eval_horner() {
        let a = p(&[1, -1, 2]);
        assert_eq!(a.eval(&Rational::ratio(1, 2)), Rational::from_int(1));
    }
}

//! The field Q(q) of rational functions in `q`.
//!
//! Canonical form: numerator and denominator coprime, denominator monic,
//! scalars folded into the numerator. With that normalization, derived
//! structural equality coincides with mathematical equality.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::{AlgebraError, PolyQ, Rational};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFuncQ {
    num: PolyQ,
    den: PolyQ,
}

impl RatFuncQ {
    /// Canonicalize `num/den`; errors if `den` is the zero polynomial.
    pub fn new(num: PolyQ, den: PolyQ) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: PolyQ, den: PolyQ) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return RatFuncQ {
                num: PolyQ::zero(),
                den: PolyQ::one(),
            };
        }
        let (mut num, mut den) = (num, den);
        let g = PolyQ::gcd(&num, &den);
        if !g.is_one() {
            num = num.exact_div(&g);
            den = den.exact_div(&g);
        }
        Self::monic_scaled(num, den)
    }

    /// For fractions already known coprime: only rescale to a monic
    /// denominator.
    fn monic_scaled(num: PolyQ, den: PolyQ) -> Self {
        if num.is_zero() {
            return RatFuncQ {
                num: PolyQ::zero(),
                den: PolyQ::one(),
            };
        }
        let lead = den.leading().expect("nonzero denominator").clone();
        if lead.is_one() {
            return RatFuncQ { num, den };
        }
        let inv = lead.recip().unwrap();
        RatFuncQ {
            num: num.mul_scalar(&inv),
            den: den.mul_scalar(&inv),
        }
    }

    pub fn from_poly(p: PolyQ) -> Self {
        RatFuncQ {
            num: p,
            den: PolyQ::one(),
        }
    }

    pub fn from_rational(r: Rational) -> Self {
        RatFuncQ::from_poly(PolyQ::constant(r))
    }

    pub fn from_int(n: i64) -> Self {
        RatFuncQ::from_rational(Rational::from_int(n))
    }

    pub fn zero() -> Self {
        RatFuncQ::from_poly(PolyQ::zero())
    }

    pub fn one() -> Self {
        RatFuncQ::from_poly(PolyQ::one())
    }

    /// The indeterminate q.
    pub fn q() -> Self {
        RatFuncQ::from_poly(PolyQ::var())
    }

    /// q^k for k possibly negative.
    pub fn q_power(k: i64) -> Self {
        if k >= 0 {
            RatFuncQ::from_poly(PolyQ::monomial(Rational::one(), k as usize))
        } else {
            RatFuncQ {
                num: PolyQ::one(),
                den: PolyQ::monomial(Rational::one(), (-k) as usize),
            }
        }
    }

    /// The q-bracket [n]_q = 1 + q + ... + q^{n-1} as a field element.
    pub fn qbracket(n: u64) -> Self {
        RatFuncQ::from_poly(super::qbracket(n))
    }

    pub fn num(&self) -> &PolyQ {
        &self.num
    }

    pub fn den(&self) -> &PolyQ {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Some(c) iff the value is a constant c in Q.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.den.is_one() && self.num.is_constant() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        RatFuncQ::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn mul_rational(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return RatFuncQ::zero();
        }
        RatFuncQ {
            num: self.num.mul_scalar(c),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, e: usize) -> Self {
        // num and den are coprime, so power by parts needs no reduction
        RatFuncQ {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    /// Formal derivative d/dq via the quotient rule, canonicalized.
    pub fn derivative(&self) -> Self {
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        let den = &self.den * &self.den;
        Self::normalized(num, den)
    }

    /// Exact substitution q = q0; pole error when the denominator vanishes.
    pub fn eval(&self, q0: &Rational) -> Result<Rational, AlgebraError> {
        let d = self.den.eval(q0);
        if d.is_zero() {
            return Err(AlgebraError::Pole { at: q0.to_string() });
        }
        Ok(&self.num.eval(q0) / &d)
    }

    /// q -> q^d. Coprimality and the monic denominator both survive the
    /// substitution.
    pub fn subst_q_power(&self, d: u32) -> Self {
        Self::monic_scaled(self.num.subst_q_power(d), self.den.subst_q_power(d))
    }

    /// Exact sum of `coef * value` terms over one shared denominator,
    /// reducing once at the end. Equivalent to folding `+`, but does a
    /// single gcd instead of one per term.
    pub fn linear_combination<'a, I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Rational, &'a RatFuncQ)>,
    {
        let terms: Vec<(Rational, &RatFuncQ)> = terms
            .into_iter()
            .filter(|(c, v)| !c.is_zero() && !v.is_zero())
            .collect();
        let mut common = PolyQ::one();
        for (_, v) in &terms {
            let g = PolyQ::gcd(&common, &v.den);
            common = &common * &v.den.exact_div(&g);
        }
        let mut num = PolyQ::zero();
        for (c, v) in &terms {
            let scale = common.exact_div(&v.den);
            num = &num + &(&v.num.mul_scalar(c) * &scale);
        }
        Self::normalized(num, common)
    }
}

impl Add for &RatFuncQ {
    type Output = RatFuncQ;
    fn add(self, rhs: &RatFuncQ) -> RatFuncQ {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        // classic gcd-of-denominators addition; the result comes out reduced
        let g = PolyQ::gcd(&self.den, &rhs.den);
        if g.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            let den = &self.den * &rhs.den;
            return RatFuncQ::monic_scaled(num, den);
        }
        let d1 = self.den.exact_div(&g);
        let d2 = rhs.den.exact_div(&g);
        let t = &(&self.num * &d2) + &(&rhs.num * &d1);
        let g2 = PolyQ::gcd(&t, &g);
        let num = t.exact_div(&g2);
        let den = &d1 * &rhs.den.exact_div(&g2);
        RatFuncQ::monic_scaled(num, den)
    }
}

impl Sub for &RatFuncQ {
    type Output = RatFuncQ;
    fn sub(self, rhs: &RatFuncQ) -> RatFuncQ {
        self + &(-rhs)
    }
}

impl Mul for &RatFuncQ {
    type Output = RatFuncQ;
    fn mul(self, rhs: &RatFuncQ) -> RatFuncQ {
        if self.is_zero() || rhs.is_zero() {
            return RatFuncQ::zero();
        }
        // cross-reduce before multiplying to keep factors small
        let g1 = PolyQ::gcd(&self.num, &rhs.den);
        let g2 = PolyQ::gcd(&rhs.num, &self.den);
        let num = &self.num.exact_div(&g1) * &rhs.num.exact_div(&g2);
        let den = &self.den.exact_div(&g2) * &rhs.den.exact_div(&g1);
        RatFuncQ::monic_scaled(num, den)
    }
}

/// Panics on division by zero; use [`RatFuncQ::checked_div`] to get an error.
impl Div for &RatFuncQ {
    type Output = RatFuncQ;
    fn div(self, rhs: &RatFuncQ) -> RatFuncQ {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

impl Neg for &RatFuncQ {
    type Output = RatFuncQ;
    fn neg(self) -> RatFuncQ {
        RatFuncQ {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_value_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for RatFuncQ {
            type Output = RatFuncQ;
            fn $method(self, rhs: RatFuncQ) -> RatFuncQ {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&RatFuncQ> for RatFuncQ {
            type Output = RatFuncQ;
            fn $method(self, rhs: &RatFuncQ) -> RatFuncQ {
                (&self).$method(rhs)
            }
        }
        impl $trait<RatFuncQ> for &RatFuncQ {
            type Output = RatFuncQ;
            fn $method(self, rhs: RatFuncQ) -> RatFuncQ {
                self.$method(&rhs)
            }
        }
    };
}

forward_value_binop!(Add, add);
forward_value_binop!(Sub, sub);
forward_value_binop!(Mul, mul);
forward_value_binop!(Div, div);

impl Neg for RatFuncQ {
    type Output = RatFuncQ;
    fn neg(self) -> RatFuncQ {
        -&self
    }
}

/// `num` when the denominator is 1; otherwise `(num)/(den)`, with a bare
/// numerator for constants: `2/(q + 1)`, `(-4*q)/(q^2 + 2*q + 1)`.
impl fmt::Display for RatFuncQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.is_constant() {
            write!(f, "{}/({})", self.num, self.den)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> PolyQ {
        PolyQ::new(coeffs.iter().map(|&c| Rational::from_int(c)).collect())
    }

    fn rf(num: &[i64], den: &[i64]) -> RatFuncQ {
        RatFuncQ::new(p(num), p(den)).unwrap()
    }

    #[test]
    fn canonical_form_unique() {
        // 2q+2 over q^2+2q+1 reduces to 2/(q+1)
        let a = rf(&[2, 2], &[1, 2, 1]);
        assert_eq!(a, rf(&[2], &[1, 1]));
        // denominator made monic, scalar folded into numerator
        let b = rf(&[1], &[2, 2]);
        assert_eq!(b.den(), &p(&[1, 1]));
        assert_eq!(b.num(), &PolyQ::constant(Rational::ratio(1, 2)));
    }

    #[test]
    fn common_denominator_addition() {
        // 2/(1+q) + 2q/(1+q) = 2
        let a = rf(&[2], &[1, 1]);
        let b = rf(&[0, 2], &[1, 1]);
        assert_eq!(&a + &b, RatFuncQ::from_int(2));
    }

    #[test]
    fn cancellation_division() {
        // (1-q^2)/(1-q) = 1+q
        let a = RatFuncQ::from_poly(p(&[1, 0, -1]));
        let b = RatFuncQ::from_poly(p(&[1, -1]));
        assert_eq!(a.checked_div(&b).unwrap(), RatFuncQ::from_poly(p(&[1, 1])));
        assert!(a.checked_div(&RatFuncQ::zero()).is_err());
    }

    #[test]
    fn product_with_clearing() {
        // (2/(1+q)) * (1+q)^2 = 2 + 2q
        let a = rf(&[2], &[1, 1]);
        let b = RatFuncQ::from_poly(p(&[1, 1]).pow(2));
        assert_eq!(&a * &b, RatFuncQ::from_poly(p(&[2, 2])));
    }

    #[test]
    fn derivative_quotient_rule() {
        // d/dq [q/(1+q)] = 1/(1+q)^2
        let a = rf(&[0, 1], &[1, 1]);
        assert_eq!(a.derivative(), rf(&[1], &[1, 2, 1]));
        // constants drop, monomials differentiate
        assert!(RatFuncQ::from_int(7).derivative().is_zero());
        let q2 = RatFuncQ::from_poly(p(&[0, 0, 1]));
        assert_eq!(q2.derivative(), RatFuncQ::from_poly(p(&[0, 2])));
    }

    #[test]
    fn eval_and_poles() {
        // -4q/(1+q)^2 at q=1 -> -1
        let g2 = rf(&[0, -4], &[1, 2, 1]);
        assert_eq!(g2.eval(&Rational::one()).unwrap(), Rational::from_int(-1));
        // 2/(1+q) at 1/2 -> 4/3
        let g1 = rf(&[2], &[1, 1]);
        assert_eq!(
            g1.eval(&Rational::ratio(1, 2)).unwrap(),
            Rational::ratio(4, 3)
        );
        // 1/(1-q) at q=1 -> pole
        let pole = rf(&[1], &[1, -1]);
        assert!(matches!(
            pole.eval(&Rational::one()),
            Err(AlgebraError::Pole { .. })
        ));
    }

    #[test]
    fn qbracket_values() {
        assert!(RatFuncQ::qbracket(0).is_zero());
        assert!(RatFuncQ::qbracket(1).is_one());
        assert_eq!(RatFuncQ::qbracket(3), RatFuncQ::from_poly(p(&[1, 1, 1])));
        // equals (1 - q^3)/(1 - q) after clearing
        let cleared = RatFuncQ::new(p(&[1, 0, 0, -1]), p(&[1, -1])).unwrap();
        assert_eq!(cleared, RatFuncQ::qbracket(3));
    }

    #[test]
    fn linear_combination_matches_fold() {
        let a = rf(&[2], &[1, 1]);
        let b = rf(&[0, -4], &[1, 2, 1]);
        let c = rf(&[1, 1, 3], &[0, 1]);
        let coefs = [Rational::from_int(3), Rational::ratio(-1, 2), Rational::from_int(5)];
        let lc = RatFuncQ::linear_combination(vec![
            (coefs[0].clone(), &a),
            (coefs[1].clone(), &b),
            (coefs[2].clone(), &c),
        ]);
        let fold = &(&a.mul_rational(&coefs[0]) + &b.mul_rational(&coefs[1]))
            + &c.mul_rational(&coefs[2]);
        assert_eq!(lc, fold);
    }

    #[test]
    fn display_forms() {
        assert_eq!(rf(&[0, -4], &[1, 2, 1]).to_string(), "(-4*q)/(q^2 + 2*q + 1)");
        assert_eq!(rf(&[2], &[1, 1]).to_string(), "2/(q + 1)");
        assert_eq!(RatFuncQ::from_poly(p(&[1, 1])).to_string(), "q + 1");
        assert_eq!(RatFuncQ::zero().to_string(), "0");
    }
}

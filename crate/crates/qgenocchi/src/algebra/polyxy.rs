//! Polynomials in `x` and `y` with coefficients in Q(q).
//!
//! A [`PolyXY`] is a dense rectangular grid of [`RatFuncQ`] coefficients
//! indexed by (degree in x, degree in y); the y-degree-0 slice represents
//! Q(q)[x]. Identity residuals live here: an identity holds iff its
//! residual is the canonical zero.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{binomial, AlgebraError, RatFuncQ, Rational};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyXY {
    /// rows[i][j] = coefficient of x^i y^j; all rows share one width.
    /// No trailing all-zero row or column; zero is the empty grid.
    rows: Vec<Vec<RatFuncQ>>,
}

impl PolyXY {
    pub fn zero() -> Self {
        PolyXY { rows: Vec::new() }
    }

    pub fn from_ratfunc(c: RatFuncQ) -> Self {
        if c.is_zero() {
            return PolyXY::zero();
        }
        PolyXY { rows: vec![vec![c]] }
    }

    pub fn from_rational(c: Rational) -> Self {
        PolyXY::from_ratfunc(RatFuncQ::from_rational(c))
    }

    pub fn from_int(n: i64) -> Self {
        PolyXY::from_ratfunc(RatFuncQ::from_int(n))
    }

    pub fn one() -> Self {
        PolyXY::from_int(1)
    }

    pub fn x() -> Self {
        PolyXY::monomial(RatFuncQ::one(), 1, 0)
    }

    pub fn y() -> Self {
        PolyXY::monomial(RatFuncQ::one(), 0, 1)
    }

    /// c * x^i * y^j.
    pub fn monomial(c: RatFuncQ, i: usize, j: usize) -> Self {
        if c.is_zero() {
            return PolyXY::zero();
        }
        let mut rows = vec![vec![RatFuncQ::zero(); j + 1]; i + 1];
        rows[i][j] = c;
        PolyXY { rows }
    }

    /// Σ coeffs[i] x^i (no y part).
    pub fn from_x_coeffs(coeffs: Vec<RatFuncQ>) -> Self {
        let rows = coeffs.into_iter().map(|c| vec![c]).collect();
        Self::trimmed(rows)
    }

    /// Build from a raw grid, restoring the canonical trim.
    pub fn from_grid(rows: Vec<Vec<RatFuncQ>>) -> Self {
        let width = rows.iter().map(Vec::len).max().unwrap_or(0);
        let rows = rows
            .into_iter()
            .map(|mut r| {
                r.resize(width, RatFuncQ::zero());
                r
            })
            .collect();
        Self::trimmed(rows)
    }

    fn trimmed(mut rows: Vec<Vec<RatFuncQ>>) -> Self {
        while rows.last().is_some_and(|r| r.iter().all(RatFuncQ::is_zero)) {
            rows.pop();
        }
        let mut width = rows.iter().map(Vec::len).max().unwrap_or(0);
        while width > 0 && rows.iter().all(|r| {
            r.get(width - 1).map_or(true, RatFuncQ::is_zero)
        }) {
            width -= 1;
        }
        for r in &mut rows {
            r.resize(width, RatFuncQ::zero());
        }
        PolyXY { rows }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn deg_x(&self) -> Option<usize> {
        self.rows.len().checked_sub(1)
    }

    pub fn deg_y(&self) -> Option<usize> {
        self.rows.first().map(|r| r.len() - 1)
    }

    pub fn coeff(&self, i: usize, j: usize) -> RatFuncQ {
        self.rows
            .get(i)
            .and_then(|r| r.get(j))
            .cloned()
            .unwrap_or_else(RatFuncQ::zero)
    }

    pub fn mul_ratfunc(&self, c: &RatFuncQ) -> Self {
        if c.is_zero() || self.is_zero() {
            return PolyXY::zero();
        }
        PolyXY {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|a| a * c).collect())
                .collect(),
        }
    }

    pub fn mul_rational(&self, c: &Rational) -> Self {
        self.mul_ratfunc(&RatFuncQ::from_rational(c.clone()))
    }

    pub fn div_rational(&self, c: &Rational) -> Self {
        self.mul_rational(&c.recip().expect("division by zero scalar"))
    }

    /// (x + c)^n expanded binomially.
    pub fn x_shift_power(c: &Rational, n: usize) -> Self {
        let mut rows = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let coef = &binomial(n as u64, k as i64) * &c.pow((n - k) as i64);
            rows.push(vec![RatFuncQ::from_rational(coef)]);
        }
        Self::trimmed(rows)
    }

    /// x -> a*x + b with rational a, b.
    pub fn subst_x_affine(&self, a: &Rational, b: &Rational) -> Self {
        let mut out: Vec<Vec<RatFuncQ>> = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            // (a x + b)^i = Σ_m C(i,m) a^m b^{i-m} x^m
            for m in 0..=i {
                let scale = &(&binomial(i as u64, m as i64) * &a.pow(m as i64))
                    * &b.pow((i - m) as i64);
                if scale.is_zero() {
                    continue;
                }
                for (j, c) in row.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    grid_add(&mut out, m, j, &c.mul_rational(&scale));
                }
            }
        }
        Self::from_grid(out)
    }

    /// x -> a*x + b*y with rational a, b.
    pub fn subst_x_linear_xy(&self, a: &Rational, b: &Rational) -> Self {
        let mut out: Vec<Vec<RatFuncQ>> = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            for m in 0..=i {
                let scale = &(&binomial(i as u64, m as i64) * &a.pow(m as i64))
                    * &b.pow((i - m) as i64);
                if scale.is_zero() {
                    continue;
                }
                for (j, c) in row.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    grid_add(&mut out, m, j + (i - m), &c.mul_rational(&scale));
                }
            }
        }
        Self::from_grid(out)
    }

    /// q -> q^d on every coefficient.
    pub fn subst_q_power(&self, d: u32) -> Self {
        PolyXY {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|c| c.subst_q_power(d)).collect())
                .collect(),
        }
    }

    /// Exact evaluation; pole error if any coefficient denominator
    /// vanishes at q0.
    pub fn eval(&self, q0: &Rational, x0: &Rational, y0: &Rational) -> Result<Rational, AlgebraError> {
        let mut acc = Rational::zero();
        for (i, row) in self.rows.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let term = &(&c.eval(q0)? * &x0.pow(i as i64)) * &y0.pow(j as i64);
                acc += &term;
            }
        }
        Ok(acc)
    }

    /// Exact substitution q = q0, leaving a polynomial in x, y over Q.
    pub fn specialize_q(&self, q0: &Rational) -> Result<RatPolyXY, AlgebraError> {
        let mut rows = Vec::with_capacity(self.rows.len());
        for row in &self.rows {
            let mut out = Vec::with_capacity(row.len());
            for c in row {
                out.push(if c.is_zero() { Rational::zero() } else { c.eval(q0)? });
            }
            rows.push(out);
        }
        Ok(RatPolyXY::from_grid(rows))
    }

    /// Substitute a rational value for x, collapsing to Q(q)[y]; with no y
    /// present the result is the single Q(q) value.
    pub fn eval_x(&self, x0: &Rational) -> Vec<RatFuncQ> {
        let width = self.rows.first().map_or(0, Vec::len);
        let mut out = vec![RatFuncQ::zero(); width];
        for (i, row) in self.rows.iter().enumerate() {
            let xp = x0.pow(i as i64);
            if xp.is_zero() {
                continue;
            }
            for (j, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    out[j] = &out[j] + &c.mul_rational(&xp);
                }
            }
        }
        out
    }

    /// x-substitution to a single Q(q) value (y must not occur).
    pub fn eval_x_scalar(&self, x0: &Rational) -> RatFuncQ {
        debug_assert!(self.deg_y().unwrap_or(0) == 0, "y occurs in polynomial");
        self.eval_x(x0).into_iter().next().unwrap_or_else(RatFuncQ::zero)
    }
}

fn grid_add(rows: &mut Vec<Vec<RatFuncQ>>, i: usize, j: usize, c: &RatFuncQ) {
    if rows.len() <= i {
        rows.resize(i + 1, Vec::new());
    }
    if rows[i].len() <= j {
        rows[i].resize(j + 1, RatFuncQ::zero());
    }
    rows[i][j] = &rows[i][j] + c;
}

impl Add for &PolyXY {
    type Output = PolyXY;
    fn add(self, rhs: &PolyXY) -> PolyXY {
        let ni = self.rows.len().max(rhs.rows.len());
        let nj = self
            .rows
            .first()
            .map_or(0, Vec::len)
            .max(rhs.rows.first().map_or(0, Vec::len));
        let mut rows = vec![vec![RatFuncQ::zero(); nj]; ni];
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                let a = self.coeff(i, j);
                let b = rhs.coeff(i, j);
                *slot = if a.is_zero() {
                    b
                } else if b.is_zero() {
                    a
                } else {
                    &a + &b
                };
            }
        }
        PolyXY::trimmed(rows)
    }
}

impl Sub for &PolyXY {
    type Output = PolyXY;
    fn sub(self, rhs: &PolyXY) -> PolyXY {
        self + &(-rhs)
    }
}

impl Mul for &PolyXY {
    type Output = PolyXY;
    fn mul(self, rhs: &PolyXY) -> PolyXY {
        if self.is_zero() || rhs.is_zero() {
            return PolyXY::zero();
        }
        let mut rows: Vec<Vec<RatFuncQ>> = Vec::new();
        for (i1, r1) in self.rows.iter().enumerate() {
            for (j1, c1) in r1.iter().enumerate() {
                if c1.is_zero() {
                    continue;
                }
                for (i2, r2) in rhs.rows.iter().enumerate() {
                    for (j2, c2) in r2.iter().enumerate() {
                        if c2.is_zero() {
                            continue;
                        }
                        grid_add(&mut rows, i1 + i2, j1 + j2, &(c1 * c2));
                    }
                }
            }
        }
        PolyXY::from_grid(rows)
    }
}

impl Neg for &PolyXY {
    type Output = PolyXY;
    fn neg(self) -> PolyXY {
        PolyXY {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|c| -c).collect())
                .collect(),
        }
    }
}

macro_rules! forward_value_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for PolyXY {
            type Output = PolyXY;
            fn $method(self, rhs: PolyXY) -> PolyXY {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&PolyXY> for PolyXY {
            type Output = PolyXY;
            fn $method(self, rhs: &PolyXY) -> PolyXY {
                (&self).$method(rhs)
            }
        }
        impl $trait<PolyXY> for &PolyXY {
            type Output = PolyXY;
            fn $method(self, rhs: PolyXY) -> PolyXY {
                self.$method(&rhs)
            }
        }
    };
}

forward_value_binop!(Add, add);
forward_value_binop!(Sub, sub);
forward_value_binop!(Mul, mul);

impl Neg for PolyXY {
    type Output = PolyXY;
    fn neg(self) -> PolyXY {
        -&self
    }
}

/// Terms in descending x-degree, then descending y-degree:
/// `4/(q + 1)*x + (-4*q)/(q^2 + 2*q + 1)`.
impl fmt::Display for PolyXY {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, row) in self.rows.iter().enumerate().rev() {
            for (j, c) in row.iter().enumerate().rev() {
                if c.is_zero() {
                    continue;
                }
                if !first {
                    write!(f, " + ")?;
                }
                first = false;
                write!(f, "{}", term_text(c, i, j))?;
            }
        }
        Ok(())
    }
}

fn monomial_text(i: usize, j: usize) -> String {
    let x = match i {
        0 => String::new(),
        1 => "x".to_string(),
        _ => format!("x^{i}"),
    };
    let y = match j {
        0 => String::new(),
        1 => "y".to_string(),
        _ => format!("y^{j}"),
    };
    match (x.is_empty(), y.is_empty()) {
        (true, true) => String::new(),
        (false, true) => x,
        (true, false) => y,
        (false, false) => format!("{x}*{y}"),
    }
}

fn term_text(c: &RatFuncQ, i: usize, j: usize) -> String {
    let m = monomial_text(i, j);
    if m.is_empty() {
        return c.to_string();
    }
    if c.is_one() {
        return m;
    }
    if let Some(r) = c.as_rational() {
        if r == Rational::from_int(-1) {
            return format!("-{m}");
        }
        return format!("{r}*{m}");
    }
    if c.den().is_one() {
        format!("({})*{m}", c.num())
    } else {
        format!("{c}*{m}")
    }
}

/// Polynomial in x, y over Q: the image of a [`PolyXY`] under an exact
/// q-specialization.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatPolyXY {
    rows: Vec<Vec<Rational>>,
}

impl RatPolyXY {
    pub fn from_grid(mut rows: Vec<Vec<Rational>>) -> Self {
        while rows.last().is_some_and(|r| r.iter().all(Rational::is_zero)) {
            rows.pop();
        }
        let mut width = rows.iter().map(Vec::len).max().unwrap_or(0);
        for r in &mut rows {
            r.resize(width, Rational::zero());
        }
        while width > 0 && rows.iter().all(|r| r[width - 1].is_zero()) {
            width -= 1;
        }
        for r in &mut rows {
            r.truncate(width);
        }
        RatPolyXY { rows }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn coeff(&self, i: usize, j: usize) -> Rational {
        self.rows
            .get(i)
            .and_then(|r| r.get(j))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x0: &Rational, y0: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (i, row) in self.rows.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    acc += &(&(c * &x0.pow(i as i64)) * &y0.pow(j as i64));
                }
            }
        }
        acc
    }

    /// Back into the symbolic grid, coefficients as constants.
    pub fn to_polyxy(&self) -> PolyXY {
        PolyXY::from_grid(
            self.rows
                .iter()
                .map(|r| r.iter().map(|c| RatFuncQ::from_rational(c.clone())).collect())
                .collect(),
        )
    }
}

impl fmt::Display for RatPolyXY {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_polyxy())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> RatFuncQ {
        RatFuncQ::q()
    }

    #[test]
    fn canonical_trim_rectangular() {
        let g = PolyXY::from_grid(vec![
            vec![RatFuncQ::one(), RatFuncQ::zero()],
            vec![RatFuncQ::zero(), RatFuncQ::zero()],
        ]);
        assert_eq!(g.deg_x(), Some(0));
        assert_eq!(g.deg_y(), Some(0));
        assert!(PolyXY::from_grid(vec![vec![RatFuncQ::zero()]]).is_zero());
    }

    #[test]
    fn mul_matches_hand_expansion() {
        // (x + y)(x - y) = x^2 - y^2
        let sum = &PolyXY::x() + &PolyXY::y();
        let diff = &PolyXY::x() - &PolyXY::y();
        let prod = &sum * &diff;
        let expect = &PolyXY::monomial(RatFuncQ::one(), 2, 0)
            - &PolyXY::monomial(RatFuncQ::one(), 0, 2);
        assert_eq!(prod, expect);
    }

    #[test]
    fn affine_substitution() {
        // x^2 with x -> x+1 gives x^2 + 2x + 1
        let sq = PolyXY::monomial(RatFuncQ::one(), 2, 0);
        let shifted = sq.subst_x_affine(&Rational::one(), &Rational::one());
        let expect = &(&sq + &PolyXY::monomial(RatFuncQ::from_int(2), 1, 0)) + &PolyXY::one();
        assert_eq!(shifted, expect);
        // x -> 0 keeps only the constant row
        let p = &sq + &PolyXY::from_int(7);
        assert_eq!(
            p.subst_x_affine(&Rational::zero(), &Rational::zero()),
            PolyXY::from_int(7)
        );
    }

    #[test]
    fn x_to_x_plus_y_is_binomial() {
        let cube = PolyXY::monomial(RatFuncQ::one(), 3, 0);
        let both = cube.subst_x_linear_xy(&Rational::one(), &Rational::one());
        let direct = (&PolyXY::x() + &PolyXY::y())
            .mul_ratfunc(&RatFuncQ::one());
        let direct = &(&direct * &direct) * &direct;
        assert_eq!(both, direct);
    }

    #[test]
    fn eval_commutes_with_arithmetic() {
        let a = &PolyXY::x().mul_ratfunc(&q()) + &PolyXY::y();
        let b = &PolyXY::monomial(q(), 1, 1) + &PolyXY::from_int(3);
        let (q0, x0, y0) = (Rational::ratio(1, 2), Rational::from_int(3), Rational::from_int(2));
        let lhs = (&a * &b).eval(&q0, &x0, &y0).unwrap();
        let rhs = &a.eval(&q0, &x0, &y0).unwrap() * &b.eval(&q0, &x0, &y0).unwrap();
        assert_eq!(lhs, rhs);
        let lhs = (&a + &b).eval(&q0, &x0, &y0).unwrap();
        let rhs = &a.eval(&q0, &x0, &y0).unwrap() + &b.eval(&q0, &x0, &y0).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn specialization_pole_detected() {
        let f = RatFuncQ::new(
            crate::algebra::PolyQ::one(),
            crate::algebra::PolyQ::new(vec![Rational::one(), Rational::from_int(-1)]),
        )
        .unwrap();
        let p = PolyXY::monomial(f, 1, 0);
        assert!(p.specialize_q(&Rational::one()).is_err());
        assert!(p.specialize_q(&Rational::ratio(1, 2)).is_ok());
    }

    #[test]
    fn display_deterministic() {
        // 4/(q+1) x - 4q/(q+1)^2
        let one_plus_q = crate::algebra::PolyQ::new(vec![Rational::one(), Rational::one()]);
        let c1 = RatFuncQ::new(
            crate::algebra::PolyQ::constant(Rational::from_int(4)),
            one_plus_q.clone(),
        )
        .unwrap();
        let c0 = RatFuncQ::new(
            crate::algebra::PolyQ::monomial(Rational::from_int(-4), 1),
            one_plus_q.pow(2),
        )
        .unwrap();
        let p = &PolyXY::monomial(c1, 1, 0) + &PolyXY::from_ratfunc(c0);
        assert_eq!(
            p.to_string(),
            "4/(q + 1)*x + (-4*q)/(q^2 + 2*q + 1)"
        );
        assert_eq!(PolyXY::zero().to_string(), "0");
    }

    #[test]
    fn x_shift_power_expansion() {
        let p = PolyXY::x_shift_power(&Rational::from_int(-1), 2);
        let expect = &(&PolyXY::monomial(RatFuncQ::one(), 2, 0)
            - &PolyXY::monomial(RatFuncQ::from_int(2), 1, 0))
            + &PolyXY::one();
        assert_eq!(p, expect);
    }
}

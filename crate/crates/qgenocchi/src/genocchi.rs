//! q-Genocchi numbers and polynomials from the umbral recurrence.
//!
//! `G_{0,q} = 0` and `q (G_q + 1)^n + G_{n,q} = 2` if n = 1, else 0 for
//! n >= 2, where `(G_q + 1)^n` expands binomially with `G_q^k` replaced by
//! `G_{k,q}` (the k = 0 term means `G_{0,q}`, which vanishes). Solving for
//! the top term gives
//!
//! ```text
//! G_{1,q} = 2/(1+q),
//! G_{n,q} = -q/(1+q) * Σ_{k=0}^{n-1} C(n,k) G_{k,q}     (n >= 2),
//! ```
//!
//! and `G_{n,q}(x) = Σ_l C(n,l) x^l G_{n-l,q}`. These are the
//! system-of-record values everything else is audited against.

use crate::algebra::{binomial, PolyXY, RatFuncQ, Rational};

/// Memoized table of `G_{n,q}` and `G_{n,q}(x)` for n = 0..=max_n.
/// Construction is single-writer; a finished table is immutable and can be
/// shared for concurrent reads.
pub struct GenocchiTable {
    numbers: Vec<RatFuncQ>,
    polys: Vec<PolyXY>,
}

impl GenocchiTable {
    pub fn new(max_n: usize) -> Self {
        let numbers = compute_numbers(max_n);
        let polys = (0..=max_n).map(|n| poly_from_numbers(&numbers, n)).collect();
        GenocchiTable { numbers, polys }
    }

    pub fn max_n(&self) -> usize {
        self.numbers.len() - 1
    }

    /// G_{n,q}.
    pub fn number(&self, n: usize) -> &RatFuncQ {
        &self.numbers[n]
    }

    /// G_{n,q}(x) with x the first grid variable.
    pub fn poly(&self, n: usize) -> &PolyXY {
        &self.polys[n]
    }

    /// G_{n,q}(x0) in Q(q).
    pub fn poly_at(&self, n: usize, x0: &Rational) -> RatFuncQ {
        self.polys[n].eval_x_scalar(x0)
    }
}

fn compute_numbers(max_n: usize) -> Vec<RatFuncQ> {
    let mut numbers = Vec::with_capacity(max_n + 1);
    numbers.push(RatFuncQ::zero());
    if max_n == 0 {
        return numbers;
    }
    let one_plus_q = crate::algebra::qbracket(2);
    let g1 = RatFuncQ::new(
        crate::algebra::PolyQ::constant(Rational::from_int(2)),
        one_plus_q.clone(),
    )
    .unwrap();
    numbers.push(g1);
    // -q/(1+q)
    let front = RatFuncQ::new(
        crate::algebra::PolyQ::monomial(Rational::from_int(-1), 1),
        one_plus_q,
    )
    .unwrap();
    for n in 2..=max_n {
        let sum = RatFuncQ::linear_combination(
            (0..n).map(|k| (binomial(n as u64, k as i64), &numbers[k])),
        );
        numbers.push(&front * &sum);
    }
    numbers
}

fn poly_from_numbers(numbers: &[RatFuncQ], n: usize) -> PolyXY {
    // coefficient of x^l is C(n,l) G_{n-l,q}; no additions needed
    let coeffs = (0..=n)
        .map(|l| numbers[n - l].mul_rational(&binomial(n as u64, l as i64)))
        .collect();
    PolyXY::from_x_coeffs(coeffs)
}

/// G_{n,q} computed from a fresh table; prefer [`GenocchiTable`] for bulk use.
pub fn genocchi_number(n: usize) -> RatFuncQ {
    compute_numbers(n).pop().unwrap()
}

/// G_{n,q}(x) computed from a fresh table.
pub fn genocchi_poly(n: usize) -> PolyXY {
    let numbers = compute_numbers(n);
    poly_from_numbers(&numbers, n)
}

/// Both sides of the addition identity
/// `G_{n,q}(x+y) = Σ_{k=0}^n C(n,k) G_{k,q}(x) y^{n-k}`; the caller asserts
/// equality.
pub fn addition_expand(table: &GenocchiTable, n: usize) -> (PolyXY, PolyXY) {
    let lhs = table
        .poly(n)
        .subst_x_linear_xy(&Rational::one(), &Rational::one());
    // column j = n - k receives C(n,k) G_{k,q}(x); each grid slot is hit once
    let mut rows: Vec<Vec<RatFuncQ>> = vec![vec![RatFuncQ::zero(); n + 1]; n + 1];
    for k in 0..=n {
        let c = binomial(n as u64, k as i64);
        let gk = table.poly(k);
        for l in 0..=k {
            let v = gk.coeff(l, 0);
            if !v.is_zero() {
                rows[l][n - k] = v.mul_rational(&c);
            }
        }
    }
    (lhs, PolyXY::from_grid(rows))
}

/// Both sides of the reflection identity
/// `q G_{n+1,q}(x+1) + G_{n+1,q}(x) = 2 (n+1) x^n`.
pub fn reflection_pair(table: &GenocchiTable, n: usize) -> (PolyXY, PolyXY) {
    let g = table.poly(n + 1);
    let shifted = g.subst_x_affine(&Rational::one(), &Rational::one());
    let lhs = &shifted.mul_ratfunc(&RatFuncQ::q()) + g;
    let rhs = PolyXY::monomial(RatFuncQ::from_int(2 * (n as i64 + 1)), n, 0);
    (lhs, rhs)
}

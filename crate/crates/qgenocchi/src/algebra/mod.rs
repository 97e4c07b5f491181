//! Exact scalar, polynomial, and rational-function arithmetic.
//!
//! Everything here is immutable after construction and every operation is
//! a pure function, so values can be shared freely across threads.

mod poly;
mod polyxy;
mod rational;
mod ratfunc;

pub use poly::PolyQ;
pub use polyxy::{PolyXY, RatPolyXY};
pub use rational::{binomial, factorial, Rational};
pub use ratfunc::RatFuncQ;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at q = {at}")]
    Pole { at: String },
    #[error("not a rational: {0:?} (expected `a` or `a/b`)")]
    BadRational(String),
}

/// [n]_q = 1 + q + ... + q^{n-1}; the empty sum is 0. Equals
/// (1 - q^n)/(1 - q) after clearing the denominator.
pub fn qbracket(n: u64) -> PolyQ {
    PolyQ::new(vec![Rational::one(); n as usize])
}

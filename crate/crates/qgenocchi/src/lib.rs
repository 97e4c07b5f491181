//! Exact-arithmetic laboratory for q-Genocchi numbers and polynomials.
//!
//! The family is defined by the generating function
//! `2t/(q e^t + 1) * e^{xt} = Σ G_{n,q}(x) t^n/n!`, equivalently by the
//! umbral recurrence `G_{0,q} = 0`, `q (G_q + 1)^n + G_{n,q} = 2 [n = 1]`
//! with `G_q^k` replaced by `G_{k,q}`. This crate computes the family two
//! independent ways, symbolically audits a catalog of summation,
//! reflection, distribution, and interpolation identities it satisfies
//! (including corrected variants of identities that fail as commonly
//! stated), and validates the fermionic p-adic and contour-integral
//! representations at finite truncation.
//!
//! * [`algebra`] — exact rationals, Q(q), and Q(q)[x, y].
//! * [`series`] — truncated power series in t; the generating-function
//!   oracle, independent of the recurrence.
//! * [`genocchi`] — the umbral recurrence; system-of-record values.
//! * [`audit`] — per-identity symbolic residuals and verdicts.
//! * [`padic`] — alternating partial Riemann sums and valuation growth.
//! * [`analytic`] — q-Zeta series, exact negative-integer values, contour
//!   quadrature, derivative limits.

pub mod algebra;
pub mod analytic;
pub mod audit;
pub mod genocchi;
pub mod padic;
pub mod series;

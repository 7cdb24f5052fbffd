//! Exact scalar arithmetic: big rationals, univariate polynomials over them,
//! and truncated power series whose coefficients are polynomials in `t`.
//!
//! Nothing in this module rounds. Rationals stay in lowest terms, polynomial
//! coefficients are exact, and series arithmetic is exact modulo the
//! truncation order.

mod poly;
mod rat;
mod series;

pub use poly::Poly;
pub use rat::Rat;
pub use series::{binomial_series, Series};

//! Exact classification of totally positive and totally nonnegative matrices.
//!
//! Everything here computes with arbitrary-precision rationals (or polynomials
//! over them), so every reported minor, witness, and sign is certified rather
//! than floating-point approximate. The main entry points:
//!
//! - [`classify::classify_brute`] finds the largest `r` such that a matrix is
//!   TN_r / TP_r (all minors of size at most `r` nonnegative / positive).
//! - [`matrix::Matrix`] is a dense matrix over any exact ring: rationals,
//!   polynomials, or truncated power series with polynomial coefficients.
//! - [`hadamard`] checks closure of Hankel classes under sums, Hadamard
//!   products, and real Hadamard powers.
//! - [`exppoly`] analyzes exponential polynomials `sum c_i b_i^t`, which is
//!   what a fixed minor of an entrywise power `A^{∘t}` looks like as a
//!   function of `t`, with certified sign and root counts.
//! - [`moments`] generates Hankel matrices from discrete Stieltjes measures,
//!   the standard source of guaranteed-TN examples.
//! - [`catalog`] holds a reproducible collection of worked matrices with
//!   machine-checked claims about each.

pub mod catalog;
pub mod classify;
mod error;
pub mod exact;
pub mod exppoly;
pub mod hadamard;
pub mod harness;
pub mod matrix;
pub mod moments;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;

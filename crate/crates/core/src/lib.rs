//! Linear recurrence sequences over exact rings, expressed through partial
//! Bell polynomials.
//!
//! Every recurrence `a_n = c_1 a_{n-1} + ... + c_d a_{n-d}` is a combination
//! of shifts of the INVERT sequence `y` of its coefficients, and
//! `y_n = sum_k (k!/n!) B(n,k)(1! c_1, 2! c_2, ...)`. The crate evaluates
//! these sums exactly, checks them against series arithmetic, and computes
//! self-convolutions `y^(r)` and power sums by several independent routes.
//!
//! All algorithms are generic over [`arith::Ring`], implemented for big
//! integers, big rationals and rational polynomials in one variable.

pub mod arith;
pub mod bell;
pub mod convolve;
mod error;
pub mod linrec;
pub mod parse;
pub mod series;
pub mod symfun;
pub mod verify;

pub use error::{Error, Result};

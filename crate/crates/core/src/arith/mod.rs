//! Exact arithmetic: the [`Ring`] abstraction over big integers, rationals
//! and rational-coefficient polynomials, plus factorials and binomials.

mod combinat;
mod elem;
mod poly;
mod ring;

pub use combinat::{binomial, binomial_i, factorial, falling_ratio, gen_binomial};
pub use elem::{lift_all, Domain, ElemVec, FromElem, RingElem};
pub use poly::Poly;
pub use ring::Ring;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Shorthand for `n/d` as a [`BigRational`]. Panics on a zero denominator.
pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

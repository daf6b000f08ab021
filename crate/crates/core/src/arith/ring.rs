use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact commutative ring used as the coefficient domain of every table,
/// series and sequence in this crate.
///
/// Implemented for [`BigInt`], [`BigRational`] and [`Poly`](super::Poly).
/// Every implementation contains the integers, and supports multiplying by
/// a rational scalar whenever the result is representable in the ring.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
    fn from_integer(n: &BigInt) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_integer(&BigInt::from(n))
    }

    /// `self * q` if the product lives in this ring. For integers this is
    /// `None` exactly when the product is not integral.
    fn scale(&self, q: &BigRational) -> Option<Self>;

    /// Multiplicative inverse, when one exists.
    fn inverse(&self) -> Option<Self>;

    /// Multiply by an integer; always exact.
    fn mul_integer(&self, n: &BigInt) -> Self {
        self.clone() * &Self::from_integer(n)
    }

    fn pow(&self, mut exp: u64) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc *= &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.clone() * &base;
            }
        }
        acc
    }
}

impl Ring for BigInt {
    fn from_integer(n: &BigInt) -> Self {
        n.clone()
    }

    fn scale(&self, q: &BigRational) -> Option<Self> {
        let num = self * q.numer();
        let (quot, rem) = num.div_rem(q.denom());
        rem.is_zero().then_some(quot)
    }

    fn inverse(&self) -> Option<Self> {
        (self.abs().is_one()).then(|| self.clone())
    }

    fn mul_integer(&self, n: &BigInt) -> Self {
        self * n
    }
}

impl Ring for BigRational {
    fn from_integer(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }

    fn scale(&self, q: &BigRational) -> Option<Self> {
        Some(self * q)
    }

    fn inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
}

//! Formal power series truncated after `t^n_max`.

use crate::arith::Ring;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct TruncSeries<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> TruncSeries<R> {
    /// Series with the given leading coefficients, zero-padded or truncated
    /// to exactly `n_max + 1` terms.
    pub fn new(mut coeffs: Vec<R>, n_max: usize) -> Self {
        coeffs.resize(n_max + 1, R::zero());
        TruncSeries { coeffs }
    }

    /// The multiplicative identity `1 + 0 t + ...`.
    pub fn one(n_max: usize) -> Self {
        TruncSeries::new(vec![R::one()], n_max)
    }

    /// `1 - c_1 t - c_2 t^2 - ...`.
    pub fn one_minus(c: &[R], n_max: usize) -> Self {
        let coeffs = std::iter::once(R::one())
            .chain(c.iter().map(|ci| -ci.clone()))
            .collect();
        TruncSeries::new(coeffs, n_max)
    }

    pub fn n_max(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Multiply by `t^shift`, dropping terms past the truncation order.
    pub fn shifted(&self, shift: usize) -> Self {
        let n_max = self.n_max();
        let mut coeffs = vec![R::zero(); shift.min(n_max + 1)];
        coeffs.extend(self.coeffs.iter().take((n_max + 1).saturating_sub(shift)).cloned());
        TruncSeries { coeffs }
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.n_max() != other.n_max() {
            return Err(Error::TruncationMismatch {
                left: self.n_max(),
                right: other.n_max(),
            });
        }
        Ok(())
    }

    /// Cauchy product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let n_max = self.n_max();
        let mut out = vec![R::zero(); n_max + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n_max - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += &(a.clone() * b);
                }
            }
        }
        TruncSeries { coeffs: out }
    }

    /// `1/f` via `y_0 = 1/f_0`, `y_n = -(1/f_0) sum_{i=1}^n f_i y_{n-i}`.
    pub fn recip(&self) -> Result<Self> {
        let inv0 = self.coeffs[0]
            .inverse()
            .ok_or_else(|| Error::NotInvertible(self.coeffs[0].to_string()))?;
        let mut out: Vec<R> = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        for n in 1..=self.n_max() {
            let mut acc = R::zero();
            for i in 1..=n {
                if !self.coeffs[i].is_zero() {
                    acc += &(self.coeffs[i].clone() * &out[n - i]);
                }
            }
            out.push(-(acc * &inv0));
        }
        Ok(TruncSeries { coeffs: out })
    }

    /// `f^r` by binary exponentiation; `f^0` is the identity series.
    pub fn pow(&self, mut r: u32) -> Self {
        let mut acc = TruncSeries::one(self.n_max());
        let mut base = self.clone();
        while r > 0 {
            if r & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            r >>= 1;
            if r > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }
}

pub fn ps_mul<R: Ring>(f: &TruncSeries<R>, g: &TruncSeries<R>) -> Result<TruncSeries<R>> {
    f.mul(g)
}

pub fn ps_recip<R: Ring>(f: &TruncSeries<R>) -> Result<TruncSeries<R>> {
    f.recip()
}

pub fn ps_pow<R: Ring>(f: &TruncSeries<R>, r: u32) -> TruncSeries<R> {
    f.pow(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rational, BigInt, BigRational, Poly};
    use num_traits::{One, Zero};
    use proptest::prelude::*;

    fn s(v: &[i64], n_max: usize) -> TruncSeries<BigInt> {
        TruncSeries::new(v.iter().map(|&i| BigInt::from(i)).collect(), n_max)
    }

    #[test]
    fn mul_examples() {
        assert_eq!(s(&[1, 1], 4).mul(&s(&[1, 1], 4)).unwrap(), s(&[1, 2, 1], 4));
        let f = s(&[3, -1, 4, 1, 5], 4);
        assert_eq!(f.mul(&TruncSeries::one(4)).unwrap(), f);
        // Direct double-sum oracle.
        let a = [1i64, 1, 1, 1];
        let b = [1i64, 2, 3, 4];
        let expect: Vec<i64> = (0..4).map(|n| (0..=n).map(|i| a[i] * b[n - i]).sum()).collect();
        assert_eq!(expect, vec![1, 3, 6, 10]);
        assert_eq!(s(&a, 3).mul(&s(&b, 3)).unwrap(), s(&expect, 3));
    }

    #[test]
    fn mismatched_orders_rejected() {
        assert_eq!(
            s(&[1], 3).mul(&s(&[1], 4)),
            Err(Error::TruncationMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn recip_examples() {
        assert_eq!(s(&[1, -1], 6).recip().unwrap(), s(&[1; 7], 6));
        assert_eq!(s(&[1], 6).recip().unwrap(), s(&[1], 6));
        assert_eq!(s(&[1, -1, -1], 7).recip().unwrap(), s(&[1, 1, 2, 3, 5, 8, 13, 21], 7));
        assert!(matches!(s(&[2, 1], 3).recip(), Err(Error::NotInvertible(_))));
        assert!(matches!(s(&[0, 1], 3).recip(), Err(Error::NotInvertible(_))));

        let f = TruncSeries::new(vec![Poly::x(), Poly::one()], 3);
        assert!(f.recip().is_err());
        let g = TruncSeries::new(vec![Poly::from_integers([2]), Poly::x()], 3);
        let one = g.mul(&g.recip().unwrap()).unwrap();
        assert_eq!(one, TruncSeries::one(3));
    }

    #[test]
    fn pow_examples() {
        let f = s(&[1, 1, 1, 1, 1, 1], 5);
        assert_eq!(f.pow(0), TruncSeries::one(5));
        assert_eq!(f.pow(1), f);
        assert_eq!(f.pow(2), s(&[1, 2, 3, 4, 5, 6], 5));
    }

    #[test]
    fn shift_pads_and_truncates() {
        assert_eq!(s(&[1, 2, 3], 3).shifted(2), s(&[0, 0, 1, 2], 3));
        assert_eq!(s(&[1, 2, 3], 3).shifted(9), s(&[], 3));
        assert_eq!(s(&[5], 0).shifted(0), s(&[5], 0));
    }

    fn series(n_max: usize) -> impl Strategy<Value = TruncSeries<BigRational>> {
        prop::collection::vec((-9i64..=9, 1i64..=4), n_max + 1)
            .prop_map(move |v| TruncSeries::new(v.into_iter().map(|(a, b)| rational(a, b)).collect(), n_max))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn mul_commutative_associative(f in series(12), g in series(12), h in series(12)) {
            prop_assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
            prop_assert_eq!(f.mul(&g).unwrap().mul(&h).unwrap(), f.mul(&g.mul(&h).unwrap()).unwrap());
        }

        #[test]
        fn recip_is_inverse(f in series(16)) {
            prop_assume!(!f.coeffs()[0].is_zero());
            prop_assert_eq!(f.mul(&f.recip().unwrap()).unwrap(), TruncSeries::one(16));
        }

        #[test]
        fn pow_adds_exponents(f in series(10), r in 0u32..=4, q in 0u32..=4) {
            prop_assert_eq!(f.pow(r + q), f.pow(r).mul(&f.pow(q)).unwrap());
        }
    }
}

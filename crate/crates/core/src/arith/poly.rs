use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Ring;

/// Dense univariate polynomial in `x` with rational coefficients.
///
/// `coeffs[i]` is the coefficient of `x^i`. Trailing zeros are always
/// trimmed, so the zero polynomial has no stored coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigRational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_integers<I: IntoIterator<Item = i64>>(coeffs: I) -> Self {
        Poly::new(
            coeffs
                .into_iter()
                .map(|c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn constant(c: BigRational) -> Self {
        Poly::new(vec![c])
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Poly::from_integers([0, 1])
    }

    /// `c * x^deg`.
    pub fn monomial(c: BigRational, deg: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); deg + 1];
        coeffs[deg] = c;
        Poly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, at: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * at + c)
    }

    fn map_coeffs(&self, f: impl Fn(&BigRational) -> BigRational) -> Poly {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// Human-readable form, highest degree first: `2*x^2 - 1`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match (deg, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}*x")?,
                (_, true) => write!(f, "x^{deg}")?,
                (_, false) => write!(f, "{mag}*x^{deg}")?,
            }
        }
        Ok(())
    }
}

impl Zero for Poly {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for Poly {
    fn one() -> Self {
        Poly::constant(BigRational::one())
    }
}

impl<'a> AddAssign<&'a Poly> for Poly {
    fn add_assign(&mut self, rhs: &'a Poly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigRational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        *self = Poly::new(std::mem::take(&mut self.coeffs));
    }
}

impl<'a> SubAssign<&'a Poly> for Poly {
    fn sub_assign(&mut self, rhs: &'a Poly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigRational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        *self = Poly::new(std::mem::take(&mut self.coeffs));
    }
}

impl<'a> Mul<&'a Poly> for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &'a Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl<'a> MulAssign<&'a Poly> for Poly {
    fn mul_assign(&mut self, rhs: &'a Poly) {
        *self = &*self * rhs;
    }
}

impl<'a> Add<&'a Poly> for Poly {
    type Output = Poly;

    fn add(mut self, rhs: &'a Poly) -> Poly {
        self += rhs;
        self
    }
}

impl<'a> Sub<&'a Poly> for Poly {
    type Output = Poly;

    fn sub(mut self, rhs: &'a Poly) -> Poly {
        self -= rhs;
        self
    }
}

impl<'a> Mul<&'a Poly> for Poly {
    type Output = Poly;

    fn mul(self, rhs: &'a Poly) -> Poly {
        &self * rhs
    }
}

impl Add for Poly {
    type Output = Poly;

    fn add(self, rhs: Poly) -> Poly {
        self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;

    fn sub(self, rhs: Poly) -> Poly {
        self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;

    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        self.map_coeffs(|c| -c)
    }
}

impl Ring for Poly {
    fn from_integer(n: &BigInt) -> Self {
        Poly::constant(BigRational::from_integer(n.clone()))
    }

    fn scale(&self, q: &BigRational) -> Option<Self> {
        Some(self.map_coeffs(|c| c * q))
    }

    fn inverse(&self) -> Option<Self> {
        match self.coeffs.as_slice() {
            [c] => Some(Poly::constant(c.recip())),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn trims_trailing_zeros() {
        let p = Poly::from_integers([1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(Poly::from_integers([0, 0]).is_zero());
        assert_eq!(Poly::from_integers([0, 0]).degree(), None);
        let diff = Poly::from_integers([1, 3]) - Poly::from_integers([0, 3]);
        assert_eq!(diff, Poly::one());
    }

    #[test]
    fn display_orders_by_degree() {
        assert_eq!(Poly::from_integers([-1, 0, 2]).to_string(), "2*x^2 - 1");
        assert_eq!(Poly::from_integers([0, -4, 0, 8]).to_string(), "8*x^3 - 4*x");
        assert_eq!(Poly::x().to_string(), "x");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(Poly::new(vec![q(1, 2), q(-1, 1)]).to_string(), "-x + 1/2");
    }

    #[test]
    fn eval_at_rational_points() {
        let t2 = Poly::from_integers([-1, 0, 2]);
        assert_eq!(t2.eval(&q(1, 2)), q(-1, 2));
        assert_eq!(t2.eval(&q(-3, 2)), q(7, 2));
    }

    #[test]
    fn only_nonzero_constants_invert() {
        assert_eq!(Poly::constant(q(2, 3)).inverse(), Some(Poly::constant(q(3, 2))));
        assert_eq!(Poly::x().inverse(), None);
        assert_eq!(Poly::zero().inverse(), None);
    }

    fn small_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec((-20i64..=20, 1i64..=6), 0..=9).prop_map(|cs| {
            Poly::new(cs.into_iter().map(|(n, d)| q(n, d)).collect())
        })
    }

    proptest! {
        #[test]
        fn mul_commutes_and_distributes(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(b.clone() + &c), &a * &b + &a * &c);
        }

        #[test]
        fn eval_is_a_ring_homomorphism(a in small_poly(), b in small_poly(), n in -5i64..=5, d in 1i64..=4) {
            let at = q(n, d);
            prop_assert_eq!((&a * &b).eval(&at), a.eval(&at) * b.eval(&at));
            prop_assert_eq!((a.clone() - &b).eval(&at), a.eval(&at) - b.eval(&at));
        }
    }
}

//! Partial Bell polynomials `B(n,k)(x1, x2, ...)` evaluated at ring
//! elements, and closed forms for a few sparse argument patterns.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{binomial, binomial_i, factorial, falling_ratio, Ring};
use crate::error::{Error, Result};

/// Triangle of `B(n,k)(x)` for `0 <= k <= n <= n_max`.
///
/// Row `n` holds `n + 1` entries, stored contiguously starting at offset
/// `n (n + 1) / 2`.
#[derive(Debug, Clone, PartialEq)]
pub struct BellTable<R> {
    n_max: usize,
    args: Vec<R>,
    entries: Vec<R>,
    zero: R,
}

#[inline]
fn offset(n: usize, k: usize) -> usize {
    n * (n + 1) / 2 + k
}

impl<R: Ring> BellTable<R> {
    /// Build the triangle from `B(0,0) = 1` using
    /// `B(n,k) = sum_{j=1}^{n-k+1} C(n-1, j-1) x_j B(n-j, k-1)`.
    ///
    /// Arguments past the end of `x` are zero; arguments past `n_max` are
    /// never read and are dropped.
    pub fn new(x: &[R], n_max: usize) -> Self {
        let mut args: Vec<R> = x.iter().take(n_max).cloned().collect();
        args.resize(n_max, R::zero());

        let mut entries = vec![R::zero(); offset(n_max + 1, 0)];
        entries[0] = R::one();
        for n in 1..=n_max {
            // C(n-1, j-1) * x_j, reused across k.
            let weighted: Vec<R> = (1..=n)
                .map(|j| {
                    let x_j = &args[j - 1];
                    if x_j.is_zero() {
                        R::zero()
                    } else {
                        x_j.mul_integer(&binomial((n - 1) as u64, (j - 1) as i64))
                    }
                })
                .collect();
            for k in 1..=n {
                let mut acc = R::zero();
                for j in 1..=n - k + 1 {
                    let w = &weighted[j - 1];
                    let prev = &entries[offset(n - j, k - 1)];
                    if w.is_zero() || prev.is_zero() {
                        continue;
                    }
                    acc += &(w.clone() * prev);
                }
                entries[offset(n, k)] = acc;
            }
        }
        BellTable {
            n_max,
            args,
            entries,
            zero: R::zero(),
        }
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// `x_j` for `j >= 1`; zero for `j = 0` or beyond the stored arguments.
    pub fn arg(&self, j: usize) -> &R {
        match j {
            0 => &self.zero,
            j => self.args.get(j - 1).unwrap_or(&self.zero),
        }
    }

    /// `B(n,k)`, which is zero for `k > n`. Panics if `n > n_max`.
    pub fn entry(&self, n: usize, k: usize) -> &R {
        assert!(n <= self.n_max, "row {n} beyond n_max = {}", self.n_max);
        if k > n {
            &self.zero
        } else {
            &self.entries[offset(n, k)]
        }
    }

    pub fn get(&self, n: usize, k: usize) -> Option<&R> {
        (n <= self.n_max).then(|| self.entry(n, k))
    }

    pub fn row(&self, n: usize) -> &[R] {
        assert!(n <= self.n_max, "row {n} beyond n_max = {}", self.n_max);
        &self.entries[offset(n, 0)..offset(n + 1, 0)]
    }

    /// Check `n B(n,k) = sum_{j=1}^{n-k+1} j C(n,j) x_j B(n-j,k-1)` exactly.
    pub fn check_key_identity(&self, n: usize, k: usize) -> Result<bool> {
        if k == 0 || k > n || n > self.n_max {
            return Err(Error::IndexOutOfRange { n, k, n_max: self.n_max });
        }
        let lhs = self.entry(n, k).mul_integer(&BigInt::from(n));
        let mut rhs = R::zero();
        for j in 1..=n - k + 1 {
            let w = BigInt::from(j) * binomial(n as u64, j as i64);
            rhs += &(self.arg(j).mul_integer(&w) * self.entry(n - j, k - 1));
        }
        Ok(lhs == rhs)
    }
}

/// `(1! c_1, 2! c_2, 3! c_3, ...)`.
pub fn scale_inputs<R: Ring>(c: &[R]) -> Vec<R> {
    c.iter()
        .enumerate()
        .map(|(i, c_j)| c_j.mul_integer(&factorial(i as u64 + 1)))
        .collect()
}

/// `B(n,k)(1! c1, 2! c2, 0, ...) = (n!/k!) C(k, n-k) c1^(2k-n) c2^(n-k)`.
pub fn bell_two_term<R: Ring>(c1: &R, c2: &R, n: usize, k: usize) -> R {
    assert!(k <= n, "bell_two_term needs k <= n");
    let (n, k) = (n as i64, k as i64);
    let choose = binomial(k as u64, n - k);
    if choose.is_zero() {
        return R::zero();
    }
    // C(k, n-k) != 0 forces n-k <= k, so both exponents are non-negative.
    let coeff = falling_ratio(n as u64, k as u64) * choose;
    (c1.pow((2 * k - n) as u64) * &c2.pow((n - k) as u64)).mul_integer(&coeff)
}

/// `B(n,k)(0, 2!, 3!, 0, ...) = (n!/k!) C(k, n-2k)`.
pub fn bell_023(n: usize, k: usize) -> BigInt {
    assert!(k <= n, "bell_023 needs k <= n");
    falling_ratio(n as u64, k as u64) * binomial(k as u64, n as i64 - 2 * k as i64)
}

/// `B(n,k)(1!, 2!, 3!, 0, ...) = (n!/k!) sum_l C(k, k-l) C(k-l, n+l-2k)`.
pub fn bell_123(n: usize, k: usize) -> BigInt {
    assert!(k <= n, "bell_123 needs k <= n");
    let (ni, ki) = (n as i64, k as i64);
    let sum: BigInt = (0..=ki)
        .map(|l| binomial(k as u64, ki - l) * binomial_i(ki - l, ni + l - 2 * ki))
        .sum();
    falling_ratio(n as u64, k as u64) * sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rational, BigRational};
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&i| BigInt::from(i)).collect()
    }

    #[test]
    fn boundary_entries() {
        let x = ints(&[2, 3, 5, 7, 11, 13]);
        let t = BellTable::new(&x, 6);
        assert_eq!(*t.entry(0, 0), BigInt::from(1));
        for n in 1..=6 {
            assert!(t.entry(n, 0).is_zero());
            assert_eq!(*t.entry(n, n), BigInt::from(2).pow(n as u32));
            assert_eq!(t.entry(n, 1), t.arg(n));
            assert!(t.entry(n, n + 1).is_zero());
        }
        assert_eq!(t.row(3).len(), 4);
        assert!(t.get(7, 0).is_none());
    }

    #[test]
    fn stirling_and_small_values() {
        let t = BellTable::new(&ints(&[1, 1, 1, 1]), 4);
        assert_eq!(*t.entry(4, 2), BigInt::from(7));
        let t = BellTable::new(&ints(&[1, 2]), 3);
        assert_eq!(*t.entry(3, 2), BigInt::from(6));
    }

    #[test]
    fn short_args_are_zero_padded() {
        let t = BellTable::new(&ints(&[3]), 5);
        for n in 1..=5 {
            for k in 1..n {
                assert!(t.entry(n, k).is_zero());
            }
            assert_eq!(*t.entry(n, n), BigInt::from(3).pow(n as u32));
        }
    }

    #[test]
    fn key_identity_edges() {
        let t = BellTable::new(&ints(&[1, 1, 1, 1]), 4);
        assert_eq!(t.check_key_identity(4, 2), Ok(true));
        assert_eq!(t.check_key_identity(3, 3), Ok(true));
        assert!(t.check_key_identity(5, 2).is_err());
        assert!(t.check_key_identity(3, 0).is_err());
        assert!(t.check_key_identity(2, 3).is_err());
    }

    #[test]
    fn scale_inputs_examples() {
        assert_eq!(scale_inputs(&ints(&[1, 1, 1])), ints(&[1, 2, 6]));
        assert_eq!(scale_inputs::<BigInt>(&[]), vec![]);
        assert_eq!(scale_inputs(&ints(&[0, 1, 1])), ints(&[0, 2, 6]));
    }

    #[test]
    fn closed_form_examples() {
        let one = BigInt::from(1);
        assert_eq!(bell_two_term(&one, &one, 3, 2), BigInt::from(6));
        assert_eq!(bell_two_term(&one, &one, 4, 2), BigInt::from(12));
        assert_eq!(bell_two_term(&one, &one, 5, 1), BigInt::from(0));
        assert_eq!(bell_023(2, 1), BigInt::from(2));
        assert_eq!(bell_023(1, 1), BigInt::from(0));
        assert_eq!(bell_023(5, 2), BigInt::from(120));
        assert_eq!(bell_123(3, 1), BigInt::from(6));
        assert_eq!(bell_123(7, 7), BigInt::from(1));
        let t = BellTable::new(&ints(&[1, 2, 6]), 4);
        assert_eq!(bell_123(4, 2), *t.entry(4, 2));
    }

    #[test]
    fn closed_forms_match_table_to_30() {
        let c1 = rational(-3, 2);
        let c2 = rational(5, 7);
        let two = BellTable::new(&scale_inputs(&[c1.clone(), c2.clone()]), 30);
        let t023 = BellTable::new(&ints(&[0, 2, 6]), 30);
        let t123 = BellTable::new(&ints(&[1, 2, 6]), 30);
        for n in 0..=30 {
            for k in 0..=n {
                assert_eq!(bell_two_term(&c1, &c2, n, k), *two.entry(n, k), "two-term ({n},{k})");
                assert_eq!(bell_023(n, k), *t023.entry(n, k), "023 ({n},{k})");
                assert_eq!(bell_123(n, k), *t123.entry(n, k), "123 ({n},{k})");
            }
        }
    }

    fn rat() -> impl Strategy<Value = BigRational> {
        (-12i64..=12, 1i64..=5).prop_map(|(n, d)| rational(n, d))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn homogeneity(x in prop::collection::vec(rat(), 1..9), a in rat(), b in rat()) {
            let n_max = 8;
            let base = BellTable::new(&x, n_max);
            let scaled: Vec<BigRational> = x
                .iter()
                .enumerate()
                .map(|(i, xi)| a.clone() * Ring::pow(&b, i as u64 + 1) * xi)
                .collect();
            let t = BellTable::new(&scaled, n_max);
            for n in 0..=n_max {
                for k in 0..=n {
                    let expect = Ring::pow(&a, k as u64) * Ring::pow(&b, n as u64) * base.entry(n, k);
                    prop_assert_eq!(t.entry(n, k), &expect);
                }
            }
        }

        #[test]
        fn key_identity_random(x in prop::collection::vec(rat(), 1..14)) {
            let t = BellTable::new(&x, 14);
            for n in 1..=14 {
                for k in 1..=n {
                    prop_assert!(t.check_key_identity(n, k).unwrap());
                }
            }
        }
    }
}

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `n! / k!` for `k <= n`.
pub fn falling_ratio(n: u64, k: u64) -> BigInt {
    assert!(k <= n, "falling_ratio({n}, {k}) needs k <= n");
    (k + 1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Ordinary binomial coefficient. Zero when `k < 0` or `k > n`, so sums
/// may run over vanishing terms without index bookkeeping.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::from(0);
    }
    let k = (k as u64).min(n - k as u64);
    // Multiplicative formula; each partial quotient is itself a binomial.
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Signed-index convenience for sums whose top index may be computed.
/// Returns zero for a negative top as well.
pub fn binomial_i(n: i64, k: i64) -> BigInt {
    if n < 0 {
        return BigInt::from(0);
    }
    binomial(n as u64, k)
}

/// Generalized binomial `z (z-1) ... (z-k+1) / k!` for any rational `z`.
pub fn gen_binomial(z: &BigRational, k: u64) -> BigRational {
    let mut num = BigRational::one();
    let mut term = z.clone();
    for _ in 0..k {
        num *= &term;
        term -= BigRational::one();
    }
    num / BigRational::from_integer(factorial(k))
}

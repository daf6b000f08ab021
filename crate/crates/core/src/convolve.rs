//! r-fold self-convolutions of INVERT sequences.
//!
//! Three independent routes produce `y^(r)_n = sum_{m_1+...+m_r=n} y_{m_1}...y_{m_r}`:
//! the Cauchy power of `y` ([`conv_direct`]), the closed Bell sum
//! ([`conv_bell`]) and the depth-`d` recurrence
//! `n y^(r)_n = sum_m (n + m(r-1)) c_m y^(r)_{n-m}` ([`conv_thm_recurrence`]).
//! A shift `delta` replaces each factor `y_m` by `y_{m-delta}`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{binomial, binomial_i, factorial, gen_binomial, Ring};
use crate::bell::{scale_inputs, BellTable};
use crate::error::{Error, Result};
use crate::linrec::{first_difference, invert_transform, Method, Seq};
use crate::series::TruncSeries;

#[derive(Debug, Clone, PartialEq)]
pub struct ConvSpec<R> {
    pub c: Vec<R>,
    pub r: u32,
    pub delta: usize,
    pub n_max: usize,
}

impl<R> ConvSpec<R> {
    pub fn new(c: Vec<R>, r: u32, delta: usize, n_max: usize) -> Self {
        ConvSpec { c, r, delta, n_max }
    }
}

fn bell_args<R: Ring>(c: &[R], n_max: usize) -> BellTable<R> {
    BellTable::new(&scale_inputs(&c[..c.len().min(n_max)]), n_max)
}

fn exact_div<R: Ring>(value: R, by: BigInt, what: impl FnOnce() -> String) -> Result<R> {
    value
        .scale(&BigRational::new(BigInt::one(), by))
        .ok_or_else(|| Error::NonIntegral(what()))
}

/// Cauchy power of the (optionally shifted) INVERT sequence. `r = 0` gives
/// the identity series.
pub fn conv_direct<R: Ring>(spec: &ConvSpec<R>) -> Result<Seq<R>> {
    let y = invert_transform(&spec.c, spec.n_max)?.values;
    let factor = TruncSeries::new(y, spec.n_max).shifted(spec.delta);
    Ok(Seq::new(factor.pow(spec.r).into_coeffs(), Method::ConvolutionDirect))
}

/// `y^(r)_n = sum_{k=0}^{m} C(k+r-1, k) (k!/m!) B(m,k)(1! c_1, 2! c_2, ...)`
/// with `m = n - delta r`; zero when `m < 0`.
pub fn conv_bell<R: Ring>(spec: &ConvSpec<R>) -> Result<Seq<R>> {
    if spec.r == 0 {
        return Err(Error::InvalidArgument("the Bell convolution formula needs r >= 1".into()));
    }
    let r = spec.r as u64;
    let shift = spec.delta.saturating_mul(spec.r as usize);
    let table = bell_args(&spec.c, spec.n_max.saturating_sub(shift));
    let values = (0..=spec.n_max)
        .map(|n| {
            let Some(m) = n.checked_sub(shift) else {
                return Ok(R::zero());
            };
            let mut acc = R::zero();
            for k in 0..=m {
                let b = table.entry(m, k);
                if b.is_zero() {
                    continue;
                }
                let w = binomial(k as u64 + r - 1, k as i64) * factorial(k as u64);
                acc += &b.mul_integer(&w);
            }
            exact_div(acc, factorial(m as u64), || format!("y^({r})_{n}: Bell sum / {m}!"))
        })
        .collect::<Result<_>>()?;
    Ok(Seq::new(values, Method::ConvolutionBell))
}

/// `y^(r)_0 = 1`, `n y^(r)_n = sum_{m=1}^n (n + m(r-1)) c_m y^(r)_{n-m}`.
///
/// Each step divides by `n` exactly; over the integers a remainder is a
/// hard [`Error::NonIntegral`].
pub fn conv_thm_recurrence<R: Ring>(spec: &ConvSpec<R>) -> Result<Seq<R>> {
    if spec.r == 0 {
        return Err(Error::InvalidArgument("the convolution recurrence needs r >= 1".into()));
    }
    if spec.delta != 0 {
        return Err(Error::InvalidArgument("the convolution recurrence applies only to delta = 0".into()));
    }
    let r = spec.r as u64;
    let mut values: Vec<R> = Vec::with_capacity(spec.n_max + 1);
    values.push(R::one());
    for n in 1..=spec.n_max {
        let mut rhs = R::zero();
        for (m, c_m) in spec.c.iter().enumerate().take(n).map(|(i, c)| (i + 1, c)) {
            if c_m.is_zero() {
                continue;
            }
            let w = BigInt::from(n as u64 + m as u64 * (r - 1));
            rhs += &(c_m.mul_integer(&w) * &values[n - m]);
        }
        let next = exact_div(rhs, BigInt::from(n), || format!("y^({r})_{n}: right-hand side not divisible by {n}"))?;
        values.push(next);
    }
    Ok(Seq::new(values, Method::ConvolutionRecurrence))
}

/// Run every route applicable to `spec` and return the common result, or
/// [`Error::PathMismatch`].
pub fn conv_all<R: Ring>(spec: &ConvSpec<R>) -> Result<(Seq<R>, Vec<Method>)> {
    let direct = conv_direct(spec)?;
    let mut methods = vec![Method::ConvolutionDirect];
    if spec.r >= 1 {
        let bell = conv_bell(spec)?;
        if let Some(index) = first_difference(&direct.values, &bell.values) {
            return Err(Error::PathMismatch { what: "direct vs Bell convolution", index });
        }
        methods.push(Method::ConvolutionBell);
        if spec.delta == 0 {
            let rec = conv_thm_recurrence(spec)?;
            if let Some(index) = first_difference(&direct.values, &rec.values) {
                return Err(Error::PathMismatch { what: "direct vs recurrence convolution", index });
            }
            methods.push(Method::ConvolutionRecurrence);
        }
    }
    Ok((direct, methods))
}

/// `sum_{m_1+...+m_r=n} P_{m_1}...P_{m_r}` for the Padovan sequence
/// (`P_0 = 1`), as `sum_{l=1}^r C(r,l) sum_k C(k+l-1, k) C(k, n-3l-2k)`.
///
/// The sum starts at `l = 1`, so it omits the `P_0^r` contribution and is
/// only correct for `n >= 1`; at `n = 0` it returns 0 while the convolution
/// is 1.
pub fn padovan_conv_binomial(r: u32, n: usize) -> BigInt {
    assert!(r >= 1, "padovan_conv_binomial needs r >= 1");
    let n = n as i64;
    let mut acc = BigInt::zero();
    for l in 1..=r as i64 {
        let mut inner = BigInt::zero();
        for k in 0..=n - 3 * l {
            let first = binomial((k + l - 1) as u64, k);
            if !first.is_zero() {
                inner += first * binomial_i(k, n - 3 * l - 2 * k);
            }
        }
        acc += binomial(r as u64, l) * inner;
    }
    acc
}

/// Two-parameter family: `y_0 = 1`,
/// `y_n = sum_{k=1}^n C(an + bk, k-1) ((k-1)!/n!) B(n,k)(1! c_1, 2! c_2, ...)`.
#[derive(Debug, Clone, PartialEq)]
pub struct GenFamilySpec<R> {
    pub a: BigRational,
    pub b: BigRational,
    pub c: Vec<R>,
}

/// `factor sum_{k=1}^n C(an + bk + shift, k-1) (k-1)! B(n,k) / n!` for
/// `n >= 1`, and 1 at `n = 0`.
fn genfam_bell_sum<R: Ring>(
    spec: &GenFamilySpec<R>,
    shift: &BigRational,
    factor: &BigInt,
    n_max: usize,
) -> Result<Vec<R>> {
    let table = bell_args(&spec.c, n_max);
    let factor = BigRational::from_integer(factor.clone());
    let mut out = vec![R::one()];
    for n in 1..=n_max {
        let n_q = BigRational::from_integer(BigInt::from(n));
        let weights: Vec<BigRational> = (1..=n)
            .map(|k| {
                let top = &spec.a * &n_q + &spec.b * BigRational::from_integer(BigInt::from(k)) + shift;
                gen_binomial(&top, k as u64 - 1)
                    * BigRational::new(factorial(k as u64 - 1), factorial(n as u64))
                    * &factor
            })
            .collect();
        // Sum over a common denominator so that integer coefficient rings
        // only see a single exact division.
        let denom = weights.iter().fold(BigInt::one(), |l, w| l.lcm(w.denom()));
        let mut acc = R::zero();
        for (k, w) in (1..=n).zip(&weights) {
            let b = table.entry(n, k);
            if !b.is_zero() && !w.is_zero() {
                acc += &b.mul_integer(&(w.numer() * (&denom / w.denom())));
            }
        }
        out.push(exact_div(acc, denom, || format!("family sum at n = {n} leaves the coefficient ring"))?);
    }
    Ok(out)
}

pub fn genfam_seq<R: Ring>(spec: &GenFamilySpec<R>, n_max: usize) -> Result<Seq<R>> {
    let values = genfam_bell_sum(spec, &BigRational::zero(), &BigInt::one(), n_max)?;
    Ok(Seq::new(values, Method::BellFormula))
}

/// Closed form for the r-fold convolution of [`genfam_seq`]:
/// `r sum_{k=1}^n C(an + bk + r - 1, k-1) ((k-1)!/n!) B(n,k)` for `n >= 1`,
/// and 1 at `n = 0`.
pub fn genfam_conv_rhs<R: Ring>(spec: &GenFamilySpec<R>, r: u32, n_max: usize) -> Result<Vec<R>> {
    if r == 0 {
        return Err(Error::InvalidArgument("the family convolution formula needs r >= 1".into()));
    }
    let shift = BigRational::from_integer(BigInt::from(r) - 1);
    genfam_bell_sum(spec, &shift, &BigInt::from(r), n_max)
}

/// Whether the r-fold Cauchy power of [`genfam_seq`] equals
/// [`genfam_conv_rhs`] for every `n <= n_max`.
pub fn genfam_conv_check<R: Ring>(spec: &GenFamilySpec<R>, r: u32, n_max: usize) -> Result<bool> {
    let y = genfam_seq(spec, n_max)?;
    let lhs = TruncSeries::new(y.values, n_max).pow(r);
    let rhs = genfam_conv_rhs(spec, r, n_max)?;
    Ok(lhs.coeffs() == rhs.as_slice())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational;
    use crate::linrec::{eval_recurrence, RecurrenceSpec};

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&i| BigInt::from(i)).collect()
    }

    fn spec(c: &[i64], r: u32, delta: usize, n_max: usize) -> ConvSpec<BigInt> {
        ConvSpec::new(ints(c), r, delta, n_max)
    }

    /// Sum over compositions `m_1 + ... + m_r = n` of `prod f(m_i)`.
    fn compositions(f: &dyn Fn(i64) -> BigInt, r: u32, n: i64) -> BigInt {
        if r == 0 {
            return BigInt::from((n == 0) as i64);
        }
        (0..=n).map(|m| f(m) * compositions(f, r - 1, n - m)).sum()
    }

    #[test]
    fn direct_examples() {
        let y = invert_transform(&ints(&[1, 1]), 8).unwrap().values;
        assert_eq!(conv_direct(&spec(&[1, 1], 1, 0, 8)).unwrap().values, y);
        let sq = conv_direct(&spec(&[1, 1], 2, 0, 6)).unwrap().values;
        let oracle: Vec<BigInt> = (0..=6)
            .map(|n| (0..=n).map(|i| y[i].clone() * &y[n - i]).sum())
            .collect();
        assert_eq!(oracle, ints(&[1, 2, 5, 10, 20, 38, 71]));
        assert_eq!(sq, oracle);
        assert_eq!(conv_direct(&spec(&[1, 1], 0, 0, 4)).unwrap().values, ints(&[1, 0, 0, 0, 0]));
    }

    #[test]
    fn shifted_padovan_matches_composition_sum() {
        // P_{m+1} = y_{m-2}
        let pad = eval_recurrence(&RecurrenceSpec::padovan(), 20).values;
        let f = |m: i64| pad[(m + 1) as usize].clone();
        let direct = conv_direct(&spec(&[0, 1, 1], 2, 2, 14)).unwrap().values;
        for n in 0..=14 {
            assert_eq!(direct[n], compositions(&f, 2, n as i64), "n = {n}");
        }
    }

    #[test]
    fn bell_examples() {
        assert_eq!(conv_bell(&spec(&[4, -2], 3, 0, 0)).unwrap().values, ints(&[1]));
        assert_eq!(conv_bell(&spec(&[1, 1], 2, 0, 3)).unwrap().values[3], BigInt::from(10));
        let shifted = conv_bell(&spec(&[0, 1, 1], 2, 2, 7)).unwrap().values;
        assert_eq!(shifted[7], BigInt::from(2));
        assert_eq!(shifted, conv_direct(&spec(&[0, 1, 1], 2, 2, 7)).unwrap().values);
        assert!(conv_bell(&spec(&[1, 1], 0, 0, 3)).is_err());
    }

    #[test]
    fn shift_past_truncation_is_zero() {
        let s = spec(&[1, 1], 3, 2, 5);
        let expect = ints(&[0, 0, 0, 0, 0, 0]);
        assert_eq!(conv_direct(&s).unwrap().values, expect);
        assert_eq!(conv_bell(&s).unwrap().values, expect);
        assert_eq!(conv_direct(&spec(&[1, 1], 0, 2, 3)).unwrap().values, ints(&[1, 0, 0, 0]));
    }

    #[test]
    fn recurrence_examples() {
        let c = ints(&[2, -1, 3]);
        let r1 = conv_thm_recurrence(&ConvSpec::new(c.clone(), 1, 0, 12)).unwrap();
        assert_eq!(r1.values, invert_transform(&c, 12).unwrap().values);

        let a = conv_thm_recurrence(&spec(&[1, 1], 2, 0, 20)).unwrap().values;
        for n in 2..=20usize {
            let n_i = BigInt::from(n);
            assert_eq!(&n_i * &a[n], (&n_i + 1) * &a[n - 1] + (&n_i + 2) * &a[n - 2]);
        }
        let a = conv_thm_recurrence(&spec(&[1, 1, 1], 2, 0, 20)).unwrap().values;
        for n in 3..=20usize {
            let n_i = BigInt::from(n);
            assert_eq!(
                &n_i * &a[n],
                (&n_i + 1) * &a[n - 1] + (&n_i + 2) * &a[n - 2] + (&n_i + 3) * &a[n - 3]
            );
        }
        assert!(conv_thm_recurrence(&spec(&[1, 1], 2, 1, 5)).is_err());
        assert!(conv_thm_recurrence(&spec(&[1, 1], 0, 0, 5)).is_err());
    }

    #[test]
    fn all_paths_agree_rational() {
        let c = vec![rational(1, 2), rational(-3, 4), rational(2, 5)];
        let (seq, methods) = conv_all(&ConvSpec::new(c, 3, 0, 15)).unwrap();
        assert_eq!(methods.len(), 3);
        assert_eq!(seq.values.len(), 16);
    }

    #[test]
    fn padovan_binomial_valid_from_n_one() {
        let pad = eval_recurrence(&RecurrenceSpec::padovan(), 40).values;
        let f = |m: i64| pad[m as usize].clone();
        assert_eq!(padovan_conv_binomial(1, 5), BigInt::from(1));
        for r in 1..=4 {
            assert_eq!(padovan_conv_binomial(r, 0), BigInt::from(0));
            assert_eq!(compositions(&f, r, 0), BigInt::from(1));
            for n in 1..=30 {
                assert_eq!(padovan_conv_binomial(r, n), compositions(&f, r, n as i64), "r={r}, n={n}");
            }
        }
    }

    #[test]
    fn genfam_reduces_to_invert() {
        let g = GenFamilySpec { a: rational(0, 1), b: rational(1, 1), c: ints(&[1, 1]) };
        assert_eq!(genfam_seq(&g, 8).unwrap().values, ints(&[1, 1, 2, 3, 5, 8, 13, 21, 34]));
        assert!(genfam_conv_check(&g, 2, 12).unwrap());

        let g = GenFamilySpec { a: rational(1, 1), b: rational(0, 1), c: ints(&[1]) };
        assert_eq!(genfam_seq(&g, 5).unwrap().values, ints(&[1, 1, 1, 1, 1, 1]));
        assert!(genfam_conv_check(&g, 3, 10).unwrap());
    }

    #[test]
    fn genfam_examples() {
        let c = vec![rational(1, 1), rational(1, 1)];
        let g = GenFamilySpec { a: rational(1, 1), b: rational(-1, 1), c };
        assert!(genfam_conv_check(&g, 3, 20).unwrap());
        let c = vec![rational(1, 1), rational(0, 1), rational(1, 1)];
        let g = GenFamilySpec { a: rational(1, 2), b: rational(2, 1), c };
        assert!(genfam_conv_check(&g, 2, 16).unwrap());
    }

    #[test]
    fn genfam_check_detects_wrong_rhs() {
        // Perturbing the family changes the left side but not a cached right side.
        let c = vec![rational(1, 1), rational(2, 1)];
        let g = GenFamilySpec { a: rational(2, 1), b: rational(1, 2), c: c.clone() };
        let rhs = genfam_conv_rhs(&g, 2, 10).unwrap();
        let other = GenFamilySpec { a: rational(1, 1), ..g };
        let lhs = TruncSeries::new(genfam_seq(&other, 10).unwrap().values, 10).pow(2);
        assert_ne!(lhs.coeffs(), rhs.as_slice());
    }
}

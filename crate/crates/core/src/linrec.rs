//! Linear recurrences with constant coefficients, the INVERT basis sequence
//! `y` with `sum y_n t^n = 1 / (1 - sum c_n t^n)`, and the decomposition of
//! any recurrence sequence as `a_n = sum_k lambda_k y_{n-k}`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::arith::{binomial, factorial, Poly, Ring};
use crate::bell::{scale_inputs, BellTable};
use crate::error::{Error, Result};
use crate::series::TruncSeries;

/// How a sequence was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    DirectRecurrence,
    BellFormula,
    SeriesReciprocal,
    ClosedForm,
    ConvolutionDirect,
    ConvolutionBell,
    ConvolutionRecurrence,
}

impl Method {
    pub fn tag(self) -> &'static str {
        match self {
            Method::DirectRecurrence => "direct-recurrence",
            Method::BellFormula => "bell-formula",
            Method::SeriesReciprocal => "series-reciprocal",
            Method::ClosedForm => "closed-form",
            Method::ConvolutionDirect => "convolution-direct",
            Method::ConvolutionBell => "convolution-bell",
            Method::ConvolutionRecurrence => "convolution-recurrence",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Prefix `values[0..=n_max]` of a sequence.
#[derive(Debug, Clone, PartialEq)]
pub struct Seq<R> {
    pub values: Vec<R>,
    pub method: Method,
}

impl<R> Seq<R> {
    pub fn new(values: Vec<R>, method: Method) -> Self {
        Seq { values, method }
    }

    pub fn n_max(&self) -> usize {
        self.values.len() - 1
    }

    /// Value at a signed index; `None` below zero or past the prefix.
    pub fn at(&self, n: i64) -> Option<&R> {
        usize::try_from(n).ok().and_then(|n| self.values.get(n))
    }
}

/// `a_n = c_1 a_{n-1} + ... + c_d a_{n-d}` for `n >= d`, with `a_0..a_{d-1}` given.
#[derive(Debug, Clone, PartialEq)]
pub struct RecurrenceSpec<R> {
    coeffs: Vec<R>,
    init: Vec<R>,
}

impl<R: Ring> RecurrenceSpec<R> {
    pub fn new(coeffs: Vec<R>, init: Vec<R>) -> Result<Self> {
        if coeffs.is_empty() || coeffs.len() != init.len() {
            return Err(Error::Arity {
                coeffs: coeffs.len(),
                init: init.len(),
            });
        }
        Ok(RecurrenceSpec { coeffs, init })
    }

    pub fn depth(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn init(&self) -> &[R] {
        &self.init
    }
}

fn int_spec(coeffs: &[i64], init: &[i64]) -> RecurrenceSpec<BigInt> {
    let conv = |v: &[i64]| v.iter().map(|&i| BigInt::from(i)).collect();
    RecurrenceSpec::new(conv(coeffs), conv(init)).expect("fixed arity")
}

impl RecurrenceSpec<BigInt> {
    /// `F_0 = 0, F_1 = 1`.
    pub fn fibonacci() -> Self {
        int_spec(&[1, 1], &[0, 1])
    }

    /// `P_0 = 1, P_1 = P_2 = 0, P_n = P_{n-2} + P_{n-3}`.
    pub fn padovan() -> Self {
        int_spec(&[0, 1, 1], &[1, 0, 0])
    }

    /// `t_0 = t_1 = 0, t_2 = 1`.
    pub fn tribonacci() -> Self {
        int_spec(&[1, 1, 1], &[0, 0, 1])
    }
}

impl<R: Ring> RecurrenceSpec<R> {
    /// `f_0 = 0, f_1 = alpha, f_n = c1 f_{n-1} + c2 f_{n-2}`.
    pub fn generalized_fibonacci(alpha: R, c1: R, c2: R) -> Self {
        RecurrenceSpec::new(vec![c1, c2], vec![R::zero(), alpha]).expect("fixed arity")
    }
}

impl RecurrenceSpec<Poly> {
    /// Chebyshev polynomials of the first kind: `T_0 = 1, T_1 = x`.
    pub fn chebyshev_t() -> Self {
        RecurrenceSpec::new(
            vec![Poly::from_integers([0, 2]), -Poly::from_integers([1])],
            vec![Poly::from_integers([1]), Poly::x()],
        )
        .expect("fixed arity")
    }

    /// Chebyshev polynomials of the second kind: `U_0 = 1, U_1 = 2x`.
    pub fn chebyshev_u() -> Self {
        RecurrenceSpec::new(
            vec![Poly::from_integers([0, 2]), -Poly::from_integers([1])],
            vec![Poly::from_integers([1]), Poly::from_integers([0, 2])],
        )
        .expect("fixed arity")
    }
}

/// `lambda_0 .. lambda_{d-1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Decomposition<R> {
    pub lambdas: Vec<R>,
}

pub fn eval_recurrence<R: Ring>(spec: &RecurrenceSpec<R>, n_max: usize) -> Seq<R> {
    let d = spec.depth();
    let mut values: Vec<R> = spec.init.iter().take(n_max + 1).cloned().collect();
    for n in d..=n_max {
        let mut acc = R::zero();
        for (j, c) in spec.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc += &(c.clone() * &values[n - 1 - j]);
            }
        }
        values.push(acc);
    }
    Seq::new(values, Method::DirectRecurrence)
}

/// Bell route: `y_n = (1/n!) sum_k k! B(n,k)(1! c_1, 2! c_2, ...)`.
///
/// The sum is formed in the ring and divided by `n!` once; for integer
/// coefficients a non-zero remainder is reported as [`Error::NonIntegral`].
pub fn invert_bell<R: Ring>(c: &[R], n_max: usize) -> Result<Vec<R>> {
    let args = scale_inputs(&c[..c.len().min(n_max)]);
    let table = BellTable::new(&args, n_max);
    (0..=n_max)
        .map(|n| {
            let mut acc = R::zero();
            for k in 0..=n {
                let b = table.entry(n, k);
                if !b.is_zero() {
                    acc += &b.mul_integer(&factorial(k as u64));
                }
            }
            let inv = BigRational::new(BigInt::from(1), factorial(n as u64));
            acc.scale(&inv)
                .ok_or_else(|| Error::NonIntegral(format!("y_{n}: {acc} / {n}!")))
        })
        .collect()
}

/// Series route: coefficients of `1 / (1 - sum c_n t^n)`.
pub fn invert_series<R: Ring>(c: &[R], n_max: usize) -> Vec<R> {
    TruncSeries::one_minus(c, n_max)
        .recip()
        .expect("constant term is one")
        .into_coeffs()
}

/// INVERT transform of `c`, computed by both routes. Disagreement is an
/// [`Error::PathMismatch`].
pub fn invert_transform<R: Ring>(c: &[R], n_max: usize) -> Result<Seq<R>> {
    let bell = invert_bell(c, n_max)?;
    let series = invert_series(c, n_max);
    if let Some(index) = first_difference(&bell, &series) {
        return Err(Error::PathMismatch {
            what: "invert transform",
            index,
        });
    }
    Ok(Seq::new(bell, Method::BellFormula))
}

pub(crate) fn first_difference<R: PartialEq>(a: &[R], b: &[R]) -> Option<usize> {
    if a.len() != b.len() {
        return Some(a.len().min(b.len()));
    }
    a.iter().zip(b).position(|(x, y)| x != y)
}

/// `lambda_0 = a_0`, `lambda_n = a_n - sum_{j=1}^n c_j a_{n-j}`.
pub fn decompose<R: Ring>(spec: &RecurrenceSpec<R>) -> Decomposition<R> {
    let a = &spec.init;
    let c = &spec.coeffs;
    let lambdas = (0..spec.depth())
        .map(|n| {
            let mut lambda = a[n].clone();
            for j in 1..=n {
                lambda -= &(c[j - 1].clone() * &a[n - j]);
            }
            lambda
        })
        .collect();
    Decomposition { lambdas }
}

/// `a_n = sum_k lambda_k y_{n-k}` with `y_m = 0` for `m < 0`.
pub fn reconstruct<R: Ring>(decomp: &Decomposition<R>, c: &[R], n_max: usize) -> Result<Seq<R>> {
    let y = invert_transform(c, n_max)?;
    let values = (0..=n_max)
        .map(|n| {
            let mut acc = R::zero();
            for (k, lambda) in decomp.lambdas.iter().enumerate().take(n + 1) {
                if !lambda.is_zero() {
                    acc += &(lambda.clone() * &y.values[n - k]);
                }
            }
            acc
        })
        .collect();
    Ok(Seq::new(values, Method::BellFormula))
}

/// The `d x d` lower unitriangular Toeplitz matrix with first column
/// `(1, y_1, ..., y_{d-1})`; it maps `lambda` to the initial values.
pub fn initial_value_matrix<R: Ring>(y: &[R], d: usize) -> Vec<Vec<R>> {
    (0..d)
        .map(|i| (0..d).map(|j| if j <= i { y[i - j].clone() } else { R::zero() }).collect())
        .collect()
}

/// Inverse of [`initial_value_matrix`]: first column `(1, -c_1, ..., -c_{d-1})`.
pub fn initial_value_matrix_inverse<R: Ring>(c: &[R], d: usize) -> Vec<Vec<R>> {
    (0..d)
        .map(|i| {
            (0..d)
                .map(|j| match i.cmp(&j) {
                    std::cmp::Ordering::Less => R::zero(),
                    std::cmp::Ordering::Equal => R::one(),
                    std::cmp::Ordering::Greater => -c.get(i - j - 1).cloned().unwrap_or_else(R::zero),
                })
                .collect()
        })
        .collect()
}

pub fn mat_vec<R: Ring>(m: &[Vec<R>], v: &[R]) -> Vec<R> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(R::zero(), |acc, (a, b)| acc + &(a.clone() * b))
        })
        .collect()
}

/// `f_n = alpha sum_{j=0}^{n-1} C(n-1-j, j) c1^(n-1-2j) c2^j`.
pub fn fibonacci_closed<R: Ring>(alpha: &R, c1: &R, c2: &R, n: usize) -> R {
    assert!(n >= 1, "fibonacci_closed needs n >= 1");
    let mut acc = R::zero();
    for j in 0..n {
        let choose = binomial((n - 1 - j) as u64, j as i64);
        if choose.is_zero() {
            continue;
        }
        acc += &(c1.pow((n - 1 - 2 * j) as u64) * &c2.pow(j as u64)).mul_integer(&choose);
    }
    alpha.clone() * &acc
}

/// `P_n = sum_{k=0}^{n-3} C(k, n-3-2k)`.
pub fn padovan_closed(n: usize) -> BigInt {
    assert!(n >= 3, "padovan_closed needs n >= 3");
    (0..=n - 3)
        .map(|k| binomial(k as u64, n as i64 - 3 - 2 * k as i64))
        .sum()
}

/// `t_n = sum_{j=0}^{n-2} sum_{k=0}^{j} C(k, j-k) C(j-k, n-2-j)`.
pub fn tribonacci_closed(n: usize) -> BigInt {
    assert!(n >= 2, "tribonacci_closed needs n >= 2");
    let n = n as i64;
    let mut acc = BigInt::zero();
    for j in 0..=n - 2 {
        for k in 0..=j {
            let first = binomial(k as u64, j - k);
            if !first.is_zero() {
                acc += first * binomial((j - k) as u64, n - 2 - j);
            }
        }
    }
    acc
}

/// `T_n(x) = sum_k (-1)^k n/(2(n-k)) C(n-k, k) (2x)^(n-2k)`; `T_0 = 1`.
pub fn chebyshev_t(n: usize) -> Poly {
    if n == 0 {
        return Poly::from_integers([1]);
    }
    let mut acc = Poly::zero();
    for k in 0..=n / 2 {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let weight = BigRational::new(BigInt::from(sign * n as i64), BigInt::from(2 * (n - k) as i64))
            * BigRational::from_integer(binomial((n - k) as u64, k as i64) << (n - 2 * k));
        acc += &Poly::monomial(weight, n - 2 * k);
    }
    acc
}

/// `U_n(x) = sum_k (-1)^k C(n-k, k) (2x)^(n-2k)`; `U_0 = 1`.
pub fn chebyshev_u(n: usize) -> Poly {
    let mut acc = Poly::zero();
    for k in 0..=n / 2 {
        let mut weight = binomial((n - k) as u64, k as i64) << (n - 2 * k);
        if k % 2 == 1 {
            weight = -weight;
        }
        acc += &Poly::monomial(BigRational::from_integer(weight), n - 2 * k);
    }
    acc
}

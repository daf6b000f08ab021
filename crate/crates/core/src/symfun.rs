//! Power sums `s_n = x_1^n + ... + x_d^n` from roots, from Newton's
//! identities, and from the Bell-polynomial Girard-Waring formula.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{factorial, Ring};
use crate::bell::{scale_inputs, BellTable};
use crate::error::{Error, Result};
use crate::linrec::{eval_recurrence, Method, RecurrenceSpec, Seq};

/// `d` variables described by their elementary symmetric functions, and
/// optionally by the roots themselves.
#[derive(Debug, Clone, PartialEq)]
pub struct SymSpec {
    roots: Option<Vec<BigRational>>,
    elems: Vec<BigRational>,
}

impl SymSpec {
    pub fn from_roots(roots: Vec<BigRational>) -> Result<Self> {
        if roots.is_empty() {
            return Err(Error::InvalidArgument("need at least one root".into()));
        }
        let elems = elem_from_roots(&roots);
        Ok(SymSpec { roots: Some(roots), elems })
    }

    pub fn from_elems(elems: Vec<BigRational>) -> Result<Self> {
        if elems.is_empty() {
            return Err(Error::InvalidArgument("need at least one elementary symmetric value".into()));
        }
        Ok(SymSpec { roots: None, elems })
    }

    /// Both descriptions at once; they must agree.
    pub fn with_roots_and_elems(roots: Vec<BigRational>, elems: Vec<BigRational>) -> Result<Self> {
        let spec = SymSpec::from_roots(roots)?;
        if spec.elems != elems {
            return Err(Error::InvalidArgument(
                "elementary symmetric values do not match the roots".into(),
            ));
        }
        Ok(spec)
    }

    pub fn d(&self) -> usize {
        self.elems.len()
    }

    pub fn roots(&self) -> Option<&[BigRational]> {
        self.roots.as_deref()
    }

    pub fn elems(&self) -> &[BigRational] {
        &self.elems
    }
}

/// `e_1..e_d` read off `prod_i (1 + x_i t)`.
pub fn elem_from_roots(roots: &[BigRational]) -> Vec<BigRational> {
    let mut poly = vec![BigRational::one()];
    for x in roots {
        poly.push(BigRational::zero());
        for k in (1..poly.len()).rev() {
            let prev = poly[k - 1].clone();
            poly[k] += prev * x;
        }
    }
    poly.remove(0);
    poly
}

/// `s_n` by raising each root to the `n`th power; `s_0 = d`.
pub fn power_sums_direct(roots: &[BigRational], n_max: usize) -> Seq<BigRational> {
    let mut powers = vec![BigRational::one(); roots.len()];
    let mut values = Vec::with_capacity(n_max + 1);
    for _ in 0..=n_max {
        values.push(powers.iter().sum());
        for (p, x) in powers.iter_mut().zip(roots) {
            *p *= x;
        }
    }
    Seq::new(values, Method::ClosedForm)
}

fn check_d<R>(e: &[R], d: usize) -> Result<()> {
    if d == 0 || e.len() != d {
        return Err(Error::InvalidArgument(format!(
            "expected d = {d} >= 1 elementary symmetric values, got {}",
            e.len()
        )));
    }
    Ok(())
}

/// Recurrence coefficients `c_j = (-1)^(j-1) e_j`.
pub fn signed_coeffs<R: Ring>(e: &[R]) -> Vec<R> {
    e.iter()
        .enumerate()
        .map(|(i, e_j)| if i % 2 == 0 { e_j.clone() } else { -e_j.clone() })
        .collect()
}

/// The power sums as a depth-`d` recurrence: coefficients `c_j` and
/// initial values `s_0 = d`, `s_k = sum_{j<k} c_j s_{k-j} + k c_k`.
pub fn power_sum_spec<R: Ring>(e: &[R], d: usize) -> Result<RecurrenceSpec<R>> {
    check_d(e, d)?;
    let c = signed_coeffs(e);
    let mut init = vec![R::from_i64(d as i64)];
    for k in 1..d {
        let mut s_k = c[k - 1].mul_integer(&BigInt::from(k));
        for j in 1..k {
            s_k += &(c[j - 1].clone() * &init[k - j]);
        }
        init.push(s_k);
    }
    RecurrenceSpec::new(c, init)
}

/// Newton's identities.
pub fn power_sums_newton<R: Ring>(e: &[R], d: usize, n_max: usize) -> Result<Seq<R>> {
    let spec = power_sum_spec(e, d)?;
    Ok(eval_recurrence(&spec, n_max))
}

fn bell_power_sums<R: Ring>(args: &[R], d: usize, n_max: usize, alternate: bool) -> Result<Seq<R>> {
    let table = BellTable::new(&scale_inputs(&args[..args.len().min(n_max)]), n_max);
    let mut values = vec![R::from_i64(d as i64)];
    for n in 1..=n_max {
        let mut acc = R::zero();
        for k in 1..=n {
            let b = table.entry(n, k);
            if b.is_zero() {
                continue;
            }
            let term = b.mul_integer(&factorial(k as u64 - 1));
            if alternate && (n + k) % 2 == 1 {
                acc -= &term;
            } else {
                acc += &term;
            }
        }
        let inv = BigRational::new(BigInt::one(), factorial(n as u64 - 1));
        values.push(
            acc.scale(&inv)
                .ok_or_else(|| Error::NonIntegral(format!("s_{n}: Bell sum / {}!", n - 1)))?,
        );
    }
    Ok(Seq::new(values, Method::BellFormula))
}

/// `s_n = sum_{k=1}^n (-1)^(n+k) ((k-1)!/(n-1)!) B(n,k)(1! e_1, ..., d! e_d, 0, ...)`
/// for `n >= 1`, with `s_0 = d`.
pub fn power_sums_bell<R: Ring>(e: &[R], d: usize, n_max: usize) -> Result<Seq<R>> {
    check_d(e, d)?;
    bell_power_sums(e, d, n_max, true)
}

/// The same sums evaluated before the sign substitution:
/// `sum_k ((k-1)!/(n-1)!) B(n,k)(1! c_1, 2! c_2, ...)` with `c_j = (-1)^(j-1) e_j`.
pub fn power_sums_bell_signed<R: Ring>(e: &[R], d: usize, n_max: usize) -> Result<Seq<R>> {
    check_d(e, d)?;
    bell_power_sums(&signed_coeffs(e), d, n_max, false)
}

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{Poly, Ring};
use crate::error::{Error, Result};

/// Coefficient domains, ordered by inclusion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Domain {
    Integer,
    Rational,
    Poly,
}

impl Domain {
    /// Smallest domain holding every element of every list; integers for
    /// empty input.
    pub fn spanning(lists: &[&[RingElem]]) -> Domain {
        lists
            .iter()
            .flat_map(|l| l.iter())
            .map(RingElem::domain)
            .max()
            .unwrap_or(Domain::Integer)
    }

    pub fn name(self) -> &'static str {
        match self {
            Domain::Integer => "integer",
            Domain::Rational => "rational",
            Domain::Poly => "polynomial",
        }
    }
}

/// A single exact value carrying its domain tag.
///
/// Arithmetic is never performed on mixed tags: callers lift a list of
/// elements into one domain with [`ElemVec::unify`] or [`RingElem::promote`]
/// and then run the generic algorithms on the concrete type.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingElem {
    Integer(BigInt),
    Rational(BigRational),
    Poly(Poly),
}

impl RingElem {
    pub fn domain(&self) -> Domain {
        match self {
            RingElem::Integer(_) => Domain::Integer,
            RingElem::Rational(_) => Domain::Rational,
            RingElem::Poly(_) => Domain::Poly,
        }
    }

    /// Lift into a domain at least as large as the current one.
    pub fn promote(self, target: Domain) -> Result<RingElem> {
        if target < self.domain() {
            return Err(Error::Demotion {
                value: self.to_string(),
                target: target.name(),
            });
        }
        Ok(match (self, target) {
            (v, t) if v.domain() == t => v,
            (RingElem::Integer(n), Domain::Rational) => RingElem::Rational(BigRational::from_integer(n)),
            (RingElem::Integer(n), Domain::Poly) => RingElem::Poly(Poly::from_integer(&n)),
            (RingElem::Rational(q), Domain::Poly) => RingElem::Poly(Poly::constant(q)),
            _ => unreachable!(),
        })
    }

    /// Move to the smallest domain that still holds the value exactly.
    pub fn demote(self) -> RingElem {
        match self {
            RingElem::Poly(p) if p.is_constant() => RingElem::Rational(p.coeff(0)).demote(),
            RingElem::Rational(q) if q.is_integer() => RingElem::Integer(q.to_integer()),
            v => v,
        }
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingElem::Integer(n) => write!(f, "{n}"),
            RingElem::Rational(q) => write!(f, "{q}"),
            RingElem::Poly(p) => write!(f, "{p}"),
        }
    }
}

impl From<BigInt> for RingElem {
    fn from(n: BigInt) -> Self {
        RingElem::Integer(n)
    }
}

impl From<i64> for RingElem {
    fn from(n: i64) -> Self {
        RingElem::Integer(n.into())
    }
}

impl From<BigRational> for RingElem {
    fn from(q: BigRational) -> Self {
        RingElem::Rational(q)
    }
}

impl From<Poly> for RingElem {
    fn from(p: Poly) -> Self {
        RingElem::Poly(p)
    }
}

/// Conversion from a tagged element into a concrete ring type. Fails only
/// when the element's domain is larger than the target's.
pub trait FromElem: Ring {
    const DOMAIN: Domain;

    fn from_elem(e: RingElem) -> Result<Self>;

    fn to_elem(&self) -> RingElem;
}

impl FromElem for BigInt {
    const DOMAIN: Domain = Domain::Integer;

    fn from_elem(e: RingElem) -> Result<Self> {
        match e.promote(Domain::Integer)? {
            RingElem::Integer(n) => Ok(n),
            _ => unreachable!(),
        }
    }

    fn to_elem(&self) -> RingElem {
        RingElem::Integer(self.clone())
    }
}

impl FromElem for BigRational {
    const DOMAIN: Domain = Domain::Rational;

    fn from_elem(e: RingElem) -> Result<Self> {
        match e.promote(Domain::Rational)? {
            RingElem::Rational(q) => Ok(q),
            _ => unreachable!(),
        }
    }

    fn to_elem(&self) -> RingElem {
        RingElem::Rational(self.clone())
    }
}

impl FromElem for Poly {
    const DOMAIN: Domain = Domain::Poly;

    fn from_elem(e: RingElem) -> Result<Self> {
        match e.promote(Domain::Poly)? {
            RingElem::Poly(p) => Ok(p),
            _ => unreachable!(),
        }
    }

    fn to_elem(&self) -> RingElem {
        RingElem::Poly(self.clone())
    }
}

/// Promote every element into the concrete ring `R`.
pub fn lift_all<R: FromElem>(items: &[RingElem]) -> Result<Vec<R>> {
    items.iter().cloned().map(R::from_elem).collect()
}

/// A homogeneous list of values in one domain.
#[derive(Debug, Clone, PartialEq)]
pub enum ElemVec {
    Integer(Vec<BigInt>),
    Rational(Vec<BigRational>),
    Poly(Vec<Poly>),
}

impl ElemVec {
    /// Promote every element of each list to the largest domain present in
    /// any of them. An empty input lands in the integer domain.
    pub fn unify(lists: &[&[RingElem]]) -> Vec<ElemVec> {
        let domain = Domain::spanning(lists);
        lists
            .iter()
            .map(|l| ElemVec::lift(l, domain).expect("target is the maximum domain"))
            .collect()
    }

    pub fn lift(items: &[RingElem], domain: Domain) -> Result<ElemVec> {
        Ok(match domain {
            Domain::Integer => ElemVec::Integer(lift_all(items)?),
            Domain::Rational => ElemVec::Rational(lift_all(items)?),
            Domain::Poly => ElemVec::Poly(lift_all(items)?),
        })
    }

    pub fn domain(&self) -> Domain {
        match self {
            ElemVec::Integer(_) => Domain::Integer,
            ElemVec::Rational(_) => Domain::Rational,
            ElemVec::Poly(_) => Domain::Poly,
        }
    }
}

//! Text grammar for coefficient lists: comma-separated integers or `p/q`
//! rationals, e.g. `1,-2,3/4`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::arith::RingElem;
use crate::error::{Error, Result};

fn parse_err(input: &str, reason: impl Into<String>) -> Error {
    Error::Parse {
        input: input.to_owned(),
        reason: reason.into(),
    }
}

fn parse_int(input: &str, part: &str) -> Result<BigInt> {
    let digits = part.strip_prefix(['+', '-']).unwrap_or(part);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(parse_err(input, "expected an integer or p/q"));
    }
    part.parse::<BigInt>()
        .map_err(|e| parse_err(input, e.to_string()))
}

/// Parse one value. Rationals that reduce to an integer come back in the
/// integer domain.
pub fn parse_value(input: &str) -> Result<RingElem> {
    let s = input.trim();
    match s.split_once('/') {
        None => parse_int(input, s).map(RingElem::Integer),
        Some((num, den)) => {
            let num = parse_int(input, num)?;
            if den.starts_with(['+', '-']) {
                return Err(parse_err(input, "denominator must be unsigned"));
            }
            let den = parse_int(input, den)?;
            if den.is_zero() {
                return Err(parse_err(input, "zero denominator"));
            }
            Ok(RingElem::Rational(BigRational::new(num, den)).demote())
        }
    }
}

/// Parse a comma-separated list. A blank input is the empty list.
pub fn parse_list(input: &str) -> Result<Vec<RingElem>> {
    if input.trim().is_empty() {
        return Ok(Vec::new());
    }
    input.split(',').map(parse_value).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational;
    use proptest::prelude::*;

    #[test]
    fn parses_integers_and_rationals() {
        assert_eq!(parse_value("42").unwrap(), RingElem::from(42));
        assert_eq!(parse_value(" -7 ").unwrap(), RingElem::from(-7));
        assert_eq!(parse_value("+3").unwrap(), RingElem::from(3));
        assert_eq!(parse_value("-3/6").unwrap(), RingElem::Rational(rational(-1, 2)));
        assert_eq!(parse_value("4/2").unwrap(), RingElem::from(2));
    }

    #[test]
    fn rejects_malformed() {
        for bad in ["", "-", "1/0", "1/-2", "1.5", "x", "1/2/3", "--1", "1 2", "0x10", "/3"] {
            assert!(parse_value(bad).is_err(), "{bad:?} should be rejected");
        }
        assert!(parse_list("1,,2").is_err());
        assert!(parse_list("1,").is_err());
    }

    #[test]
    fn lists() {
        assert_eq!(parse_list("").unwrap(), vec![]);
        assert_eq!(
            parse_list("0, 1,1/3").unwrap(),
            vec![RingElem::from(0), RingElem::from(1), RingElem::Rational(rational(1, 3))]
        );
    }

    proptest! {
        #[test]
        fn display_reparses(vals in prop::collection::vec((-10_000i64..10_000, 1i64..500), 0..8)) {
            let elems: Vec<RingElem> = vals
                .iter()
                .map(|&(n, d)| RingElem::Rational(rational(n, d)).demote())
                .collect();
            let text = elems.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
            prop_assert_eq!(parse_list(&text).unwrap(), elems);
        }

        #[test]
        fn never_panics(s in "\\PC{0,40}") {
            let _ = parse_list(&s);
        }
    }
}

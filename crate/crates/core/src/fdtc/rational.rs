use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::Rational;

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// `"p/q"`, or `"p"` for integers.
pub fn format(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse(text: &str) -> Result<Rational> {
    let bad = || Error::Precondition(format!("not a rational number: {text}"));
    let text = text.trim();
    let (p, q) = match text.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (text, "1"),
    };
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

pub fn serialize<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format(r))
}

pub fn serialize_opt<S: Serializer>(r: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_str(&format(r)),
        None => s.serialize_none(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RationalInterval {
    #[serde(serialize_with = "serialize")]
    pub lo: Rational,
    #[serde(serialize_with = "serialize")]
    pub hi: Rational,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl RationalInterval {
    pub fn closed(lo: Rational, hi: Rational) -> RationalInterval {
        assert!(lo <= hi, "empty interval");
        RationalInterval { lo, hi, lo_closed: true, hi_closed: true }
    }

    pub fn point(x: Rational) -> RationalInterval {
        RationalInterval::closed(x.clone(), x)
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &Rational) -> bool {
        let above = if self.lo_closed { *x >= self.lo } else { *x > self.lo };
        let below = if self.hi_closed { *x <= self.hi } else { *x < self.hi };
        above && below
    }
}

impl fmt::Display for RationalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_point() {
            return write!(f, "{{{}}}", format(&self.lo));
        }
        write!(
            f,
            "{}{}, {}{}",
            if self.lo_closed { '[' } else { '(' },
            format(&self.lo),
            format(&self.hi),
            if self.hi_closed { ']' } else { ')' }
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoundedDenominator {
    Unique(Rational),
    Ambiguous(Vec<Rational>),
    Empty,
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_ceil(b)
}

/// Every reduced `p/q` with `q ≤ d` in the interval, ascending.
///
/// Refuses (returns `None`) when there would be more than `limit`
/// candidates, which only happens for intervals far wider than any the
/// engine produces.
pub fn bounded_denominator_candidates(i: &RationalInterval, d: u64, limit: usize) -> Option<Vec<Rational>> {
    let mut out = Vec::new();
    for q in 1..=d {
        let qb = BigInt::from(q);
        let lo = i.lo.clone() * Rational::from_integer(qb.clone());
        let hi = i.hi.clone() * Rational::from_integer(qb.clone());
        let mut p = ceil_div(lo.numer(), lo.denom());
        let top = hi.numer().div_floor(hi.denom());
        if (&top - &p).abs() > BigInt::from(limit as u64) {
            return None;
        }
        while p <= top {
            if p.gcd(&qb).is_one() {
                let r = Rational::new(p.clone(), qb.clone());
                if i.contains(&r) {
                    out.push(r);
                    if out.len() > limit {
                        return None;
                    }
                }
            }
            p += 1;
        }
    }
    out.sort();
    out.dedup();
    Some(out)
}

/// The unique rational with denominator at most `d` in `i`, if there is one.
pub fn unique_bounded_denominator(i: &RationalInterval, d: u64) -> Result<BoundedDenominator> {
    if d == 0 {
        return Err(Error::Precondition("denominator bound must be positive".into()));
    }
    let c = bounded_denominator_candidates(i, d, 1 << 16)
        .ok_or_else(|| Error::Precondition("interval too wide for bounded-denominator search".into()))?;
    Ok(match c.len() {
        0 => BoundedDenominator::Empty,
        1 => BoundedDenominator::Unique(c.into_iter().next().unwrap()),
        _ => BoundedDenominator::Ambiguous(c),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_examples() {
        let i = RationalInterval::closed(ratio(15, 100), ratio(17, 100));
        assert_eq!(unique_bounded_denominator(&i, 6).unwrap(), BoundedDenominator::Unique(ratio(1, 6)));
        let i = RationalInterval::closed(ratio(5, 31), ratio(6, 31));
        assert_eq!(unique_bounded_denominator(&i, 6).unwrap(), BoundedDenominator::Unique(ratio(1, 6)));
        let i = RationalInterval::closed(int(0), int(1));
        assert_eq!(
            unique_bounded_denominator(&i, 2).unwrap(),
            BoundedDenominator::Ambiguous(vec![int(0), ratio(1, 2), int(1)])
        );
        let mut i = RationalInterval::closed(ratio(1, 3), ratio(1, 2));
        i.lo_closed = false;
        i.hi_closed = false;
        assert_eq!(unique_bounded_denominator(&i, 2).unwrap(), BoundedDenominator::Empty);
    }

    #[test]
    fn formatting() {
        assert_eq!(format(&ratio(2, -4)), "-1/2");
        assert_eq!(format(&int(3)), "3");
        assert_eq!(parse(" -3/6 ").unwrap(), ratio(-1, 2));
        assert!(parse("1/0").is_err());
        assert_eq!(RationalInterval::closed(int(0), ratio(1, 2)).to_string(), "[0, 1/2]");
    }
}

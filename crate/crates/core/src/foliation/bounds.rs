//! Estimates of the twist coefficient from hyperbolic points around
//! elliptic points on one binding component.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::FoliationGraph;
use crate::error::{Error, Result};
use crate::fdtc::rational::{self, int, ratio};
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Bounds on `c(φ, C)`.
    Monodromy,
    /// Bounds on `c(φ_L, C)` for a closed braid `L`.
    Braid,
}

impl std::str::FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Mode> {
        match s {
            "monodromy" => Ok(Mode::Monodromy),
            "braid" => Ok(Mode::Braid),
            _ => Err(Error::Precondition(format!("unknown mode {s}"))),
        }
    }
}

/// `lower ≤ c ≤ upper`; a missing end is unbounded.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    #[serde(serialize_with = "rational::serialize_opt")]
    pub lower: Option<Rational>,
    #[serde(serialize_with = "rational::serialize_opt")]
    pub upper: Option<Rational>,
    pub source: String,
    pub assumptions: Vec<String>,
}

impl BoundReport {
    pub fn contains(&self, c: &Rational) -> bool {
        self.lower.as_ref().is_none_or(|l| l <= c) && self.upper.as_ref().is_none_or(|u| c <= u)
    }
}

/// The correction subtracted inside the ceiling: `(n-1)²/4n²` for odd `n`,
/// `(n-2)/4n` for even `n`.
pub fn correction(n: u64) -> Rational {
    let n = n as i64;
    if n % 2 == 1 {
        ratio((n - 1) * (n - 1), 4 * n * n)
    } else {
        ratio(n - 2, 4 * n)
    }
}

/// `(1/m) ⌈x·m/n − correction(n)⌉`.
pub fn ceiling_term(x: u64, n: u64, m: u64) -> Rational {
    let t = ratio((x * m) as i64, n as i64) - correction(n);
    let c = t.numer().div_ceil(t.denom());
    Rational::new(c, BigInt::from(m))
}

/// `inf_{m ≥ 1} ceiling_term(x, n, m)`.
///
/// Over `m = m0 + kq` with `q = n / gcd(x, n)` the ceiling grows by exactly
/// `kqx/n`, so each value is a mediant of `ceiling_term(m0)` and `x/n`;
/// `m = q` itself attains `x/n` (the correction is below 1), hence the
/// infimum is a minimum over one period.
pub fn inf_ceiling(x: u64, n: u64) -> Rational {
    assert!(n > 0, "n must be positive");
    let q = n / x.gcd(&n);
    (1..=q).map(|m| ceiling_term(x, n, m)).min().expect("nonempty period")
}

pub fn inf_ceiling_brute(x: u64, n: u64, m_max: u64) -> Rational {
    (1..=m_max).map(|m| ceiling_term(x, n, m)).min().expect("m_max ≥ 1")
}

fn check_point(g: &FoliationGraph, id: &str, mode: Mode) -> Result<(i8, String, u64, u64, Vec<String>)> {
    let v = g.elliptic_point(id)?;
    let mut assumptions = Vec::new();
    match mode {
        Mode::Monodromy => {
            if !v.strongly_essential {
                return Err(Error::Precondition(format!("{id} is not strongly essential")));
            }
            if v.a_arcs {
                return Err(Error::Precondition(format!("a-arcs end at {id}")));
            }
            assumptions.push(format!("{id} strongly essential (caller-asserted)"));
        }
        Mode::Braid => {
            if !v.essential {
                return Err(Error::Precondition(format!("{id} is not essential")));
            }
            assumptions.push(format!("{id} essential (caller-asserted)"));
        }
    }
    let (mut p, mut n) = (0, 0);
    for h in g.hyperbolic_around(id) {
        match g.hyperbolic_point(h) {
            Some(h) if h.sign > 0 => p += 1,
            Some(_) => n += 1,
            None => {}
        }
    }
    Ok((v.sign, v.binding.clone(), p, n, assumptions))
}

/// Single elliptic point: `[-n, p]` if positive, `[-p, n]` if negative.
pub fn elliptic_point_bounds(g: &FoliationGraph, id: &str, mode: Mode) -> Result<BoundReport> {
    let (sign, binding, p, n, assumptions) = check_point(g, id, mode)?;
    let (lo, hi) = if sign > 0 { (-(n as i64), p as i64) } else { (-(p as i64), n as i64) };
    Ok(BoundReport {
        lower: Some(int(lo)),
        upper: Some(int(hi)),
        source: format!("single-point estimate at {id} on {binding} ({mode:?}, p = {p}, n = {n})"),
        assumptions,
    })
}

fn check_points(g: &FoliationGraph, ids: &[String]) -> Result<String> {
    let first = ids.first().ok_or_else(|| Error::Precondition("no elliptic points given".into()))?;
    let binding = g.elliptic_point(first)?.binding.clone();
    for id in ids {
        if g.elliptic_point(id)?.binding != binding {
            return Err(Error::Precondition("elliptic points lie on different binding components".into()));
        }
    }
    Ok(binding)
}

/// Intersection of the single-point estimates.
pub fn multi_point_bounds(g: &FoliationGraph, ids: &[String], mode: Mode) -> Result<BoundReport> {
    let binding = check_points(g, ids)?;
    let mut lower: Option<Rational> = None;
    let mut upper: Option<Rational> = None;
    let mut assumptions = Vec::new();
    for id in ids {
        let r = elliptic_point_bounds(g, id, mode)?;
        lower = lower.max(r.lower);
        upper = match (upper, r.upper) {
            (None, u) | (u, None) => u,
            (Some(a), Some(b)) => Some(a.min(b)),
        };
        assumptions.extend(r.assumptions);
    }
    if let (Some(l), Some(u)) = (&lower, &upper) {
        if l > u {
            return Err(Error::InconsistentFoliation(format!(
                "estimates on {binding} force [{}, {}]",
                rational::format(l),
                rational::format(u)
            )));
        }
    }
    Ok(BoundReport { lower, upper, source: format!("intersection of single-point estimates on {binding}"), assumptions })
}

/// Joint estimate from `n` same-sign points with `N` negative and `P`
/// positive hyperbolic neighbours in total.
pub fn aggregate_bounds(g: &FoliationGraph, ids: &[String], mode: Mode) -> Result<BoundReport> {
    let binding = check_points(g, ids)?;
    let mut assumptions = Vec::new();
    let mut sign = None;
    for id in ids {
        let (s, _, _, _, a) = check_point(g, id, mode)?;
        if mode == Mode::Monodromy && g.elliptic_point(id)?.a_arcs {
            return Err(Error::Precondition(format!("leaves at {id} must all be b-arcs")));
        }
        if sign.is_some_and(|t| t != s) {
            return Err(Error::Precondition("elliptic points have mixed signs".into()));
        }
        sign = Some(s);
        assumptions.extend(a);
    }
    let around: BTreeSet<&str> = ids.iter().flat_map(|id| g.hyperbolic_around(id)).collect();
    let (mut p, mut nn) = (0u64, 0u64);
    for h in around {
        match g.hyperbolic_point(h) {
            Some(h) if h.sign > 0 => p += 1,
            Some(_) => nn += 1,
            None => {}
        }
    }
    let k = ids.len() as u64;
    let f_minus = inf_ceiling(nn, k);
    let f_plus = inf_ceiling(p, k);
    let (lower, upper) = if sign == Some(-1) { (-f_plus, f_minus) } else { (-f_minus, f_plus) };
    Ok(BoundReport {
        lower: Some(lower),
        upper: Some(upper),
        source: format!("joint estimate over {k} points on {binding} (N = {nn}, P = {p})"),
        assumptions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_infima() {
        assert_eq!(inf_ceiling(2, 1), int(2));
        assert_eq!(inf_ceiling(3, 2), ratio(3, 2));
        assert_eq!(inf_ceiling(2, 3), ratio(2, 3));
        assert_eq!(inf_ceiling(0, 5), int(0));
    }

    #[test]
    fn closed_form_matches_brute_force() {
        for n in 1..=12 {
            for x in 0..=40 {
                assert_eq!(inf_ceiling(x, n), inf_ceiling_brute(x, n, 2000), "x = {x}, n = {n}");
            }
        }
    }
}

//! One-sided criteria on the 3-manifold of an open book (or the complement
//! of a closed braid) in terms of twist coefficients. A criterion either
//! fires and proves its conclusion, or the verdict is `Inconclusive`; no
//! verdict is ever a negative claim.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fdtc::rational::{self, int, ratio};
use crate::foliation::bounds::{inf_ceiling, Mode};
use crate::surface::NtType;
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawAssignment")]
pub struct CoefficientAssignment {
    #[serde(serialize_with = "serialize_coeffs")]
    pub coeffs: BTreeMap<String, Rational>,
    pub mode: Mode,
    pub connected_boundary: bool,
}

fn serialize_coeffs<S: serde::Serializer>(m: &BTreeMap<String, Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeMap;
    let mut map = s.serialize_map(Some(m.len()))?;
    for (k, v) in m {
        map.serialize_entry(k, &rational::format(v))?;
    }
    map.end()
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawValue {
    Int(i64),
    Text(String),
}

#[derive(Deserialize)]
struct RawAssignment {
    coeffs: BTreeMap<String, RawValue>,
    #[serde(default = "default_mode")]
    mode: Mode,
    #[serde(default)]
    connected_boundary: bool,
}

fn default_mode() -> Mode {
    Mode::Monodromy
}

impl TryFrom<RawAssignment> for CoefficientAssignment {
    type Error = Error;
    fn try_from(r: RawAssignment) -> Result<CoefficientAssignment> {
        let coeffs = r
            .coeffs
            .into_iter()
            .map(|(k, v)| {
                let v = match v {
                    RawValue::Int(i) => int(i),
                    RawValue::Text(t) => rational::parse(&t)?,
                };
                Ok((k, v))
            })
            .collect::<Result<_>>()?;
        CoefficientAssignment::new(coeffs, r.mode, r.connected_boundary)
    }
}

impl CoefficientAssignment {
    pub fn new(coeffs: BTreeMap<String, Rational>, mode: Mode, connected_boundary: bool) -> Result<CoefficientAssignment> {
        if coeffs.is_empty() {
            return Err(Error::Precondition("no coefficients given".into()));
        }
        if connected_boundary && coeffs.len() != 1 {
            return Err(Error::Precondition("connected boundary needs exactly one coefficient".into()));
        }
        Ok(CoefficientAssignment { coeffs, mode, connected_boundary })
    }

    pub fn from_pairs(pairs: &[(&str, Rational)], mode: Mode, connected_boundary: bool) -> Result<CoefficientAssignment> {
        CoefficientAssignment::new(pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(), mode, connected_boundary)
    }

    fn all_abs_above(&self, t: &Rational) -> bool {
        self.coeffs.values().all(|c| c.abs() > *t)
    }

    fn connected_abs_above(&self, t: &Rational) -> bool {
        self.connected_boundary && self.all_abs_above(t)
    }

    fn subject(&self) -> &'static str {
        match self.mode {
            Mode::Monodromy => "M",
            Mode::Braid => "M - L",
        }
    }

    fn tag(&self, name: &str) -> String {
        match self.mode {
            Mode::Monodromy => name.to_string(),
            Mode::Braid => format!("braid-complement/{name}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Conclusion {
    Irreducible,
    IrreducibleAndAtoroidal,
    Atoroidal,
    Toroidal,
    Hyperbolic,
    SeifertFibered,
    NotAStabilization,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub conclusion: Conclusion,
    /// The criterion that fired, or the one whose hypothesis failed.
    pub criterion: String,
    pub statement: String,
    /// Inputs taken on trust, or the failed hypotheses when inconclusive.
    pub hypotheses: Vec<String>,
}

impl Verdict {
    fn fired(conclusion: Conclusion, criterion: String, statement: String, hypotheses: Vec<String>) -> Verdict {
        Verdict { conclusion, criterion, statement, hypotheses }
    }

    fn inconclusive(criterion: String, failed: Vec<String>) -> Verdict {
        Verdict {
            conclusion: Conclusion::Inconclusive,
            criterion,
            statement: "no criterion applies".into(),
            hypotheses: failed,
        }
    }
}

pub fn irreducibility_verdict(a: &CoefficientAssignment) -> Verdict {
    let s = a.subject();
    if a.all_abs_above(&int(3)) {
        return Verdict::fired(
            Conclusion::Irreducible,
            a.tag("irreducibility/all-components"),
            format!("{s} is irreducible"),
            vec!["|c| > 3 on every boundary component".into()],
        );
    }
    if a.connected_abs_above(&int(1)) {
        return Verdict::fired(
            Conclusion::Irreducible,
            a.tag("irreducibility/connected"),
            format!("{s} is irreducible"),
            vec!["boundary connected and |c| > 1".into()],
        );
    }
    Verdict::inconclusive(
        a.tag("irreducibility"),
        vec!["some |c| ≤ 3".into(), "boundary not connected or |c| ≤ 1".into()],
    )
}

pub fn atoroidality_verdict(a: &CoefficientAssignment, nt: NtType, tight: bool) -> Verdict {
    let s = a.subject();
    let nt_echo = format!("Nielsen-Thurston type {nt:?} (caller-asserted)");
    if !nt.is_irreducible_type() {
        return Verdict::inconclusive(a.tag("atoroidality"), vec![format!("{nt_echo} is not periodic or pseudo-Anosov")]);
    }
    if a.all_abs_above(&int(4)) || a.connected_abs_above(&int(1)) {
        let why = if a.all_abs_above(&int(4)) { "|c| > 4 on every boundary component" } else { "boundary connected and |c| > 1" };
        return Verdict::fired(
            Conclusion::IrreducibleAndAtoroidal,
            a.tag("atoroidality/irreducible-type"),
            format!("{s} is irreducible and atoroidal"),
            vec![nt_echo, why.into()],
        );
    }
    if tight && a.coeffs.values().all(|c| *c > int(2)) {
        return Verdict::fired(
            Conclusion::Atoroidal,
            a.tag("atoroidality/tight"),
            format!("{s} is atoroidal"),
            vec![nt_echo, "supports a tight contact structure (caller-asserted)".into(), "c > 2 on every boundary component".into()],
        );
    }
    let mut failed = vec!["some |c| ≤ 4 and not (boundary connected with |c| > 1)".to_string()];
    failed.push(if tight { "some c ≤ 2".into() } else { "tightness not asserted".into() });
    Verdict::inconclusive(a.tag("atoroidality"), failed)
}

pub fn geometry_verdict(a: &CoefficientAssignment, nt: NtType) -> Verdict {
    let s = a.subject();
    let nt_echo = format!("Nielsen-Thurston type {nt:?} (caller-asserted)");
    if a.connected_abs_above(&int(1)) || a.all_abs_above(&int(4)) {
        let why = if a.connected_abs_above(&int(1)) { "boundary connected and |c| > 1" } else { "|c| > 4 on every boundary component" };
        let (conclusion, what) = match nt {
            NtType::Reducible => (Conclusion::Toroidal, "toroidal"),
            NtType::PseudoAnosov => (Conclusion::Hyperbolic, "hyperbolic"),
            NtType::Periodic => (Conclusion::SeifertFibered, "Seifert fibered"),
            NtType::Unknown => {
                return Verdict::inconclusive(a.tag("geometry"), vec!["Nielsen-Thurston type unknown".into()]);
            }
        };
        return Verdict::fired(
            conclusion,
            a.tag("geometry/trichotomy"),
            format!("{s} is {what} (and is toroidal, hyperbolic, Seifert fibered exactly when the map is reducible, pseudo-Anosov, periodic)"),
            vec![nt_echo, why.into()],
        );
    }
    if nt == NtType::Periodic && a.coeffs.values().all(|c| !c.is_zero()) {
        return Verdict::fired(
            Conclusion::SeifertFibered,
            a.tag("geometry/periodic-nonzero"),
            format!("{s} is Seifert fibered"),
            vec![nt_echo, "c ≠ 0 on every boundary component".into()],
        );
    }
    Verdict::inconclusive(
        a.tag("geometry"),
        vec!["neither (connected with |c| > 1) nor |c| > 4 everywhere".into(), "not periodic with all c ≠ 0".into()],
    )
}

pub fn stabilization_obstruction(a: &CoefficientAssignment) -> Result<Verdict> {
    if a.mode != Mode::Monodromy {
        return Err(Error::Precondition("stabilization obstruction applies to monodromies only".into()));
    }
    if a.connected_abs_above(&ratio(1, 2)) {
        return Ok(Verdict::fired(
            Conclusion::NotAStabilization,
            "stabilization/connected".into(),
            "the open book is not a positive stabilization".into(),
            vec!["boundary connected and |c| > 1/2".into()],
        ));
    }
    if a.all_abs_above(&int(1)) {
        return Ok(Verdict::fired(
            Conclusion::NotAStabilization,
            "stabilization/all-components".into(),
            "the open book is not a positive stabilization".into(),
            vec!["|c| > 1 on every boundary component".into()],
        ));
    }
    Ok(Verdict::inconclusive(
        "stabilization".into(),
        vec!["some |c| ≤ 1, and not (boundary connected with |c| > 1/2)".into()],
    ))
}

/// An upper bound on `|c|` for some (or, when `connected`, the) boundary
/// component; `strict` for `<`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbsBound {
    #[serde(serialize_with = "rational::serialize")]
    pub bound: Rational,
    pub strict: bool,
    pub connected: bool,
    pub source: String,
}

/// `|c|` bound forced by a closed incompressible genus-`g` surface meeting
/// the binding in `2n` points.
pub fn closed_surface_fdtc_bound(g: u32, n: u64, connected: bool) -> Result<AbsBound> {
    if n == 0 {
        return Err(Error::Precondition("the surface must meet the binding (n ≥ 1)".into()));
    }
    let simple = if connected {
        int(if g == 0 { 1 } else { g as i64 })
    } else if g == 0 {
        int(3)
    } else {
        int(4 + (4 * g as i64 - 4).div_euclid(n as i64))
    };
    if !connected {
        return Ok(AbsBound { bound: simple, strict: false, connected, source: "closed-surface/general".into() });
    }
    // The infimum is only taken for g ≥ 1: at g = 0 it would claim |c| ≤ 0
    // for n = 1, stronger than the stated sphere bound.
    if g == 0 {
        return Ok(AbsBound { bound: simple, strict: false, connected, source: "closed-surface/connected".into() });
    }
    let inf = inf_ceiling(g as u64 + n - 1, n);
    let (bound, source) = if inf < simple {
        (inf, "closed-surface/connected-infimum")
    } else {
        (simple, "closed-surface/connected")
    };
    Ok(AbsBound { bound, strict: false, connected, source: source.into() })
}

/// Inputs on a maximal-Euler-characteristic Seifert surface `F` of a closed
/// braid of index `n` meeting the binding in `k` points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidGenusInputs {
    pub chi: i64,
    #[serde(default)]
    pub k: u64,
    pub braid_index: u64,
    #[serde(default)]
    pub connected_boundary: bool,
}

/// `|c(φ_L, C)|` bound for some `C` (or `∂S` when connected); `None` when no
/// clause applies.
pub fn braid_genus_bounds(i: &BraidGenusInputs) -> Result<Option<AbsBound>> {
    if i.braid_index == 0 {
        return Err(Error::Precondition("braid index must be positive".into()));
    }
    let mut best: Option<AbsBound> = None;
    let mut offer = |b: AbsBound| {
        if best.as_ref().is_none_or(|x| b.bound < x.bound) {
            best = Some(b);
        }
    };
    if i.chi > 0 {
        offer(AbsBound { bound: int(3), strict: false, connected: false, source: "braid-genus/positive-chi".into() });
    }
    if i.chi < 0 {
        if i.k == 0 {
            return Err(Error::Precondition("χ(F) < 0 needs the number k ≥ 1 of binding intersections".into()));
        }
        let k = i.k as i64;
        let a = (-4 * i.chi).div_euclid(k) + 4;
        let b = -i.chi + k;
        offer(AbsBound { bound: int(a.min(b)), strict: false, connected: false, source: "braid-genus/negative-chi".into() });
    }
    if i.connected_boundary && i.chi <= 0 {
        let n = i.braid_index as i64;
        offer(AbsBound { bound: ratio(n - i.chi, n), strict: false, connected: true, source: "braid-genus/connected".into() });
    }
    Ok(best)
}

/// Knot genus from the smallest twist coefficient: `g ≥ ⌈(min|c| − 3)/2⌉`.
pub fn genus_lower_bound(min_abs_c: &Rational) -> u64 {
    let t = (min_abs_c - int(3)) / int(2);
    let c = t.numer().div_ceil(t.denom());
    u64::try_from(c).unwrap_or(0)
}

/// For a braided knot with connected binding: `|c| < 1` if unknotted,
/// else `|c| ≤ 2g`.
pub fn knot_fdtc_bound(genus: u64) -> AbsBound {
    if genus == 0 {
        AbsBound { bound: int(1), strict: true, connected: true, source: "knot-genus/unknot".into() }
    } else {
        AbsBound { bound: int(2 * genus as i64), strict: false, connected: true, source: "knot-genus/positive".into() }
    }
}

#[cfg(test)]
mod tests;

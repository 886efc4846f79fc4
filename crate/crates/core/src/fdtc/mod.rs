//! Fractional Dehn twist coefficients.
//!
//! For an essential arc `γ` from the base point of `C`, the boundary twists
//! `T_C^m(γ)` cut the arcs at that base point into half-open fundamental
//! domains. Locating `φ^N(γ)` among them brackets `c(φ, C)` within `1/N`,
//! and once `N > D(D-1)` the bracket holds exactly one rational of
//! denominator at most `D`.
//!
//! Points are compared by their counter-clockwise key at the base point; a
//! smaller key is further to the right, and `T_C` moves every arc to the
//! right, so keys of `T_C^m(γ)` strictly decrease in `m`.

pub mod rational;

use std::cmp::Ordering;

use rayon::prelude::*;
use serde::Serialize;

use crate::curves::{cmp_points, compare_at_base, enumerate_arcs, ArcClass, Point, Side};
use crate::error::{Error, Result};
use crate::mcg::{apply_arc, describe_arc, puncture_permutation_order, Compiled, LiftedAction, MappingClassWord};
use crate::surface::{admissible_values, NtType, Surface};
use crate::word::{cyclic_canonical, extend_reduced, inverse, Word};
use crate::Rational;
pub use rational::{unique_bounded_denominator, BoundedDenominator, RationalInterval};
use rational::{int, ratio};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Provenance {
    KeyLemma,
    ExactTheorem,
    PeriodicityCorollary,
    TranslationEstimate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FdtcResult {
    #[serde(serialize_with = "rational::serialize_opt")]
    pub value: Option<Rational>,
    pub interval: Option<RationalInterval>,
    pub provenance: Provenance,
    #[serde(rename = "N")]
    pub n: Option<u64>,
    #[serde(rename = "D")]
    pub d: Option<u64>,
    #[serde(rename = "M", skip_serializing_if = "Option::is_none")]
    pub m: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<String>,
    /// Power taken to make a braid fix its punctures.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub period: Option<u64>,
}

impl FdtcResult {
    fn exact(value: Rational, provenance: Provenance) -> FdtcResult {
        FdtcResult { value: Some(value), interval: None, provenance, n: None, d: None, m: None, gamma: None, period: None }
    }

    /// The value if known, else the bracketing interval.
    pub fn interval_hull(&self) -> RationalInterval {
        match (&self.value, &self.interval) {
            (Some(v), _) => RationalInterval::point(v.clone()),
            (None, Some(i)) => i.clone(),
            (None, None) => unreachable!("result without value or interval"),
        }
    }

    fn scaled(mut self, k: u64) -> FdtcResult {
        let k = int(k as i64);
        self.value = self.value.map(|v| v / &k);
        self.interval = self.interval.map(|i| RationalInterval {
            lo: i.lo / &k,
            hi: i.hi / &k,
            lo_closed: i.lo_closed,
            hi_closed: i.hi_closed,
        });
        self
    }
}

#[derive(Clone, Copy, Debug)]
pub struct FdtcOptions {
    /// Largest `N` tried when the first bracket is ambiguous.
    pub max_n: u64,
    /// Length bound for the probe-arc enumeration.
    pub probe_bound: usize,
    /// Longest word prefix tracked when iterating the map.
    pub max_prefix: usize,
}

impl Default for FdtcOptions {
    fn default() -> FdtcOptions {
        FdtcOptions { max_n: 4096, probe_bound: 4, max_prefix: 1 << 18 }
    }
}

/// Where `φ^N(γ)` sits among the `T_C^m(γ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Bracket {
    /// `T_C^m(γ) ≥ φ^N(γ) > T_C^{m+1}(γ)`, with `equal` when the first holds
    /// with equality.
    Exact { m: i64, equal: bool },
    /// Only `m_lo ≤ M ≤ m_hi` could be certified within the prefix budget.
    Coarse { m_lo: i64, m_hi: i64 },
}

struct Probe<'a> {
    s: &'a Surface,
    base: usize,
    gamma: &'a ArcClass,
    /// `T_C^m(γ)` ends at `delta^m · γ · tail^m`.
    delta: Word,
    tail: Word,
}

impl<'a> Probe<'a> {
    fn new(s: &'a Surface, comp: usize, gamma: &'a ArcClass) -> Result<Probe<'a>> {
        if gamma.start != comp {
            return Err(Error::DifferentBase);
        }
        if !gamma.is_essential(s) {
            return Err(Error::InessentialArc);
        }
        let base = s.base_corner(comp);
        let b = s.boundary_word(comp);
        let t = LiftedAction::twist(s, &cyclic_canonical(&b), 1)?;
        // An arc ending on C itself is also wound around C at its far end.
        let far = if s.corner_component(gamma.end.corner) == comp {
            s.ribbon.boundary_word_from(gamma.end.corner)
        } else {
            Vec::new()
        };
        for (delta, tail) in [(b.clone(), inverse(&far)), (inverse(&b), far.clone())] {
            let probe = Probe { s, base, gamma, delta, tail };
            let once = t.apply_point(base, &gamma.end);
            if probe.twisted(1) == once && probe.twisted(2) == t.apply_point(base, &once) {
                return Ok(probe);
            }
        }
        Err(Error::Internal("boundary twist does not act by translation on the probe arc".into()))
    }

    /// Endpoint of `T_C^m(γ)`.
    fn twisted(&self, m: i64) -> Point {
        let (head, tail) = if m >= 0 {
            (self.delta.clone(), self.tail.clone())
        } else {
            (inverse(&self.delta), inverse(&self.tail))
        };
        let k = m.unsigned_abs() as usize;
        let mut w = Vec::with_capacity((head.len() + tail.len()) * k + self.gamma.end.word.len());
        for _ in 0..k {
            extend_reduced(&mut w, &head);
        }
        extend_reduced(&mut w, &self.gamma.end.word);
        for _ in 0..k {
            extend_reduced(&mut w, &tail);
        }
        Point::new(w, self.gamma.end.corner)
    }

    /// Largest `m` in `[-r, r]` with `T_C^m(γ)` weakly left of `x`, clamped
    /// to `-r - 1` or `r` when the answer lies outside.
    fn floor_index(&self, x: &Point, r: i64) -> i64 {
        let left_of_or_at = |m: i64| cmp_points(self.s, self.base, &self.twisted(m), x) != Ordering::Less;
        if !left_of_or_at(-r) {
            return -r - 1;
        }
        if left_of_or_at(r) {
            return r;
        }
        let (mut lo, mut hi) = (-r, r);
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if left_of_or_at(mid) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    }

    /// Truncates `p` to a boundary point at depth `b` bounding it from the
    /// right (`upper` = false) or from the left.
    fn coarsen(&self, p: &Point, b: usize, upper: bool) -> Point {
        if p.word.len() <= b {
            return p.clone();
        }
        let r = &self.s.ribbon;
        let n = r.corners();
        let q = r.pos[p.word[b].out_half_edge()];
        Point::new(p.word[..b].to_vec(), if upper { q } else { (q + n - 1) % n })
    }

    fn bracket(&self, c: &Compiled, n: u64, r: i64, max_prefix: usize) -> Result<Bracket> {
        let mut b = 256usize.min(max_prefix.max(1));
        loop {
            let mut lo = self.gamma.end.clone();
            let mut hi = lo.clone();
            for _ in 0..n {
                if lo == hi {
                    let x = c.apply_point(self.base, &lo);
                    lo = self.coarsen(&x, b, false);
                    hi = self.coarsen(&x, b, true);
                } else {
                    lo = self.coarsen(&c.apply_point(self.base, &lo), b, false);
                    hi = self.coarsen(&c.apply_point(self.base, &hi), b, true);
                }
            }
            if lo == hi {
                let m = self.floor_index(&lo, r);
                if m.abs() >= r {
                    return Err(Error::Internal(format!("twist index out of search range ±{r}")));
                }
                return Ok(Bracket::Exact { m, equal: self.twisted(m) == lo });
            }
            let m_lo = self.floor_index(&hi, r);
            let m_hi = self.floor_index(&lo, r);
            if m_lo == m_hi && m_lo.abs() < r && self.twisted(m_lo) != hi {
                return Ok(Bracket::Exact { m: m_lo, equal: false });
            }
            if b >= max_prefix {
                return Ok(Bracket::Coarse { m_lo, m_hi });
            }
            b = (b * 4).min(max_prefix);
        }
    }
}

fn search_range(w: &MappingClassWord, n: u64) -> i64 {
    let len: i64 = w.gens.iter().map(|g| g.power.abs()).sum();
    2 * n as i64 * (len + 1) + 2
}

fn bracket_interval(b: Bracket, n: u64) -> RationalInterval {
    let n = n as i64;
    match b {
        Bracket::Exact { m, equal: true } => RationalInterval::point(ratio(m, n)),
        Bracket::Exact { m, equal: false } => RationalInterval::closed(ratio(m, n), ratio(m + 1, n)),
        Bracket::Coarse { m_lo, m_hi } => RationalInterval::closed(ratio(m_lo, n), ratio(m_hi + 1, n)),
    }
}

/// `[M/N, (M+1)/N]` from the position of `φ^N(γ)`, collapsed to `{M/N}`
/// when `φ^N(γ) = T_C^M(γ)`.
pub fn key_lemma_interval(
    s: &Surface,
    w: &MappingClassWord,
    label: &str,
    gamma: &ArcClass,
    n: u64,
) -> Result<RationalInterval> {
    key_lemma_interval_with(s, w, label, gamma, n, &FdtcOptions::default())
}

pub fn key_lemma_interval_with(
    s: &Surface,
    w: &MappingClassWord,
    label: &str,
    gamma: &ArcClass,
    n: u64,
    opts: &FdtcOptions,
) -> Result<RationalInterval> {
    if n == 0 {
        return Err(Error::Precondition("N must be positive".into()));
    }
    let comp = s.boundary_component(label)?;
    let probe = Probe::new(s, comp, gamma)?;
    let c = Compiled::new(s, w)?;
    Ok(bracket_interval(probe.bracket(&c, n, search_range(w, n), opts.max_prefix)?, n))
}

/// First essential arc from `comp`, preferring ones that do not end at a
/// puncture.
pub fn default_probe(s: &Surface, comp: usize, bound: usize) -> Option<ArcClass> {
    let arcs = enumerate_arcs(s, comp, bound);
    arcs.iter().find(|a| !s.is_puncture_corner(a.end.corner)).or(arcs.first()).cloned()
}

pub fn fdtc_exact(s: &Surface, w: &MappingClassWord, label: &str) -> Result<FdtcResult> {
    fdtc_exact_with(s, w, label, &FdtcOptions::default())
}

pub fn fdtc_exact_with(s: &Surface, w: &MappingClassWord, label: &str, opts: &FdtcOptions) -> Result<FdtcResult> {
    if w.punctures != s.spec.punctures as usize {
        return Err(Error::SurfaceMismatch);
    }
    let comp = s.boundary_component(label)?;
    if s.is_disc() {
        return Ok(FdtcResult { d: Some(1), ..FdtcResult::exact(int(0), Provenance::ExactTheorem) });
    }
    let gamma = match default_probe(s, comp, opts.probe_bound) {
        Some(g) => g,
        // e.g. a once-punctured disc: the mapping class group is trivial
        None if s.is_degenerate() => return Ok(FdtcResult::exact(int(0), Provenance::ExactTheorem)),
        None => return Err(Error::Internal(format!("no essential arc of length ≤ {} on {label}", opts.probe_bound))),
    };
    let probe = Probe::new(s, comp, &gamma)?;
    let c = Compiled::new(s, w)?;
    let gamma_text = Some(describe_arc(s, &gamma));
    if s.is_degenerate() {
        // Only integral values occur; a single iterate lands on a twist of γ.
        let b = probe.bracket(&c, 1, search_range(w, 1), opts.max_prefix)?;
        let mut res = match b {
            Bracket::Exact { m, equal: true } => FdtcResult::exact(int(m), Provenance::PeriodicityCorollary),
            _ => return Err(Error::Internal("annulus map is not a boundary twist power".into())),
        };
        res.n = Some(1);
        res.d = Some(1);
        res.gamma = gamma_text;
        return Ok(res);
    }
    let d = admissible_values(&s.spec, NtType::Unknown)?.max;
    let mut n = d * (d - 1) + 1;
    loop {
        let b = probe.bracket(&c, n, search_range(w, n), opts.max_prefix)?;
        let interval = bracket_interval(b, n);
        let m = match b {
            Bracket::Exact { m, .. } => Some(m),
            Bracket::Coarse { .. } => None,
        };
        let base = FdtcResult {
            value: None,
            interval: None,
            provenance: Provenance::KeyLemma,
            n: Some(n),
            d: Some(d),
            m,
            gamma: gamma_text.clone(),
            period: None,
        };
        if let Bracket::Exact { m, equal: true } = b {
            return Ok(FdtcResult { value: Some(ratio(m, n as i64)), provenance: Provenance::PeriodicityCorollary, ..base });
        }
        match unique_bounded_denominator(&interval, d)? {
            BoundedDenominator::Unique(v) => {
                return Ok(FdtcResult { value: Some(v), provenance: Provenance::ExactTheorem, ..base });
            }
            BoundedDenominator::Empty => return Err(Error::Internal(format!("no admissible rational in {interval}"))),
            BoundedDenominator::Ambiguous(_) if m.is_some() && n * 2 <= opts.max_n => n *= 2,
            BoundedDenominator::Ambiguous(_) => return Ok(FdtcResult { interval: Some(interval), ..base }),
        }
    }
}

/// `c(φ_L, C) = c(φ_L^m, C) / m` where `φ_L^m` fixes every puncture.
pub fn braid_fdtc(s: &Surface, w: &MappingClassWord, label: &str) -> Result<FdtcResult> {
    braid_fdtc_with(s, w, label, &FdtcOptions::default())
}

pub fn braid_fdtc_with(s: &Surface, w: &MappingClassWord, label: &str, opts: &FdtcOptions) -> Result<FdtcResult> {
    if s.spec.punctures == 0 {
        return Err(Error::Precondition("braid FDTC needs a punctured surface".into()));
    }
    s.boundary_component(label)?;
    let m = puncture_permutation_order(w);
    let res = fdtc_exact_with(s, &w.power(m as i64), label, opts)?;
    Ok(FdtcResult { period: Some(m), ..res.scaled(m) })
}

/// `[M(N)/N, (M(N)+1)/N]` for `N = 1..=n_max` with a fixed probe arc.
pub fn translation_estimate(
    s: &Surface,
    w: &MappingClassWord,
    label: &str,
    n_max: u64,
) -> Result<Vec<RationalInterval>> {
    if n_max == 0 {
        return Err(Error::Precondition("N_max must be positive".into()));
    }
    let comp = s.boundary_component(label)?;
    if s.is_disc() {
        return Ok((1..=n_max).map(|_| RationalInterval::point(int(0))).collect());
    }
    let gamma = default_probe(s, comp, FdtcOptions::default().probe_bound)
        .ok_or_else(|| Error::Internal("no essential probe arc".into()))?;
    (1..=n_max).into_par_iter().map(|n| key_lemma_interval(s, w, label, &gamma, n)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum RightVeering {
    /// `c < 0`.
    NonRightVeering {
        #[serde(serialize_with = "rational::serialize")]
        fdtc: Rational,
    },
    /// Pseudo-Anosov (as asserted by the caller) with `c > 0`, or periodic
    /// with `c ≥ 0`; conditional on that assertion.
    RightVeering {
        #[serde(serialize_with = "rational::serialize")]
        fdtc: Rational,
        nt_type: NtType,
    },
    /// An arc moved strictly to the left.
    Witness { arc: String, image: String },
    NoWitnessUpToBound {
        bound: usize,
        #[serde(serialize_with = "rational::serialize_opt")]
        fdtc: Option<Rational>,
    },
}

pub fn right_veering_test(
    s: &Surface,
    w: &MappingClassWord,
    label: &str,
    weight_bound: usize,
    nt: NtType,
) -> Result<RightVeering> {
    let comp = s.boundary_component(label)?;
    let c = fdtc_exact(s, w, label)?;
    if let Some(v) = &c.value {
        let zero = int(0);
        if *v < zero {
            return Ok(RightVeering::NonRightVeering { fdtc: v.clone() });
        }
        if (nt == NtType::PseudoAnosov && *v > zero) || nt == NtType::Periodic {
            return Ok(RightVeering::RightVeering { fdtc: v.clone(), nt_type: nt });
        }
    } else if let Some(i) = &c.interval {
        if i.hi < int(0) {
            return Ok(RightVeering::NonRightVeering { fdtc: i.hi.clone() });
        }
    }
    let compiled = Compiled::new(s, w)?;
    let arcs = enumerate_arcs(s, comp, weight_bound);
    let found = arcs.par_iter().find_first(|a| {
        let img = apply_arc(s, &compiled, a);
        compare_at_base(s, a, &img, comp) == Ok(Side::LeftOf)
    });
    Ok(match found {
        Some(a) => RightVeering::Witness { arc: describe_arc(s, a), image: describe_arc(s, &apply_arc(s, &compiled, a)) },
        None => RightVeering::NoWitnessUpToBound { bound: weight_bound, fdtc: c.value },
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuasimorphismAudit {
    #[serde(serialize_with = "rational::serialize")]
    pub c1: Rational,
    #[serde(serialize_with = "rational::serialize")]
    pub c2: Rational,
    #[serde(serialize_with = "rational::serialize")]
    pub c12: Rational,
    #[serde(serialize_with = "rational::serialize")]
    pub defect: Rational,
    pub defect_ok: bool,
    #[serde(serialize_with = "rational::serialize")]
    pub conjugate: Rational,
    pub conjugation_ok: bool,
}

fn exact_value(s: &Surface, w: &MappingClassWord, label: &str) -> Result<Rational> {
    let r = fdtc_exact(s, w, label)?;
    r.value.clone().ok_or_else(|| Error::Internal(format!("FDTC of {} not resolved: {}", w.label(), r.interval_hull())))
}

/// Defect `|c(w1 w2) - c(w1) - c(w2)| ≤ 1` and `c(w2 w1 w2^{-1}) = c(w1)`.
pub fn quasimorphism_audit(
    s: &Surface,
    w1: &MappingClassWord,
    w2: &MappingClassWord,
    label: &str,
) -> Result<QuasimorphismAudit> {
    if w1.punctures != w2.punctures {
        return Err(Error::SurfaceMismatch);
    }
    let c1 = exact_value(s, w1, label)?;
    let c2 = exact_value(s, w2, label)?;
    let c12 = exact_value(s, &w1.compose(w2), label)?;
    let conjugate = exact_value(s, &w2.compose(w1).compose(&w2.invert()), label)?;
    let defect = num_traits::Signed::abs(&(&c12 - &c1 - &c2));
    Ok(QuasimorphismAudit {
        defect_ok: defect <= int(1),
        conjugation_ok: conjugate == c1,
        c1,
        c2,
        c12,
        defect,
        conjugate,
    })
}

#[cfg(test)]
mod tests;

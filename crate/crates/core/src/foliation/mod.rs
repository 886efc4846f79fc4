//! Abstract open book foliations: singular points, region types and the
//! incidences between them, with consistency checks, singularity-count
//! estimates of the twist coefficient, and overtwisted-disc certificates.
//!
//! Geometric properties (essentiality of b-arcs, c-circles) cannot be read
//! off an abstract graph; they are flags asserted by the caller and echoed
//! in every report that relies on them.

pub mod bounds;
pub mod examples;
pub mod otdisc;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Region {
    Aa,
    Ab,
    Bb,
    Ac,
    Bc,
    Cc,
}

impl Region {
    pub const ALL: [Region; 6] = [Region::Aa, Region::Ab, Region::Bb, Region::Ac, Region::Bc, Region::Cc];

    /// Singular-leaf endpoints of the hyperbolic point, counted with
    /// multiplicity: (positive elliptic, negative elliptic, boundary).
    pub fn composition(self) -> (usize, usize, usize) {
        match self {
            Region::Aa => (2, 0, 2),
            Region::Ab => (2, 1, 1),
            Region::Bb => (2, 2, 0),
            Region::Ac => (1, 0, 1),
            Region::Bc => (1, 1, 0),
            Region::Cc => (0, 0, 0),
        }
    }

    pub fn may_degenerate(self) -> bool {
        matches!(self, Region::Aa | Region::Ac | Region::Bc | Region::Cc)
    }

    pub fn is_tile(self) -> bool {
        matches!(self, Region::Aa | Region::Ab | Region::Bb)
    }

    pub fn has_a_arcs(self) -> bool {
        matches!(self, Region::Aa | Region::Ab | Region::Ac)
    }

    pub fn has_c_circles(self) -> bool {
        matches!(self, Region::Ac | Region::Bc | Region::Cc)
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Region::Aa => "aa",
            Region::Ab => "ab",
            Region::Bb => "bb",
            Region::Ac => "ac",
            Region::Bc => "bc",
            Region::Cc => "cc",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoliatedSurface {
    pub genus: u32,
    pub boundary_count: u32,
    pub closed: bool,
}

impl FoliatedSurface {
    pub fn euler_characteristic(&self) -> i64 {
        2 - 2 * self.genus as i64 - self.boundary_count as i64
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EllipticPoint {
    pub id: String,
    pub sign: i8,
    /// Binding component the point lies on.
    pub binding: String,
    #[serde(default)]
    pub essential: bool,
    #[serde(default)]
    pub strongly_essential: bool,
    /// Whether a-arcs end at this point.
    #[serde(default)]
    pub a_arcs: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HyperbolicPoint {
    pub id: String,
    pub sign: i8,
    pub region: Region,
    #[serde(default)]
    pub degenerated: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoliationGraph {
    pub surface: FoliatedSurface,
    #[serde(default)]
    pub elliptic: Vec<EllipticPoint>,
    #[serde(default)]
    pub hyperbolic: Vec<HyperbolicPoint>,
    /// Ends of singular leaves on the boundary of the foliated surface.
    #[serde(default)]
    pub fake: Vec<String>,
    /// (elliptic or fake id, hyperbolic id), one entry per singular leaf.
    #[serde(default)]
    pub incidence: Vec<(String, String)>,
    #[serde(default)]
    pub c_circles: bool,
    #[serde(default)]
    pub c_circles_essential: bool,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularityCounts {
    pub e_plus: u64,
    pub e_minus: u64,
    pub h_plus: u64,
    pub h_minus: u64,
}

impl SingularityCounts {
    pub fn euler_characteristic(&self) -> i64 {
        (self.e_plus + self.e_minus) as i64 - (self.h_plus + self.h_minus) as i64
    }
}

/// `sl = -(e_+ - e_-) + (h_+ - h_-)`; undefined for closed surfaces.
pub fn self_linking(c: &SingularityCounts, closed: bool) -> Result<i64> {
    if closed {
        return Err(Error::Precondition("sl undefined for a closed surface".into()));
    }
    Ok(-(c.e_plus as i64 - c.e_minus as i64) + (c.h_plus as i64 - c.h_minus as i64))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Vertex<'a> {
    Elliptic(&'a EllipticPoint),
    Fake,
}

impl FoliationGraph {
    pub fn counts(&self) -> SingularityCounts {
        let mut c = SingularityCounts::default();
        for e in &self.elliptic {
            if e.sign > 0 {
                c.e_plus += 1
            } else {
                c.e_minus += 1
            }
        }
        for h in &self.hyperbolic {
            if h.sign > 0 {
                c.h_plus += 1
            } else {
                c.h_minus += 1
            }
        }
        c
    }

    pub fn elliptic_point(&self, id: &str) -> Result<&EllipticPoint> {
        self.elliptic
            .iter()
            .find(|e| e.id == id)
            .ok_or_else(|| Error::Precondition(format!("no elliptic point {id}")))
    }

    pub fn hyperbolic_point(&self, id: &str) -> Option<&HyperbolicPoint> {
        self.hyperbolic.iter().find(|h| h.id == id)
    }

    fn vertex(&self, id: &str) -> Option<Vertex<'_>> {
        if let Some(e) = self.elliptic.iter().find(|e| e.id == id) {
            Some(Vertex::Elliptic(e))
        } else if self.fake.iter().any(|f| f == id) {
            Some(Vertex::Fake)
        } else {
            None
        }
    }

    /// Singular-leaf endpoints of each hyperbolic point, with multiplicity.
    pub fn ends(&self) -> BTreeMap<&str, Vec<&str>> {
        let mut m: BTreeMap<&str, Vec<&str>> = self.hyperbolic.iter().map(|h| (h.id.as_str(), Vec::new())).collect();
        for (v, h) in &self.incidence {
            if let Some(list) = m.get_mut(h.as_str()) {
                list.push(v.as_str());
            }
        }
        m
    }

    /// Distinct hyperbolic points joined to `v` by a singular leaf.
    pub fn hyperbolic_around(&self, v: &str) -> BTreeSet<&str> {
        self.incidence.iter().filter(|(e, _)| e == v).map(|(_, h)| h.as_str()).collect()
    }

    /// Every inconsistency found; empty when the graph is coherent.
    pub fn validate(&self) -> Vec<String> {
        let mut out = Vec::new();
        let s = &self.surface;
        if s.closed != (s.boundary_count == 0) {
            out.push(format!("closed flag {} contradicts boundary count {}", s.closed, s.boundary_count));
        }
        let mut ids = BTreeSet::new();
        for id in self.elliptic.iter().map(|e| &e.id).chain(self.hyperbolic.iter().map(|h| &h.id)).chain(&self.fake) {
            if !ids.insert(id.as_str()) {
                out.push(format!("duplicate id {id}"));
            }
        }
        for e in &self.elliptic {
            if e.sign != 1 && e.sign != -1 {
                out.push(format!("elliptic point {} has sign {}", e.id, e.sign));
            }
            if e.strongly_essential && !e.essential {
                out.push(format!("elliptic point {} is strongly essential but not essential", e.id));
            }
            if e.sign < 0 && e.a_arcs {
                out.push(format!("negative elliptic point {} cannot carry a-arcs", e.id));
            }
        }
        for h in &self.hyperbolic {
            if h.sign != 1 && h.sign != -1 {
                out.push(format!("hyperbolic point {} has sign {}", h.id, h.sign));
            }
            if h.degenerated && !h.region.may_degenerate() {
                out.push(format!("{}-tile {} cannot be degenerated", h.region, h.id));
            }
        }
        for (v, h) in &self.incidence {
            if self.vertex(v).is_none() {
                out.push(format!("incidence names unknown vertex {v}"));
            }
            if self.hyperbolic_point(h).is_none() {
                out.push(format!("incidence names unknown hyperbolic point {h}"));
            }
        }
        let ends = self.ends();
        for h in &self.hyperbolic {
            let mut got = (0, 0, 0);
            for v in &ends[h.id.as_str()] {
                match self.vertex(v) {
                    Some(Vertex::Elliptic(e)) if e.sign > 0 => got.0 += 1,
                    Some(Vertex::Elliptic(_)) => got.1 += 1,
                    Some(Vertex::Fake) => got.2 += 1,
                    None => {}
                }
            }
            let want = h.region.composition();
            if got != want {
                out.push(format!(
                    "{} region {} has (e+, e-, boundary) ends {:?}, expected {:?}",
                    h.region, h.id, got, want
                ));
            }
        }
        for f in &self.fake {
            if !self.incidence.iter().any(|(v, _)| v == f) {
                out.push(format!("fake vertex {f} is not on a singular leaf"));
            }
        }
        if !self.hyperbolic.is_empty() {
            for e in self.elliptic.iter().filter(|e| e.sign > 0) {
                let near_a = self
                    .hyperbolic_around(&e.id)
                    .iter()
                    .any(|h| self.hyperbolic_point(h).is_some_and(|h| h.region.has_a_arcs()));
                if near_a != e.a_arcs {
                    out.push(format!(
                        "positive elliptic point {}: a-arc flag {} but {} a region with a-arcs",
                        e.id,
                        e.a_arcs,
                        if near_a { "borders" } else { "does not border" }
                    ));
                }
            }
            for e in &self.elliptic {
                if self.hyperbolic_around(&e.id).is_empty() {
                    out.push(format!("elliptic point {} meets no singular leaf", e.id));
                }
            }
        }
        if self.hyperbolic.is_empty() {
            // Without hyperbolic points a disc is foliated radially by a-arcs
            // and a sphere by b-arcs.
            for e in self.elliptic.iter().filter(|e| e.sign > 0) {
                if e.a_arcs == s.closed {
                    out.push(format!("positive elliptic point {}: a-arc flag {} on a surface without saddles", e.id, e.a_arcs));
                }
            }
        }
        if self.hyperbolic.iter().any(|h| h.region.has_c_circles()) && !self.c_circles {
            out.push("ac/bc/cc regions present but no c-circles declared".into());
        }
        if self.c_circles_essential && !self.c_circles {
            out.push("c-circles declared essential but absent".into());
        }
        if s.closed {
            if self.elliptic.iter().any(|e| e.a_arcs) || !self.fake.is_empty() {
                out.push("closed surface cannot have a-arcs or boundary ends".into());
            }
            let c = self.counts();
            if c.e_plus != c.e_minus {
                out.push(format!(
                    "algebraic intersection nonzero: closed surface has e+ = {} but e- = {}",
                    c.e_plus, c.e_minus
                ));
            }
        }
        let chi = self.counts().euler_characteristic();
        if chi != s.euler_characteristic() {
            out.push(format!(
                "Euler characteristic mismatch: (e+ + e-) - (h+ + h-) = {chi}, surface has {}",
                s.euler_characteristic()
            ));
        }
        out
    }

    pub fn check(&self) -> Result<()> {
        let v = self.validate();
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::InconsistentFoliation(v.join("; ")))
        }
    }
}

/// A degenerated bc-annulus whose c-circles are essential forces the
/// monodromy to be non-right-veering.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BcWitness {
    pub hyperbolic: String,
    pub conclusion: &'static str,
    pub assumptions: Vec<String>,
}

pub fn bc_annulus_witness(g: &FoliationGraph) -> Option<BcWitness> {
    if !g.c_circles_essential {
        return None;
    }
    g.hyperbolic.iter().find(|h| h.region == Region::Bc && h.degenerated).map(|h| BcWitness {
        hyperbolic: h.id.clone(),
        conclusion: "non-right-veering",
        assumptions: vec!["c-circles are essential (caller-asserted)".into()],
    })
}

/// Reading of the overtwisted complexity `n(S, φ)`, or of an upper bound on it.
pub fn ot_complexity_interpret(n: u64, upper_bound_only: bool) -> String {
    let case = |k: u64| match k {
        0 => "tight, right-veering",
        1 => "overtwisted, not right-veering",
        _ => "overtwisted, right-veering",
    };
    if !upper_bound_only {
        return case(n).into();
    }
    match n {
        0 => case(0).into(),
        1 => format!("{} or {}", case(0), case(1)),
        _ => format!("{}, {} or {}", case(0), case(1), case(2)),
    }
}

#[cfg(test)]
mod tests;

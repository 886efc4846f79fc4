//! Transverse overtwisted discs: `G_{--}` a tree without fake vertices, no
//! c-circles, and `G_{++}` a circle.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::{FoliationGraph, Vertex};

/// Graph with string vertices and a multiset of edges (loops allowed).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SignGraph {
    pub vertices: BTreeSet<String>,
    pub fake: BTreeSet<String>,
    pub edges: Vec<(String, String)>,
}

impl SignGraph {
    fn components(&self) -> usize {
        let idx: BTreeMap<&str, usize> = self.vertices.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let mut parent: Vec<usize> = (0..idx.len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut comps = idx.len();
        for (a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, idx[a.as_str()]), find(&mut parent, idx[b.as_str()]));
            if ra != rb {
                parent[ra] = rb;
                comps -= 1;
            }
        }
        comps
    }

    pub fn is_tree(&self) -> bool {
        !self.vertices.is_empty() && self.edges.len() + 1 == self.vertices.len() && self.components() == 1
    }

    pub fn is_circle(&self) -> bool {
        if self.vertices.is_empty() || self.components() != 1 {
            return false;
        }
        let mut deg: BTreeMap<&str, usize> = self.vertices.iter().map(|v| (v.as_str(), 0)).collect();
        for (a, b) in &self.edges {
            *deg.get_mut(a.as_str()).unwrap() += 1;
            *deg.get_mut(b.as_str()).unwrap() += 1;
        }
        deg.values().all(|&d| d == 2)
    }
}

/// `G_{--}` (`sign` = −1) or `G_{++}` (`sign` = +1): one edge per hyperbolic
/// point of that sign in an aa-, ab- or bb-tile along its unstable
/// separatrices. Around a saddle the positive ends pair up against the
/// negative and boundary ends, so `G_{++}` edges join positive elliptic
/// points while `G_{--}` edges join negative elliptic points and boundary
/// (fake) ends. Vertices are the elliptic points of that sign in those
/// tiles plus the fake ends used.
pub fn sign_graph(g: &FoliationGraph, sign: i8) -> SignGraph {
    let mut out = SignGraph::default();
    let ends = g.ends();
    for h in g.hyperbolic.iter().filter(|h| h.region.is_tile()) {
        let mut joined = Vec::new();
        for v in &ends[h.id.as_str()] {
            match g.vertex(v) {
                Some(Vertex::Elliptic(e)) if e.sign == sign => {
                    out.vertices.insert(e.id.clone());
                    joined.push(e.id.clone());
                }
                Some(Vertex::Fake) if sign < 0 && h.sign < 0 => {
                    out.vertices.insert(v.to_string());
                    out.fake.insert(v.to_string());
                    joined.push(v.to_string());
                }
                _ => {}
            }
        }
        if h.sign == sign && joined.len() == 2 {
            out.edges.push((joined[0].clone(), joined[1].clone()));
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OtDiscReport {
    pub valid: bool,
    pub violations: Vec<String>,
    /// Set when the disc is valid and has exactly one negative elliptic point.
    pub non_right_veering: bool,
    pub assumptions: Vec<String>,
}

pub const TREE_CONDITION: &str = "G-- is not a tree without fake vertices";
pub const C_CIRCLE_CONDITION: &str = "foliation contains c-circles";
pub const CIRCLE_CONDITION: &str = "G++ is not a circle";

pub fn transverse_ot_disc_check(g: &FoliationGraph) -> OtDiscReport {
    let mut violations: Vec<String> = g.validate().into_iter().map(|v| format!("inconsistent data: {v}")).collect();
    let s = &g.surface;
    if s.genus != 0 || s.boundary_count != 1 || s.closed {
        violations.push("surface is not a disc".into());
    }
    let neg = sign_graph(g, -1);
    if !neg.is_tree() || !neg.fake.is_empty() {
        violations.push(TREE_CONDITION.into());
    }
    if g.c_circles {
        violations.push(C_CIRCLE_CONDITION.into());
    }
    if !sign_graph(g, 1).is_circle() {
        violations.push(CIRCLE_CONDITION.into());
    }
    let valid = violations.is_empty();
    OtDiscReport {
        valid,
        non_right_veering: valid && g.counts().e_minus == 1,
        violations,
        assumptions: vec!["boundary is a positive unknot braid (caller-asserted)".into()],
    }
}

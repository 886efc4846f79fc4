//! Arcs and simple closed curves as reduced edge-paths in the rose, their
//! tightening, intersection numbers, and the ordering of arcs at a base point.
//!
//! An arc starting at the base point of a boundary component is recorded by
//! its far endpoint in the universal cover: a tree vertex (a reduced word)
//! and the corner of that vertex the arc ends in. Two arcs are isotopic rel
//! endpoints exactly when these coincide.

pub mod strand;

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::surface::Surface;
use crate::word::{self, cyclic_canonical, is_primitive_cyclic, Letter, Word};
pub use strand::{compare_rays, crossings, Crossing, Strand};

/// A boundary point in the universal cover: corner `corner` of the tree
/// vertex `word`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub word: Word,
    pub corner: usize,
}

impl Point {
    pub fn new(word: Word, corner: usize) -> Point {
        Point { word, corner }
    }
}

/// Arc from the base point of component `start` to `end`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ArcClass {
    pub start: usize,
    pub end: Point,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClosedCurve {
    pub word: Word,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum NormalCoordinates {
    Arc(ArcClass),
    Curve(ClosedCurve),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    RightOf,
    LeftOf,
    Equal,
}

/// Moves a point along its boundary line to the position nearest the root.
/// Two points lie on the same boundary line iff their canonical forms agree.
pub fn canonical_line_point(s: &Surface, p: &Point) -> Point {
    let r = &s.ribbon;
    let mut w = p.word.clone();
    let mut c = p.corner;
    let n = r.corners();
    while let Some(&x) = w.last() {
        let h_in = x.in_half_edge();
        if r.order[c] == h_in {
            c = (r.pos[x.out_half_edge()] + n - 1) % n;
        } else if r.order[(c + 1) % n] == h_in {
            c = r.pos[x.out_half_edge()];
        } else {
            break;
        }
        w.pop();
    }
    Point { word: w, corner: c }
}

/// Counter-clockwise key order of two points seen from base corner `base`.
pub fn cmp_points(s: &Surface, base: usize, p: &Point, q: &Point) -> Ordering {
    let r = &s.ribbon;
    let m = r.slots();
    let common = p.word.iter().zip(&q.word).take_while(|(x, y)| x == y).count();
    let entry = if common == 0 { r.corner_slot(base) } else { r.slot_in(p.word[common - 1]) };
    let slot = |pt: &Point| match pt.word.get(common) {
        Some(&x) => r.slot_out(x),
        None => r.corner_slot(pt.corner),
    };
    let kp = (slot(p) + m - entry) % m;
    let kq = (slot(q) + m - entry) % m;
    kp.cmp(&kq)
}

/// Order of the boundary lines through `p` and `q` (Equal if they share one).
pub fn cmp_lines(s: &Surface, base: usize, p: &Point, q: &Point) -> Ordering {
    let p = canonical_line_point(s, p);
    let q = canonical_line_point(s, q);
    if p == q {
        Ordering::Equal
    } else {
        cmp_points(s, base, &p, &q)
    }
}

fn path_strand<'a>(s: &Surface, start: usize, end: &'a Point) -> Strand<'a> {
    Strand::Path {
        word: &end.word,
        start: s.ribbon.corner_slot(s.base_corner(start)),
        end: s.ribbon.corner_slot(end.corner),
    }
}

impl ArcClass {
    /// Validates and tightens an arc: reduces the path, normalises puncture
    /// endpoints, and checks that it is embedded with distinct endpoints.
    pub fn new(s: &Surface, start: usize, word: Word, corner: usize) -> Result<ArcClass> {
        if s.is_disc() {
            return Err(Error::InvalidArc("the disc has no arcs in this model".into()));
        }
        if start >= s.components.len() || corner >= s.ribbon.corners() {
            return Err(Error::InvalidArc("component or corner out of range".into()));
        }
        let arc = tighten_arc(s, &ArcClass { start, end: Point { word, corner } });
        if arc.end.corner == s.base_corner(start) {
            return Err(Error::InvalidArc("endpoints coincide".into()));
        }
        if !arc.is_simple(s) {
            return Err(Error::InvalidArc("arc is not embedded".into()));
        }
        Ok(arc)
    }

    pub fn base_corner(&self, s: &Surface) -> usize {
        s.base_corner(self.start)
    }

    pub fn weight(&self) -> usize {
        self.end.word.len()
    }

    pub fn end_component(&self, s: &Surface) -> usize {
        s.corner_component(self.end.corner)
    }

    pub fn is_simple(&self, s: &Surface) -> bool {
        let st = path_strand(s, self.start, &self.end);
        crossings(&s.ribbon, &st, &st, true).is_empty()
    }

    /// Essential iff the far endpoint is not on the boundary line through
    /// the starting point.
    pub fn is_essential(&self, s: &Surface) -> bool {
        let root = Point { word: Vec::new(), corner: self.base_corner(s) };
        canonical_line_point(s, &self.end) != root
    }

    pub fn weights(&self, s: &Surface) -> Vec<u64> {
        weights(s, &self.end.word)
    }
}

fn weights(s: &Surface, w: &[Letter]) -> Vec<u64> {
    let mut v = vec![0u64; s.rank()];
    for x in w {
        v[x.gen()] += 1;
    }
    v
}

pub fn tighten_arc(s: &Surface, a: &ArcClass) -> ArcClass {
    let mut end = Point { word: word::reduce(&a.end.word), corner: a.end.corner };
    if s.is_puncture_corner(end.corner) {
        end = canonical_line_point(s, &end);
    }
    ArcClass { start: a.start, end }
}

impl ClosedCurve {
    /// Tightened (cyclically reduced, canonically rotated) simple closed curve.
    pub fn new(s: &Surface, word: &[Letter]) -> Result<ClosedCurve> {
        let w = cyclic_canonical(word);
        if w.is_empty() {
            return Err(Error::InvalidCurve("null-homotopic curve".into()));
        }
        if !is_primitive_cyclic(&w) {
            return Err(Error::InvalidCurve("curve is a proper power".into()));
        }
        let c = ClosedCurve { word: w };
        if !c.is_simple(s) {
            return Err(Error::InvalidCurve(format!("{} is not simple", s.format_word(&c.word))));
        }
        Ok(c)
    }

    pub fn is_simple(&self, s: &Surface) -> bool {
        let st = Strand::Cycle { word: &self.word };
        crossings(&s.ribbon, &st, &st, true).is_empty()
    }

    /// Parallel to a boundary component or a puncture.
    pub fn is_peripheral(&self, s: &Surface) -> bool {
        s.components.iter().enumerate().any(|(i, _)| cyclic_canonical(&s.boundary_word(i)) == self.word)
    }

    pub fn weights(&self, s: &Surface) -> Vec<u64> {
        weights(s, &self.word)
    }
}

impl NormalCoordinates {
    pub fn weights(&self, s: &Surface) -> Vec<u64> {
        match self {
            NormalCoordinates::Arc(a) => a.weights(s),
            NormalCoordinates::Curve(c) => c.weights(s),
        }
    }
}

pub fn tighten(s: &Surface, x: &NormalCoordinates) -> NormalCoordinates {
    match x {
        NormalCoordinates::Arc(a) => NormalCoordinates::Arc(tighten_arc(s, a)),
        NormalCoordinates::Curve(c) => NormalCoordinates::Curve(ClosedCurve { word: cyclic_canonical(&c.word) }),
    }
}

/// Minimal number of interior intersection points.
pub fn geometric_intersection(s: &Surface, x: &NormalCoordinates, y: &NormalCoordinates) -> u64 {
    use NormalCoordinates::*;
    let r = &s.ribbon;
    let count = match (x, y) {
        (Curve(a), Curve(b)) => {
            if cyclic_canonical(&a.word) == cyclic_canonical(&b.word) {
                0
            } else {
                crossings(r, &Strand::Cycle { word: &a.word }, &Strand::Cycle { word: &b.word }, false).len()
            }
        }
        (Arc(a), Curve(c)) | (Curve(c), Arc(a)) => {
            crossings(r, &path_strand(s, a.start, &a.end), &Strand::Cycle { word: &c.word }, false).len()
        }
        (Arc(a), Arc(b)) => {
            let same = a == b;
            crossings(r, &path_strand(s, a.start, &a.end), &path_strand(s, b.start, &b.end), same).len()
                / if same { 2 } else { 1 }
        }
    };
    count as u64
}

/// Ordering of two arcs at their common base point: `RightOf` means `g2`
/// lies strictly to the right of `g1`, i.e. `g1 > g2`.
pub fn compare_at_base(s: &Surface, g1: &ArcClass, g2: &ArcClass, comp: usize) -> Result<Side> {
    if g1.start != comp || g2.start != comp {
        return Err(Error::DifferentBase);
    }
    Ok(side_from_keys(cmp_points(s, s.base_corner(comp), &g1.end, &g2.end)))
}

/// Keys increase counter-clockwise, i.e. towards the left at the base point.
pub fn side_from_keys(o: Ordering) -> Side {
    match o {
        Ordering::Equal => Side::Equal,
        Ordering::Greater => Side::RightOf,
        Ordering::Less => Side::LeftOf,
    }
}

/// All embedded essential arcs from the base point of `comp` whose path has
/// at most `bound` letters, shortest first and then right to left.
pub fn enumerate_arcs(s: &Surface, comp: usize, bound: usize) -> Vec<ArcClass> {
    if s.is_disc() {
        return Vec::new();
    }
    let base = s.base_corner(comp);
    let k = s.rank();
    let mut out: Vec<ArcClass> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut layer: Vec<Word> = vec![Vec::new()];
    for len in 0..=bound {
        let mut batch = Vec::new();
        for w in &layer {
            for corner in 0..s.ribbon.corners() {
                if corner == base {
                    continue;
                }
                let arc = tighten_arc(s, &ArcClass { start: comp, end: Point { word: w.clone(), corner } });
                if arc.end.word.len() != len && !s.is_puncture_corner(corner) {
                    continue;
                }
                if arc.end.corner == base || !arc.is_essential(s) || !arc.is_simple(s) {
                    continue;
                }
                if seen.insert(arc.end.clone()) {
                    batch.push(arc);
                }
            }
        }
        batch.sort_by(|a, b| cmp_points(s, base, &a.end, &b.end));
        out.extend(batch);
        if len == bound {
            break;
        }
        let mut next = Vec::with_capacity(layer.len() * (2 * k).saturating_sub(1));
        for w in &layer {
            for g in 0..k {
                for pos in [true, false] {
                    let x = Letter::new(g, pos);
                    if w.last() == Some(&x.inv()) {
                        continue;
                    }
                    let mut v = w.clone();
                    v.push(x);
                    next.push(v);
                }
            }
        }
        layer = next;
    }
    out
}

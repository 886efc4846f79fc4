use crate::curves::Point;
use crate::error::Result;
use crate::surface::Surface;
use crate::word::{extend_reduced, inverse, push_reduced, reduce, Letter, Word};

use super::twist::twist_point;

/// A mapping class fixing the base point of the first boundary component,
/// lifted to the universal cover: the induced automorphism of the free group
/// together with the images of the corner points at the root vertex.
/// Equivariance then determines the image of every boundary point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftedAction {
    pub gens: Vec<Word>,
    pub corners: Vec<Point>,
}

impl LiftedAction {
    pub fn identity(s: &Surface) -> LiftedAction {
        LiftedAction {
            gens: (0..s.rank()).map(|g| vec![Letter::new(g, true)]).collect(),
            corners: (0..s.ribbon.corners()).map(|c| Point::new(Vec::new(), c)).collect(),
        }
    }

    pub fn twist(s: &Surface, curve: &[Letter], sign: i32) -> Result<LiftedAction> {
        if s.is_disc() {
            return Ok(LiftedAction::identity(s));
        }
        let c0 = s.base_corner(0);
        let gens = (0..s.rank())
            .map(|g| twist_point(s, c0, &Point::new(vec![Letter::new(g, true)], c0), curve, sign).map(|p| p.word))
            .collect::<Result<Vec<_>>>()?;
        let corners = (0..s.ribbon.corners())
            .map(|c| {
                if c == c0 {
                    Ok(Point::new(Vec::new(), c0))
                } else {
                    twist_point(s, c0, &Point::new(Vec::new(), c), curve, sign)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(LiftedAction { gens, corners })
    }

    /// Positive (`sign` = 1) or negative half twist exchanging punctures `i`
    /// and `i + 1` (0-based), supported near the two petals.
    pub fn half_twist(s: &Surface, i: usize, sign: i32) -> LiftedAction {
        let pi = s.puncture_generator(i);
        let pj = s.puncture_generator(i + 1);
        let x = Letter::new(pi, true);
        let y = Letter::new(pj, true);
        let ki = s.base_corner(s.puncture_component(i));
        let kj = s.base_corner(s.puncture_component(i + 1));
        let mut act = LiftedAction::identity(s);
        if sign > 0 {
            act.gens[pi] = vec![x, y, x.inv()];
            act.gens[pj] = vec![x];
            act.corners[ki] = Point::new(vec![x], kj);
            act.corners[kj] = Point::new(Vec::new(), ki);
        } else {
            act.gens[pi] = vec![y];
            act.gens[pj] = vec![y.inv(), x, y];
            act.corners[ki] = Point::new(Vec::new(), kj);
            act.corners[kj] = Point::new(vec![y.inv()], ki);
        }
        // The outer boundary is fixed pointwise.
        let c0 = s.base_corner(0);
        for &c in &s.ribbon.faces[s.components[0].face].corners {
            let path = s.ribbon.boundary_path(c0, c);
            let mut u = inverse(&act.apply_word(&path));
            extend_reduced(&mut u, &path);
            act.corners[c] = Point::new(u, c);
        }
        act
    }

    pub fn apply_word(&self, w: &[Letter]) -> Word {
        let mut out = Vec::with_capacity(w.len() * 2);
        for &x in w {
            let img = &self.gens[x.gen()];
            if x.is_positive() {
                extend_reduced(&mut out, img);
            } else {
                for &y in img.iter().rev() {
                    push_reduced(&mut out, y.inv());
                }
            }
        }
        out
    }

    /// Image of a boundary point under the lift fixing root corner `base`.
    pub fn apply_point(&self, base: usize, p: &Point) -> Point {
        let ub = &self.corners[base].word;
        let target = &self.corners[p.corner];
        let mut out = inverse(ub);
        let img = self.apply_word(&p.word);
        extend_reduced(&mut out, &img);
        extend_reduced(&mut out, &target.word);
        Point::new(out, target.corner)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LiftedAction) -> LiftedAction {
        LiftedAction {
            gens: other.gens.iter().map(|w| self.apply_word(w)).collect(),
            corners: other
                .corners
                .iter()
                .map(|p| {
                    let t = &self.corners[p.corner];
                    let mut w = self.apply_word(&p.word);
                    extend_reduced(&mut w, &t.word);
                    Point::new(reduce(&w), t.corner)
                })
                .collect(),
        }
    }
}

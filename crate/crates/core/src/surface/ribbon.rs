//! One-vertex ribbon graph (a "rose") onto which the surface deformation
//! retracts. Half-edge `2i` is where generator `i` leaves the vertex and
//! `2i+1` where it comes back. Corner `p` sits between the half-edges at
//! cyclic positions `p` and `p+1`.

use crate::word::{Letter, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    /// Corners in the order the boundary walk visits them.
    pub corners: Vec<usize>,
    /// `letters[j]` leads from `corners[j]` to `corners[j+1]`.
    pub letters: Word,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ribbon {
    pub order: Vec<usize>,
    pub pos: Vec<usize>,
    pub faces: Vec<Face>,
    /// corner -> (face, index within face)
    pub corner_face: Vec<(usize, usize)>,
}

impl Ribbon {
    pub fn new(order: Vec<usize>) -> Ribbon {
        let n = order.len();
        let mut pos = vec![usize::MAX; n];
        for (p, &h) in order.iter().enumerate() {
            pos[h] = p;
        }
        debug_assert!(pos.iter().all(|&p| p != usize::MAX));
        let mut rib = Ribbon { order, pos, faces: Vec::new(), corner_face: vec![(usize::MAX, 0); n] };
        for start in 0..n {
            if rib.corner_face[start].0 != usize::MAX {
                continue;
            }
            let fi = rib.faces.len();
            let mut face = Face { corners: Vec::new(), letters: Vec::new() };
            let mut c = start;
            loop {
                rib.corner_face[c] = (fi, face.corners.len());
                face.corners.push(c);
                let (x, next) = rib.step(c);
                face.letters.push(x);
                c = next;
                if c == start {
                    break;
                }
            }
            rib.faces.push(face);
        }
        rib
    }

    pub fn edges(&self) -> usize {
        self.order.len() / 2
    }

    pub fn corners(&self) -> usize {
        self.order.len()
    }

    /// Number of slots around the vertex (half-edges and corners interleaved).
    pub fn slots(&self) -> usize {
        2 * self.order.len()
    }

    pub fn half_edge_slot(&self, h: usize) -> usize {
        2 * self.pos[h]
    }

    pub fn corner_slot(&self, c: usize) -> usize {
        2 * c + 1
    }

    pub fn slot_out(&self, x: Letter) -> usize {
        self.half_edge_slot(x.out_half_edge())
    }

    pub fn slot_in(&self, x: Letter) -> usize {
        self.half_edge_slot(x.in_half_edge())
    }

    /// Boundary walk: from corner `c` leave along the next half-edge.
    pub fn step(&self, c: usize) -> (Letter, usize) {
        let n = self.order.len();
        let h = self.order[(c + 1) % n];
        let x = Letter::leaving(h);
        (x, self.pos[x.in_half_edge()])
    }

    /// Boundary walk backwards: the letter that arrived at corner `c` and
    /// the corner it came from.
    pub fn step_back(&self, c: usize) -> (Letter, usize) {
        let n = self.order.len();
        let h = self.order[c];
        // arriving through h means travelling the letter whose in-half-edge is h
        let x = Letter::leaving(h ^ 1);
        (x, (self.pos[x.out_half_edge()] + n - 1) % n)
    }

    /// Boundary word read from corner `c` once around its face.
    pub fn boundary_word_from(&self, c: usize) -> Word {
        let (f, j) = self.corner_face[c];
        let face = &self.faces[f];
        let m = face.letters.len();
        (0..m).map(|t| face.letters[(j + t) % m]).collect()
    }

    /// Prefix of the boundary walk from `from` to `to` (same face).
    pub fn boundary_path(&self, from: usize, to: usize) -> Word {
        let (f, j) = self.corner_face[from];
        let (g, t) = self.corner_face[to];
        assert_eq!(f, g, "corners on different faces");
        let face = &self.faces[f];
        let m = face.letters.len();
        let len = (t + m - j) % m;
        (0..len).map(|s| face.letters[(j + s) % m]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus_has_one_face() {
        // a+, b+, a-, b-
        let r = Ribbon::new(vec![0, 2, 1, 3]);
        assert_eq!(r.faces.len(), 1);
        assert_eq!(r.faces[0].corners.len(), 4);
        let w = r.boundary_word_from(0);
        let b = Letter::new(1, true);
        let a = Letter::new(0, true);
        assert_eq!(w, vec![b, a, b.inv(), a.inv()]);
    }

    #[test]
    fn step_back_inverts_step() {
        let r = Ribbon::new(vec![0, 2, 1, 3, 4, 5, 6, 7]);
        for c in 0..r.corners() {
            let (x, d) = r.step(c);
            assert_eq!(r.step_back(d), (x, c));
        }
    }
}

//! Paths in the universal cover of the rose (a tree whose vertices are
//! group elements) and the combinatorics of how two such paths cross.

use std::cmp::Ordering;

use crate::surface::Ribbon;
use crate::word::Letter;

/// A path through consecutive tree vertices, described by the slots used to
/// enter and leave each vertex.
#[derive(Clone, Copy, Debug)]
pub enum Strand<'a> {
    /// Finite path `word`, entering its first vertex at `start` and leaving
    /// its last vertex at `end` (both corner slots).
    Path { word: &'a [Letter], start: usize, end: usize },
    /// Bi-infinite periodic line reading the cyclic word forever.
    Cycle { word: &'a [Letter] },
}

impl<'a> Strand<'a> {
    pub fn vertices(&self) -> usize {
        match self {
            Strand::Path { word, .. } => word.len() + 1,
            Strand::Cycle { word } => word.len(),
        }
    }

    fn is_cycle(&self) -> bool {
        matches!(self, Strand::Cycle { .. })
    }

    fn norm(&self, t: i64) -> Option<usize> {
        match self {
            Strand::Path { word, .. } => (t >= 0 && t as usize <= word.len()).then_some(t as usize),
            Strand::Cycle { word } => Some(t.rem_euclid(word.len() as i64) as usize),
        }
    }

    pub fn entry(&self, r: &Ribbon, t: i64) -> usize {
        let t = self.norm(t).expect("vertex out of range");
        match self {
            Strand::Path { word, start, .. } => {
                if t == 0 {
                    *start
                } else {
                    r.slot_in(word[t - 1])
                }
            }
            Strand::Cycle { word } => r.slot_in(word[(t + word.len() - 1) % word.len()]),
        }
    }

    pub fn exit(&self, r: &Ribbon, t: i64) -> usize {
        let t = self.norm(t).expect("vertex out of range");
        match self {
            Strand::Path { word, end, .. } => {
                if t == word.len() {
                    *end
                } else {
                    r.slot_out(word[t])
                }
            }
            Strand::Cycle { word } => r.slot_out(word[t]),
        }
    }
}

/// Whether slot `x` lies on the left of a strand passing the vertex from
/// slot `b_in` to slot `b_out` (slots increase counter-clockwise).
pub fn left_of(r: &Ribbon, x: usize, b_in: usize, b_out: usize) -> bool {
    let m = r.slots();
    (x + m - b_out) % m < (b_in + m - b_out) % m
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Crossing {
    /// Vertex of `a` where the shared segment begins.
    pub i: usize,
    /// Vertex index of `b` at that point.
    pub k: usize,
    /// Last vertex of `a` on the shared segment.
    pub j: usize,
    /// Whether `a` runs along `b` in `b`'s direction (irrelevant when j == i).
    pub forward: bool,
    /// `a` passes from the left of `b` to its right.
    pub left_to_right: bool,
}

impl Crossing {
    /// Index of `b`'s vertex matching `a`'s vertex `t` on the shared segment.
    pub fn b_vertex_at(&self, t: usize) -> i64 {
        let d = (t - self.i) as i64;
        if self.forward {
            self.k as i64 + d
        } else {
            self.k as i64 - d
        }
    }
}

/// Every translate of `b` that `a` crosses transversally, each reported once
/// (at the first vertex of `a` where they meet). When `same` is set, `a` and
/// `b` are the same strand and the trivial translate is skipped.
pub fn crossings(r: &Ribbon, a: &Strand, b: &Strand, same: bool) -> Vec<Crossing> {
    let mut out = Vec::new();
    let cap = (a.vertices() + b.vertices() + 2) as i64;
    for i in 0..a.vertices() {
        let ae = a.entry(r, i as i64);
        for k in 0..b.vertices() {
            if same && i == k {
                continue;
            }
            let (bi, bo) = (b.entry(r, k as i64), b.exit(r, k as i64));
            if ae == bi || ae == bo {
                continue;
            }
            let ao = a.exit(r, i as i64);
            let forward = if ao == bo {
                Some(true)
            } else if ao == bi {
                Some(false)
            } else {
                None
            };
            let (mut t, mut s) = (i as i64, k as i64);
            let mut touching = false;
            let mut parallel = false;
            if let Some(fwd) = forward {
                let mut steps = 0;
                loop {
                    let aout = a.exit(r, t);
                    let matched = if fwd { b.exit(r, s) } else { b.entry(r, s) };
                    if aout != matched {
                        break;
                    }
                    if aout % 2 == 1 {
                        touching = true;
                        break;
                    }
                    t += 1;
                    s += if fwd { 1 } else { -1 };
                    steps += 1;
                    if a.is_cycle() && steps > cap {
                        parallel = true;
                        break;
                    }
                }
            }
            if touching || parallel {
                continue;
            }
            let aout = a.exit(r, t);
            let side_in = left_of(r, ae, bi, bo);
            let side_out = left_of(r, aout, b.entry(r, s), b.exit(r, s));
            if side_in != side_out {
                out.push(Crossing { i, k, j: t as usize, forward: forward.unwrap_or(true), left_to_right: side_in });
            }
        }
    }
    out
}

/// Lexicographic comparison of two reduced paths from the root given as
/// letter iterators, by the counter-clockwise order of their turns starting
/// from `base_slot`. Rays that agree on `cap` letters compare equal.
pub fn compare_rays<I, J>(r: &Ribbon, base_slot: usize, a: I, b: J, cap: usize) -> Ordering
where
    I: IntoIterator<Item = Letter>,
    J: IntoIterator<Item = Letter>,
{
    let m = r.slots();
    let mut a = a.into_iter();
    let mut b = b.into_iter();
    let mut entry = base_slot;
    for _ in 0..cap {
        match (a.next(), b.next()) {
            (Some(x), Some(y)) if x == y => entry = r.slot_in(x),
            (Some(x), Some(y)) => {
                let kx = (r.slot_out(x) + m - entry) % m;
                let ky = (r.slot_out(y) + m - entry) % m;
                return kx.cmp(&ky);
            }
            _ => return Ordering::Equal,
        }
    }
    Ordering::Equal
}

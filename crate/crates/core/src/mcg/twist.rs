//! Dehn twist along a simple closed curve, acting on arcs with fixed
//! endpoints: every crossing of the arc with the curve is resolved by
//! inserting a parallel copy of the curve.

use std::cmp::Ordering;

use crate::curves::{compare_rays, crossings, Crossing, Point, Strand};
use crate::error::{Error, Result};
use crate::surface::Surface;
use crate::word::{inverse, reduce, rotate, Letter, Word};

fn ray(prefix: &[Letter], c: &[Letter], x: &Crossing, forward: bool, len: usize) -> Word {
    let n = c.len() as i64;
    let mut out = prefix[..x.i].to_vec();
    let mut s = x.k as i64;
    while out.len() < len {
        if forward {
            out.push(c[s.rem_euclid(n) as usize]);
            s += 1;
        } else {
            s -= 1;
            out.push(c[s.rem_euclid(n) as usize].inv());
        }
    }
    out
}

/// Image of the arc from corner `base` (at the root) to `p` under the
/// `sign`-handed twist along the cyclic word `c` (`sign` = +1 is the
/// right-handed twist).
pub fn twist_point(s: &Surface, base: usize, p: &Point, c: &[Letter], sign: i32) -> Result<Point> {
    let r = &s.ribbon;
    let a = Strand::Path { word: &p.word, start: r.corner_slot(base), end: r.corner_slot(p.corner) };
    let b = Strand::Cycle { word: c };
    let mut xs = crossings(r, &a, &b, false);
    if xs.is_empty() {
        return Ok(p.clone());
    }
    let base_slot = r.corner_slot(base);
    if xs.len() > 1 {
        // Order crossings along the arc: nested translates of the curve are
        // met outermost first, i.e. by increasing lower end at infinity.
        let len = p.word.len() + 4 * c.len() + 4;
        let lower: Vec<Word> = xs
            .iter()
            .map(|x| {
                let f = ray(&p.word, c, x, true, len);
                let g = ray(&p.word, c, x, false, len);
                if compare_rays(r, base_slot, f.iter().copied(), g.iter().copied(), len) == Ordering::Greater {
                    g
                } else {
                    f
                }
            })
            .collect();
        let mut idx: Vec<usize> = (0..xs.len()).collect();
        idx.sort_by(|&u, &v| compare_rays(r, base_slot, lower[u].iter().copied(), lower[v].iter().copied(), len));
        xs = idx.into_iter().map(|u| xs[u]).collect();
    }
    let n = c.len() as i64;
    let mut inserts: Vec<Vec<Word>> = vec![Vec::new(); p.word.len() + 1];
    let mut t_prev = 0;
    for x in &xs {
        let t = x.i.max(t_prev);
        if t > x.j {
            return Err(Error::Internal("inconsistent crossing order in twist".into()));
        }
        t_prev = t;
        let phase = x.b_vertex_at(t).rem_euclid(n) as usize;
        let lp = rotate(c, phase);
        // right-handed: turn right onto the curve
        let along = (sign > 0) != x.left_to_right;
        inserts[t].push(if along { lp } else { inverse(&lp) });
    }
    let mut out = Vec::new();
    for (t, ins) in inserts.iter().enumerate() {
        for w in ins {
            out.extend_from_slice(w);
        }
        if let Some(&x) = p.word.get(t) {
            out.push(x);
        }
    }
    Ok(Point { word: reduce(&out), corner: p.corner })
}

use std::fmt;

/// A generator of the free fundamental group, or its inverse.
/// Stored as `±(index + 1)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(i32);

impl Letter {
    pub fn new(gen: usize, positive: bool) -> Letter {
        let v = gen as i32 + 1;
        Letter(if positive { v } else { -v })
    }

    pub fn gen(self) -> usize {
        (self.0.unsigned_abs() - 1) as usize
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    pub fn inv(self) -> Letter {
        Letter(-self.0)
    }

    /// Half-edge of the rose through which this letter leaves the vertex.
    pub fn out_half_edge(self) -> usize {
        2 * self.gen() + usize::from(!self.is_positive())
    }

    /// Half-edge through which this letter arrives.
    pub fn in_half_edge(self) -> usize {
        self.out_half_edge() ^ 1
    }

    /// The letter that leaves through half-edge `h`.
    pub fn leaving(h: usize) -> Letter {
        Letter::new(h / 2, h.is_multiple_of(2))
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_positive() {
            write!(f, "x{}", self.gen())
        } else {
            write!(f, "X{}", self.gen())
        }
    }
}

pub type Word = Vec<Letter>;

/// Appends `x` to a reduced word, cancelling if possible.
pub fn push_reduced(w: &mut Word, x: Letter) {
    if w.last() == Some(&x.inv()) {
        w.pop();
    } else {
        w.push(x);
    }
}

pub fn extend_reduced(w: &mut Word, tail: &[Letter]) {
    for &x in tail {
        push_reduced(w, x);
    }
}

pub fn reduce(w: &[Letter]) -> Word {
    let mut out = Vec::with_capacity(w.len());
    extend_reduced(&mut out, w);
    out
}

pub fn inverse(w: &[Letter]) -> Word {
    w.iter().rev().map(|x| x.inv()).collect()
}

pub fn is_reduced(w: &[Letter]) -> bool {
    w.windows(2).all(|p| p[0] != p[1].inv())
}

/// Cyclically reduces a word (the result is reduced and its first and last
/// letters are not mutually inverse).
pub fn cyclic_reduce(w: &[Letter]) -> Word {
    let w = reduce(w);
    let mut lo = 0;
    let mut hi = w.len();
    while hi - lo >= 2 && w[lo] == w[hi - 1].inv() {
        lo += 1;
        hi -= 1;
    }
    w[lo..hi].to_vec()
}

pub fn rotate(w: &[Letter], k: usize) -> Word {
    let n = w.len();
    (0..n).map(|i| w[(k + i) % n]).collect()
}

/// Least rotation of `w` or `w^{-1}`; canonical for unoriented cyclic words.
pub fn cyclic_canonical(w: &[Letter]) -> Word {
    let w = cyclic_reduce(w);
    if w.is_empty() {
        return w;
    }
    let inv = inverse(&w);
    let mut best = w.clone();
    for src in [&w, &inv] {
        for k in 0..src.len() {
            let r = rotate(src, k);
            if r < best {
                best = r;
            }
        }
    }
    best
}

/// True when the cyclic word is not a proper power.
pub fn is_primitive_cyclic(w: &[Letter]) -> bool {
    let n = w.len();
    if n == 0 {
        return false;
    }
    (1..n).filter(|d| n.is_multiple_of(*d)).all(|d| (0..n).any(|i| w[i] != w[(i + d) % n]))
}

/// Abelianization: exponent sum per generator.
pub fn exponent_sums(w: &[Letter], k: usize) -> Vec<i64> {
    let mut v = vec![0i64; k];
    for x in w {
        v[x.gen()] += if x.is_positive() { 1 } else { -1 };
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(g: usize, p: bool) -> Letter {
        Letter::new(g, p)
    }

    #[test]
    fn reduction() {
        let a = l(0, true);
        let b = l(1, true);
        assert_eq!(reduce(&[a, b, b.inv(), a]), vec![a, a]);
        assert_eq!(cyclic_reduce(&[b, a, b.inv()]), vec![a]);
        assert!(is_primitive_cyclic(&[a, b]));
        assert!(!is_primitive_cyclic(&[a, b, a, b]));
        assert_eq!(cyclic_canonical(&[b, a]), cyclic_canonical(&[a.inv(), b.inv()]));
    }

    #[test]
    fn half_edges() {
        let a = l(3, true);
        assert_eq!(a.out_half_edge(), 6);
        assert_eq!(a.in_half_edge(), 7);
        assert_eq!(a.inv().out_half_edge(), 7);
        assert_eq!(Letter::leaving(7), a.inv());
    }
}

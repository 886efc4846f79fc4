//! Mapping classes as words in Dehn twists, boundary twists and braid half
//! twists, and their exact action on arcs and curves.

pub mod action;
pub mod twist;

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::curves::{enumerate_arcs, tighten_arc, ArcClass, ClosedCurve, NormalCoordinates, Point};
use crate::error::{Error, Result};
use crate::surface::{ComponentKind, Surface};
use crate::word::{cyclic_canonical, Letter, Word};
pub use action::LiftedAction;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorKind {
    Twist { name: String, curve: ClosedCurve },
    Boundary { label: String, comp: usize },
    Braid { i: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub kind: GeneratorKind,
    pub power: i64,
}

impl Generator {
    pub fn twist(s: &Surface, name: &str, word: &[Letter], power: i64) -> Result<Generator> {
        let curve = ClosedCurve::new(s, word)?;
        Ok(Generator { kind: GeneratorKind::Twist { name: name.into(), curve }, power })
    }

    pub fn boundary(s: &Surface, label: &str, power: i64) -> Result<Generator> {
        let comp = s.boundary_component(label)?;
        Ok(Generator { kind: GeneratorKind::Boundary { label: label.into(), comp }, power })
    }

    /// Half twist `σ_i` (1-based) exchanging punctures `i` and `i+1`.
    pub fn braid(s: &Surface, i: usize, power: i64) -> Result<Generator> {
        let n = s.spec.punctures as usize;
        if n < 2 || i == 0 || i >= n {
            return Err(Error::BraidIndex(i, n));
        }
        Ok(Generator { kind: GeneratorKind::Braid { i }, power })
    }

    pub fn label(&self) -> String {
        let base = match &self.kind {
            GeneratorKind::Twist { name, .. } => format!("T_{name}"),
            GeneratorKind::Boundary { label, .. } => format!("T_{label}"),
            GeneratorKind::Braid { i } => format!("s{i}"),
        };
        if self.power == 1 {
            base
        } else {
            format!("{base}^{}", self.power)
        }
    }

    fn inverse(&self) -> Generator {
        Generator { kind: self.kind.clone(), power: -self.power }
    }
}

/// Generators applied right to left.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MappingClassWord {
    pub gens: Vec<Generator>,
    pub punctures: usize,
}

impl MappingClassWord {
    pub fn identity(s: &Surface) -> MappingClassWord {
        MappingClassWord { gens: Vec::new(), punctures: s.spec.punctures as usize }
    }

    pub fn new(s: &Surface, gens: Vec<Generator>) -> MappingClassWord {
        MappingClassWord { gens, punctures: s.spec.punctures as usize }
    }

    pub fn single(s: &Surface, g: Generator) -> MappingClassWord {
        MappingClassWord::new(s, vec![g])
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &MappingClassWord) -> MappingClassWord {
        let mut gens = self.gens.clone();
        for g in &other.gens {
            match gens.last() {
                Some(h) if h.kind == g.kind && h.power == -g.power => {
                    gens.pop();
                }
                _ => gens.push(g.clone()),
            }
        }
        MappingClassWord { gens, punctures: self.punctures }
    }

    pub fn invert(&self) -> MappingClassWord {
        MappingClassWord { gens: self.gens.iter().rev().map(Generator::inverse).collect(), punctures: self.punctures }
    }

    pub fn power(&self, k: i64) -> MappingClassWord {
        let base = if k < 0 { self.invert() } else { self.clone() };
        let mut out = MappingClassWord { gens: Vec::new(), punctures: self.punctures };
        for _ in 0..k.unsigned_abs() {
            out = out.compose(&base);
        }
        out
    }

    /// `perm[j]` is the image of puncture `j` (0-based).
    pub fn permutation(&self) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..self.punctures).collect();
        // rightmost generator acts first
        for g in self.gens.iter().rev() {
            if let GeneratorKind::Braid { i } = g.kind {
                if g.power % 2 != 0 {
                    for p in perm.iter_mut() {
                        if *p == i - 1 {
                            *p = i;
                        } else if *p == i {
                            *p = i - 1;
                        }
                    }
                }
            }
        }
        perm
    }

    pub fn label(&self) -> String {
        if self.gens.is_empty() {
            return "id".into();
        }
        self.gens.iter().map(Generator::label).collect::<Vec<_>>().join(" ")
    }
}

/// Order of the permutation the word induces on punctures.
pub fn puncture_permutation_order(w: &MappingClassWord) -> u64 {
    let perm = w.permutation();
    let mut seen = vec![false; perm.len()];
    let mut order = 1u64;
    for start in 0..perm.len() {
        let mut len = 0u64;
        let mut j = start;
        while !seen[j] {
            seen[j] = true;
            j = perm[j];
            len += 1;
        }
        if len > 0 {
            order = num_integer::lcm(order, len);
        }
    }
    order
}

/// A word compiled to lifted actions, ready for repeated application.
#[derive(Clone, Debug)]
pub struct Compiled {
    actions: Vec<LiftedAction>,
    /// Indices into `actions` in application order.
    seq: Vec<usize>,
    rank: usize,
}

impl Compiled {
    pub fn new(s: &Surface, w: &MappingClassWord) -> Result<Compiled> {
        let mut actions = Vec::new();
        let mut index: HashMap<(GeneratorKind, bool), usize> = HashMap::new();
        let mut seq = Vec::new();
        for g in w.gens.iter().rev() {
            let positive = g.power > 0;
            let key = (g.kind.clone(), positive);
            let idx = match index.get(&key) {
                Some(&i) => i,
                None => {
                    let sign = if positive { 1 } else { -1 };
                    let act = match &g.kind {
                        GeneratorKind::Twist { curve, .. } => LiftedAction::twist(s, &curve.word, sign)?,
                        GeneratorKind::Boundary { comp, .. } => {
                            LiftedAction::twist(s, &cyclic_canonical(&s.boundary_word(*comp)), sign)?
                        }
                        GeneratorKind::Braid { i } => {
                            if s.spec.punctures as usize <= *i {
                                return Err(Error::BraidIndex(*i, s.spec.punctures as usize));
                            }
                            LiftedAction::half_twist(s, i - 1, sign)
                        }
                    };
                    actions.push(act);
                    index.insert(key, actions.len() - 1);
                    actions.len() - 1
                }
            };
            for _ in 0..g.power.unsigned_abs() {
                seq.push(idx);
            }
        }
        Ok(Compiled { actions, seq, rank: s.rank() })
    }

    pub fn is_identity_word(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn apply_point(&self, base: usize, p: &Point) -> Point {
        let mut p = p.clone();
        for &i in &self.seq {
            p = self.actions[i].apply_point(base, &p);
        }
        p
    }

    pub fn apply_word(&self, w: &[Letter]) -> Word {
        let mut w = w.to_vec();
        for &i in &self.seq {
            w = self.actions[i].apply_word(&w);
        }
        w
    }

    /// The whole word as a single lifted action.
    pub fn lifted(&self, s: &Surface) -> LiftedAction {
        let mut acc = LiftedAction::identity(s);
        for &i in &self.seq {
            acc = self.actions[i].compose(&acc);
        }
        debug_assert_eq!(acc.gens.len(), self.rank);
        acc
    }
}

pub fn apply_arc(s: &Surface, c: &Compiled, a: &ArcClass) -> ArcClass {
    let end = c.apply_point(s.base_corner(a.start), &a.end);
    tighten_arc(s, &ArcClass { start: a.start, end })
}

pub fn apply_curve(c: &Compiled, x: &ClosedCurve) -> ClosedCurve {
    ClosedCurve { word: cyclic_canonical(&c.apply_word(&x.word)) }
}

/// Image of an arc or curve under the mapping class.
pub fn apply(s: &Surface, w: &MappingClassWord, x: &NormalCoordinates) -> Result<NormalCoordinates> {
    if w.punctures != s.spec.punctures as usize {
        return Err(Error::SurfaceMismatch);
    }
    let c = Compiled::new(s, w)?;
    Ok(match x {
        NormalCoordinates::Arc(a) => NormalCoordinates::Arc(apply_arc(s, &c, a)),
        NormalCoordinates::Curve(k) => NormalCoordinates::Curve(apply_curve(&c, k)),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "kebab-case")]
pub enum ProbeOutcome {
    /// Every probe arc was fixed; not a proof of triviality.
    YesOnProbes { probes: usize, bound: usize },
    No { component: String, arc: String, image: String },
}

/// Applies `w` to every probe arc from every boundary component and reports
/// the first one that moves.
pub fn acts_identically(s: &Surface, w: &MappingClassWord, probe_bound: usize) -> Result<ProbeOutcome> {
    let c = Compiled::new(s, w)?;
    let mut probes = 0;
    for (ci, comp) in s.components.iter().enumerate() {
        if comp.kind != ComponentKind::Boundary {
            continue;
        }
        let arcs = enumerate_arcs(s, ci, probe_bound);
        probes += arcs.len();
        let bad = arcs.par_iter().find_first(|a| apply_arc(s, &c, a) != **a);
        if let Some(a) = bad {
            let img = apply_arc(s, &c, a);
            return Ok(ProbeOutcome::No {
                component: comp.label.clone(),
                arc: describe_arc(s, a),
                image: describe_arc(s, &img),
            });
        }
    }
    Ok(ProbeOutcome::YesOnProbes { probes, bound: probe_bound })
}

pub fn describe_arc(s: &Surface, a: &ArcClass) -> String {
    format!(
        "{} -> [{}] corner {} ({})",
        s.components[a.start].label,
        s.format_word(&a.end.word),
        a.end.corner,
        s.components[a.end_component(s)].label
    )
}

#[cfg(test)]
mod tests;

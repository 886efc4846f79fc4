//! Surfaces `S_{g,d}` with punctures, the reference cell structure, and the
//! a-priori denominator bounds for twist coefficients.

pub mod ribbon;
pub mod triangulation;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::{Letter, Word};
pub use ribbon::Ribbon;
pub use triangulation::{standard_triangulation, validate_triangulation, Triangulation};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurfaceSpec {
    pub genus: u32,
    pub boundary: Vec<String>,
    #[serde(default)]
    pub punctures: u32,
}

impl SurfaceSpec {
    pub fn new(genus: u32, boundary_count: usize) -> SurfaceSpec {
        SurfaceSpec { genus, boundary: (1..=boundary_count).map(|i| format!("C{i}")).collect(), punctures: 0 }
    }

    pub fn with_punctures(mut self, n: u32) -> SurfaceSpec {
        self.punctures = n;
        self
    }

    pub fn d(&self) -> usize {
        self.boundary.len()
    }

    pub fn euler_characteristic(&self) -> i64 {
        2 - 2 * self.genus as i64 - self.boundary.len() as i64 - self.punctures as i64
    }

    pub fn validate(&self) -> Result<()> {
        if self.boundary.is_empty() {
            return Err(Error::Surface("at least one boundary component is required".into()));
        }
        let mut seen = BTreeSet::new();
        for l in self.boundary.iter().chain(self.puncture_labels().iter()) {
            if l.is_empty() {
                return Err(Error::Surface("empty boundary label".into()));
            }
            if !seen.insert(l.clone()) {
                return Err(Error::Surface(format!("duplicate label {l}")));
            }
        }
        Ok(())
    }

    pub fn puncture_labels(&self) -> Vec<String> {
        (1..=self.punctures).map(|j| format!("P{j}")).collect()
    }

    /// Replaces every puncture by a boundary component (labelled `P1..Pn`).
    pub fn punctures_to_boundary(&self) -> SurfaceSpec {
        let mut boundary = self.boundary.clone();
        boundary.extend(self.puncture_labels());
        SurfaceSpec { genus: self.genus, boundary, punctures: 0 }
    }
}

impl fmt::Display for SurfaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S_{{{},{}}}", self.genus, self.boundary.len())?;
        if self.punctures > 0 {
            write!(f, " with {} punctures", self.punctures)?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DenominatorBound {
    pub value: u64,
    pub degenerate: bool,
}

/// `D(S) = max(4g+2, 4g+d-3)`; punctures count as boundary components.
/// Disc and annulus get the marker value 1 with `degenerate` set.
pub fn denominator_bound(spec: &SurfaceSpec) -> DenominatorBound {
    let g = spec.genus as i64;
    let d = (spec.boundary.len() + spec.punctures as usize) as i64;
    if g == 0 && d <= 2 {
        return DenominatorBound { value: 1, degenerate: true };
    }
    DenominatorBound { value: (4 * g + 2).max(4 * g + d - 3) as u64, degenerate: false }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NtType {
    #[serde(rename = "periodic")]
    Periodic,
    #[serde(rename = "pseudoAnosov", alias = "pA")]
    PseudoAnosov,
    #[serde(rename = "reducible")]
    Reducible,
    #[serde(rename = "unknown")]
    Unknown,
}

impl NtType {
    pub fn is_irreducible_type(self) -> bool {
        matches!(self, NtType::Periodic | NtType::PseudoAnosov)
    }
}

impl std::str::FromStr for NtType {
    type Err = Error;
    fn from_str(s: &str) -> Result<NtType> {
        match s {
            "periodic" => Ok(NtType::Periodic),
            "pA" | "pseudoAnosov" | "pseudo-Anosov" => Ok(NtType::PseudoAnosov),
            "reducible" => Ok(NtType::Reducible),
            "unknown" => Ok(NtType::Unknown),
            _ => Err(Error::Precondition(format!("unknown Nielsen-Thurston type {s}"))),
        }
    }
}

/// Admissible denominators `{1, ..., max}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DenominatorSet {
    pub max: u64,
}

impl DenominatorSet {
    pub fn contains(&self, q: u64) -> bool {
        q >= 1 && q <= self.max
    }

    pub fn is_superset_of(&self, other: &DenominatorSet) -> bool {
        other.max <= self.max
    }
}

pub fn admissible_values(spec: &SurfaceSpec, nt: NtType) -> Result<DenominatorSet> {
    let g = spec.genus as i64;
    let d = (spec.boundary.len() + spec.punctures as usize) as i64;
    let periodic = 4 * g + 2;
    let pa = 4 * g + d - 3;
    match nt {
        NtType::Periodic => Ok(DenominatorSet { max: periodic as u64 }),
        NtType::PseudoAnosov if pa < 1 => Err(Error::NoPseudoAnosov),
        NtType::PseudoAnosov => Ok(DenominatorSet { max: pa as u64 }),
        NtType::Reducible | NtType::Unknown => Ok(DenominatorSet { max: periodic.max(pa) as u64 }),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ComponentKind {
    Boundary,
    Puncture,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub label: String,
    pub kind: ComponentKind,
    pub face: usize,
    pub base_corner: usize,
}

/// A surface together with its rose model: generators `a_i, b_i` for the
/// genus, `c_j` for the extra boundary components and `p_j` for punctures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Surface {
    pub spec: SurfaceSpec,
    pub ribbon: Ribbon,
    pub generators: Vec<String>,
    pub components: Vec<Component>,
    corner_component: Vec<usize>,
}

impl Surface {
    pub fn new(spec: &SurfaceSpec) -> Result<Surface> {
        spec.validate()?;
        let g = spec.genus as usize;
        let d = spec.boundary.len();
        let n = spec.punctures as usize;
        let mut generators = Vec::new();
        let mut order = Vec::new();
        for i in 1..=g {
            let a = generators.len();
            generators.push(format!("a{i}"));
            generators.push(format!("b{i}"));
            order.extend([2 * a, 2 * (a + 1), 2 * a + 1, 2 * (a + 1) + 1]);
        }
        let mut petals = Vec::new();
        for (j, label) in spec.boundary.iter().enumerate().skip(1) {
            petals.push((generators.len(), label.clone(), ComponentKind::Boundary));
            generators.push(format!("c{}", j + 1));
        }
        for (j, label) in spec.puncture_labels().into_iter().enumerate() {
            petals.push((generators.len(), label, ComponentKind::Puncture));
            generators.push(format!("p{}", j + 1));
        }
        for &(x, _, _) in &petals {
            order.extend([2 * x, 2 * x + 1]);
        }
        let ribbon = Ribbon::new(order);
        let k = generators.len();
        if k == 0 {
            let comp = Component { label: spec.boundary[0].clone(), kind: ComponentKind::Boundary, face: 0, base_corner: 0 };
            return Ok(Surface { spec: spec.clone(), ribbon, generators, components: vec![comp], corner_component: vec![0] });
        }
        let mut components = vec![Component {
            label: spec.boundary[0].clone(),
            kind: ComponentKind::Boundary,
            face: ribbon.corner_face[2 * k - 1].0,
            base_corner: 2 * k - 1,
        }];
        for (x, label, kind) in petals {
            let corner = ribbon.pos[2 * x];
            components.push(Component { label, kind, face: ribbon.corner_face[corner].0, base_corner: corner });
        }
        let mut face_owner = vec![usize::MAX; ribbon.faces.len()];
        for (ci, c) in components.iter().enumerate() {
            if face_owner[c.face] != usize::MAX {
                return Err(Error::Internal("two components share a face".into()));
            }
            face_owner[c.face] = ci;
        }
        if face_owner.contains(&usize::MAX) {
            return Err(Error::Internal("unassigned face in rose model".into()));
        }
        let corner_component = (0..ribbon.corners()).map(|c| face_owner[ribbon.corner_face[c].0]).collect();
        debug_assert_eq!(components.len(), d + n);
        Ok(Surface { spec: spec.clone(), ribbon, generators, components, corner_component })
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn is_disc(&self) -> bool {
        self.rank() == 0
    }

    /// Annulus, possibly with one boundary component being a puncture.
    pub fn is_annulus(&self) -> bool {
        self.spec.genus == 0 && self.components.len() == 2
    }

    pub fn is_degenerate(&self) -> bool {
        self.spec.genus == 0 && self.components.len() <= 2
    }

    pub fn component(&self, label: &str) -> Result<usize> {
        self.components.iter().position(|c| c.label == label).ok_or_else(|| Error::UnknownBoundary(label.into()))
    }

    /// Index of a genuine boundary component.
    pub fn boundary_component(&self, label: &str) -> Result<usize> {
        let i = self.component(label)?;
        if self.components[i].kind == ComponentKind::Puncture {
            return Err(Error::PunctureLabel(label.into()));
        }
        Ok(i)
    }

    pub fn corner_component(&self, corner: usize) -> usize {
        self.corner_component[corner]
    }

    pub fn is_puncture_corner(&self, corner: usize) -> bool {
        self.components[self.corner_component[corner]].kind == ComponentKind::Puncture
    }

    pub fn puncture_generator(&self, j: usize) -> usize {
        2 * self.spec.genus as usize + self.spec.boundary.len() - 1 + j
    }

    pub fn puncture_component(&self, j: usize) -> usize {
        self.spec.boundary.len() + j
    }

    pub fn base_corner(&self, comp: usize) -> usize {
        self.components[comp].base_corner
    }

    /// Boundary word of a component read from its base corner.
    pub fn boundary_word(&self, comp: usize) -> Word {
        if self.is_disc() {
            return Vec::new();
        }
        self.ribbon.boundary_word_from(self.components[comp].base_corner)
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// Parses `a1 b1^-1 A1 b1'` style words. Upper-case first letter or a
    /// trailing `'` inverts.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let mut out = Vec::new();
        for tok in text.split(|c: char| c.is_whitespace() || c == '*' || c == '.').filter(|t| !t.is_empty()) {
            let (base, exp) = match tok.split_once('^') {
                Some((b, e)) => {
                    (b, e.parse::<i64>().map_err(|_| Error::MalformedWord(format!("bad exponent in {tok}")))?)
                }
                None => (tok, 1),
            };
            let (base, mut exp) = match base.strip_suffix('\'') {
                Some(b) => (b, -exp),
                None => (base, exp),
            };
            let gen = match self.generator_index(base) {
                Some(i) => i,
                None => {
                    let lower = base.to_lowercase();
                    let first_upper = base.chars().next().is_some_and(|c| c.is_uppercase());
                    match self.generator_index(&lower) {
                        Some(i) if first_upper => {
                            exp = -exp;
                            i
                        }
                        _ => return Err(Error::MalformedWord(format!("unknown generator {base}"))),
                    }
                }
            };
            for _ in 0..exp.unsigned_abs() {
                out.push(Letter::new(gen, exp > 0));
            }
        }
        Ok(out)
    }

    pub fn format_word(&self, w: &[Letter]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.iter()
            .map(|x| {
                let name = &self.generators[x.gen()];
                if x.is_positive() {
                    name.clone()
                } else {
                    name.to_uppercase()
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds() {
        assert_eq!(denominator_bound(&SurfaceSpec::new(1, 1)).value, 6);
        assert!(denominator_bound(&SurfaceSpec::new(0, 1)).degenerate);
        assert!(denominator_bound(&SurfaceSpec::new(0, 2)).degenerate);
        assert_eq!(denominator_bound(&SurfaceSpec::new(2, 4)).value, 10);
        assert_eq!(denominator_bound(&SurfaceSpec::new(0, 1).with_punctures(2)).value, 2);
        let s = SurfaceSpec::new(1, 1);
        assert_eq!(admissible_values(&s, NtType::Periodic).unwrap().max, 6);
        assert_eq!(admissible_values(&s, NtType::PseudoAnosov).unwrap().max, 2);
        assert_eq!(admissible_values(&SurfaceSpec::new(0, 3), NtType::PseudoAnosov), Err(Error::NoPseudoAnosov));
    }

    #[test]
    fn rose_models_have_right_faces() {
        for g in 0..=3 {
            for d in 1..=4 {
                for n in 0..=4 {
                    let spec = SurfaceSpec::new(g, d).with_punctures(n);
                    let s = Surface::new(&spec).unwrap();
                    if s.rank() == 0 {
                        continue;
                    }
                    assert_eq!(s.ribbon.faces.len(), d + n as usize);
                    assert_eq!(1 - s.rank() as i64 + s.ribbon.faces.len() as i64, 2 - 2 * g as i64);
                    for (ci, c) in s.components.iter().enumerate() {
                        if c.kind == ComponentKind::Puncture || ci > 0 {
                            assert_eq!(s.ribbon.faces[c.face].corners.len(), 1);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn word_parsing() {
        let s = Surface::new(&SurfaceSpec::new(1, 1)).unwrap();
        let w = s.parse_word("a1 B1 b1^-2 a1'").unwrap();
        assert_eq!(s.format_word(&w), "a1 B1 B1 B1 A1");
        assert!(s.parse_word("z").is_err());
    }
}

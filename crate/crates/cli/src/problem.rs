//! Problem files: a surface, a table of named curves and words in twists.

use std::collections::BTreeMap;

use openbook_core::foliation::FoliationGraph;
use openbook_core::mcg::{Generator, MappingClassWord};
use openbook_core::surface::{NtType, Surface, SurfaceSpec};
use openbook_core::topology::CoefficientAssignment;
use serde::Deserialize;

use crate::CliError;

/// One factor of a word. Exactly one of `twist`, `boundary`, `braid`.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WordItem {
    pub twist: Option<String>,
    pub boundary: Option<String>,
    pub braid: Option<usize>,
    #[serde(default = "one")]
    pub power: i64,
}

fn one() -> i64 {
    1
}

/// A word written either as text (`"T_a T_b^-1 T_C1 s1^3"`, leftmost applied
/// last) or as a list of [`WordItem`]s.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum WordSpec {
    Text(String),
    Items(Vec<WordItem>),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProblem {
    surface: Option<SurfaceSpec>,
    #[serde(default)]
    curves: BTreeMap<String, String>,
    word: Option<WordSpec>,
    #[serde(default)]
    words: Vec<WordSpec>,
    boundary: Option<String>,
    nt_type: Option<NtType>,
    #[serde(default)]
    tight: bool,
    foliation: Option<FoliationGraph>,
    coefficients: Option<CoefficientAssignment>,
}

#[derive(Clone, Debug)]
pub struct ProblemFile {
    pub surface: Option<Surface>,
    pub words: Vec<MappingClassWord>,
    pub boundary: Option<String>,
    pub nt_type: Option<NtType>,
    pub tight: bool,
    pub foliation: Option<FoliationGraph>,
    pub coefficients: Option<CoefficientAssignment>,
}

impl ProblemFile {
    pub fn surface(&self) -> Result<&Surface, CliError> {
        self.surface.as_ref().ok_or_else(|| CliError::Parse("problem has no surface".into()))
    }

    /// The words, or the identity when none were given.
    pub fn words_or_identity(&self) -> Result<Vec<MappingClassWord>, CliError> {
        let s = self.surface()?;
        Ok(if self.words.is_empty() { vec![MappingClassWord::identity(s)] } else { self.words.clone() })
    }

    pub fn boundary_label(&self, flag: Option<&str>) -> Result<String, CliError> {
        let s = self.surface()?;
        Ok(flag.map(str::to_string).or_else(|| self.boundary.clone()).unwrap_or_else(|| s.spec.boundary[0].clone()))
    }

    pub fn foliation(&self) -> Result<&FoliationGraph, CliError> {
        self.foliation.as_ref().ok_or_else(|| CliError::Parse("problem has no foliation graph".into()))
    }
}

pub fn parse_problem(text: &str) -> Result<ProblemFile, CliError> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    // A bare foliation graph is accepted as a problem holding only that graph.
    if value.get("elliptic").is_some() {
        let g: FoliationGraph = serde_json::from_value(value).map_err(|e| CliError::Parse(format!("foliation: {e}")))?;
        return Ok(ProblemFile {
            surface: None,
            words: Vec::new(),
            boundary: None,
            nt_type: None,
            tight: false,
            foliation: Some(g),
            coefficients: None,
        });
    }
    // Re-parse from text so serde reports line and column.
    let raw: RawProblem = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    let mut errors = Vec::new();
    let surface = match &raw.surface {
        Some(spec) => match Surface::new(spec) {
            Ok(s) => Some(s),
            Err(e) => {
                errors.push(format!("surface: {e}"));
                None
            }
        },
        None => None,
    };
    let mut words = Vec::new();
    let specs: Vec<(String, &WordSpec)> = raw
        .word
        .iter()
        .map(|w| ("word".to_string(), w))
        .chain(raw.words.iter().enumerate().map(|(i, w)| (format!("words[{i}]"), w)))
        .collect();
    if !specs.is_empty() {
        match &surface {
            Some(s) => {
                let curves = resolve_curves(s, &raw.curves, &mut errors);
                for (path, spec) in specs {
                    match build_word(s, &curves, spec) {
                        Ok(w) => words.push(w),
                        Err(e) => errors.push(format!("{path}: {e}")),
                    }
                }
            }
            None if raw.surface.is_none() => errors.push("word: no surface given".into()),
            None => {}
        }
    }
    if let (Some(s), Some(b)) = (&surface, &raw.boundary) {
        if let Err(e) = s.boundary_component(b) {
            errors.push(format!("boundary: {e}"));
        }
    }
    if !errors.is_empty() {
        return Err(CliError::Parse(errors.join("; ")));
    }
    Ok(ProblemFile {
        surface,
        words,
        boundary: raw.boundary,
        nt_type: raw.nt_type,
        tight: raw.tight,
        foliation: raw.foliation,
        coefficients: raw.coefficients,
    })
}

fn resolve_curves(
    s: &Surface,
    table: &BTreeMap<String, String>,
    errors: &mut Vec<String>,
) -> BTreeMap<String, Vec<openbook_core::word::Letter>> {
    let mut out = BTreeMap::new();
    for (name, text) in table {
        match s.parse_word(text) {
            Ok(w) => {
                out.insert(name.clone(), w);
            }
            Err(e) => errors.push(format!("curves.{name}: {e}")),
        }
    }
    out
}

type CurveTable = BTreeMap<String, Vec<openbook_core::word::Letter>>;

fn named_generator(s: &Surface, curves: &CurveTable, name: &str, power: i64) -> openbook_core::Result<Generator> {
    if let Some(w) = curves.get(name) {
        return Generator::twist(s, name, w, power);
    }
    if s.spec.boundary.iter().any(|b| b == name) {
        return Generator::boundary(s, name, power);
    }
    Err(openbook_core::Error::UnresolvedCurve(name.into()))
}

fn build_word(s: &Surface, curves: &CurveTable, spec: &WordSpec) -> openbook_core::Result<MappingClassWord> {
    let gens = match spec {
        WordSpec::Text(t) => parse_word_text(s, curves, t)?,
        WordSpec::Items(items) => items
            .iter()
            .enumerate()
            .map(|(i, it)| {
                let g = match (&it.twist, &it.boundary, it.braid) {
                    (Some(c), None, None) => named_generator(s, curves, c, it.power),
                    (None, Some(b), None) => Generator::boundary(s, b, it.power),
                    (None, None, Some(k)) => Generator::braid(s, k, it.power),
                    _ => Err(openbook_core::Error::MalformedWord(format!(
                        "item {i} needs exactly one of twist, boundary, braid"
                    ))),
                };
                g.map_err(|e| openbook_core::Error::MalformedWord(format!("item {i}: {e}")))
            })
            .collect::<openbook_core::Result<Vec<_>>>()?,
    };
    Ok(MappingClassWord::new(s, gens.into_iter().filter(|g| g.power != 0).collect()))
}

fn parse_word_text(s: &Surface, curves: &CurveTable, text: &str) -> openbook_core::Result<Vec<Generator>> {
    let mut gens = Vec::new();
    for tok in text.split(|c: char| c.is_whitespace() || c == '*').filter(|t| !t.is_empty()) {
        if tok == "id" || tok == "1" {
            continue;
        }
        let (base, power) = match tok.split_once('^') {
            Some((b, e)) => (b, e.parse::<i64>().map_err(|_| openbook_core::Error::MalformedWord(format!("bad exponent in {tok}")))?),
            None => (tok, 1),
        };
        if let Some(name) = base.strip_prefix("T_") {
            let name = name.trim_start_matches('{').trim_end_matches('}');
            gens.push(named_generator(s, curves, name, power)?);
        } else if let Some(i) = base.strip_prefix('s').and_then(|i| i.parse::<usize>().ok()) {
            gens.push(Generator::braid(s, i, power)?);
        } else if let Some(i) = base.strip_prefix('S').and_then(|i| i.parse::<usize>().ok()) {
            gens.push(Generator::braid(s, i, -power)?);
        } else {
            return Err(openbook_core::Error::MalformedWord(format!("unrecognized factor {tok}")));
        }
    }
    Ok(gens)
}

/// Coefficient files hold either a full assignment or a bare
/// `{"C1": "3/2", ...}` map.
pub fn parse_coefficients(text: &str) -> Result<CoefficientAssignment, CliError> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    let value = if value.get("coeffs").is_some() { value } else { serde_json::json!({ "coeffs": value }) };
    serde_json::from_value(value).map_err(|e| CliError::Parse(format!("coefficients: {e}")))
}

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid surface: {0}")]
    Surface(String),
    #[error("unknown boundary label {0}")]
    UnknownBoundary(String),
    #[error("{0} is a puncture, not a boundary component")]
    PunctureLabel(String),
    #[error("unresolved curve {0}")]
    UnresolvedCurve(String),
    #[error("malformed word: {0}")]
    MalformedWord(String),
    #[error("invalid curve: {0}")]
    InvalidCurve(String),
    #[error("invalid arc: {0}")]
    InvalidArc(String),
    #[error("arcs start at different base points")]
    DifferentBase,
    #[error("Key Lemma requires essential arc")]
    InessentialArc,
    #[error("no pseudo-Anosov maps on this surface")]
    NoPseudoAnosov,
    #[error("braid generator {0} needs {1} punctures")]
    BraidIndex(usize, usize),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("inconsistent foliation data: {0}")]
    InconsistentFoliation(String),
    #[error("mismatched surfaces")]
    SurfaceMismatch,
    #[error("internal: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

use crate::surface::{CurveId, SurfaceSig};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid surface signature: {0}")]
    InvalidSurface(String),

    #[error("curve {curve} is not defined on {sig}")]
    InvalidCurve { curve: CurveId, sig: SurfaceSig },

    #[error("unknown curve name `{0}`")]
    UnknownCurveName(String),

    #[error("vector length {found} does not match dimension {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("matrix dimensions differ: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("surface mismatch: {0} vs {1}")]
    SurfaceMismatch(SurfaceSig, SurfaceSig),

    #[error("word length {reached} exceeded the cap of {cap} symbols")]
    WordGrowthExceeded { cap: usize, reached: usize },

    #[error("pattern not realizable by commutation: {0}")]
    PatternNotRealizable(String),

    #[error("no contiguous occurrence of (a1 b1 a2)^4 in the word")]
    NoChainOccurrence,

    #[error("twist about {0} cannot be positivized (null-homologous curve)")]
    SeparatingBase(CurveId),

    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;

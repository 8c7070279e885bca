use thiserror::Error;

/// Errors shared across the measure, identity, audit, and ranking modules.
///
/// Every variant carries enough context to diagnose the failing call without
/// access to the original arguments. The type is `Clone + PartialEq` so that
/// reports embedding errors stay comparable in tests.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: left operand has {left} components, right has {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("vector {id:?} is empty: at least one component is required")]
    EmptyVector { id: String },

    #[error("vector {id:?} has a non-finite component at index {index}")]
    NonFiniteComponent { id: String, index: usize },

    #[error("order p = 0 is not a valid Minkowski order; p must be a positive integer")]
    InvalidOrder,

    #[error("cosine is undefined because {id:?} has zero magnitude")]
    ZeroMagnitude { id: String },

    #[error("value {value} lies outside the admissible interval [{lo}, {hi}]")]
    OutOfRange { value: f64, lo: f64, hi: f64 },

    #[error("inconsistent parts: |dot| = {dot_abs} exceeds the product of norms {bound}")]
    InconsistentParts { dot_abs: f64, bound: f64 },

    #[error("negative magnitude {value} passed where a norm was expected")]
    NegativeNorm { value: f64 },

    #[error("sequence length mismatch: {left} versus {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("Jaccard index is undefined when both sets are empty")]
    EmptyUnion,

    #[error("Pearson correlation is undefined for a constant vector")]
    ZeroVariance,

    #[error("an empty input sequence was supplied where data is required")]
    EmptyInput,

    #[error("matrix dimension {dim} exceeds the supported limit of {max}")]
    MatrixTooLarge { dim: usize, max: usize },

    #[error("{label} scores similarity; the metric axioms apply to distance measures")]
    NotADistance { label: String },

    #[error("{label} operates on item sets, not numeric vectors")]
    NotAVectorMeasure { label: String },

    #[error("no value recorded for {label} in row {row}")]
    MissingValue { label: String, row: String },

    #[error("invalid audit configuration: {reason}")]
    InvalidConfig { reason: String },
}

impl Error {
    /// Short variant name, used as a stable tag in machine-readable output.
    pub fn name(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::EmptyVector { .. } => "EmptyVector",
            Error::NonFiniteComponent { .. } => "NonFiniteComponent",
            Error::InvalidOrder => "InvalidOrder",
            Error::ZeroMagnitude { .. } => "ZeroMagnitude",
            Error::OutOfRange { .. } => "OutOfRange",
            Error::InconsistentParts { .. } => "InconsistentParts",
            Error::NegativeNorm { .. } => "NegativeNorm",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::EmptyUnion => "EmptyUnion",
            Error::ZeroVariance => "ZeroVariance",
            Error::EmptyInput => "EmptyInput",
            Error::MatrixTooLarge { .. } => "MatrixTooLarge",
            Error::NotADistance { .. } => "NotADistance",
            Error::NotAVectorMeasure { .. } => "NotAVectorMeasure",
            Error::MissingValue { .. } => "MissingValue",
            Error::InvalidConfig { .. } => "InvalidConfig",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

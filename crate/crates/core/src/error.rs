use thiserror::Error;

pub type Result<T, E = FanoError> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum FanoError {
    #[error("unknown root system type {0:?}")]
    UnknownType(String),
    #[error("root system has rank 0")]
    RankZero,
    #[error("Weyl group exceeds {0} elements")]
    WeylGroupTooLarge(usize),

    #[error("no outer normals given")]
    EmptyNormals,
    #[error("normal {0:?} has the wrong dimension (expected {1})")]
    DimensionMismatch(Vec<i64>, usize),
    #[error("normal {0:?} is not a primitive lattice vector")]
    NotPrimitive(Vec<i64>),
    #[error("normal {0:?} is not in the closed positive chamber")]
    OutsideChamber(Vec<i64>),
    #[error("normal {0:?} is listed more than once")]
    DuplicateNormal(Vec<i64>),
    #[error("polytope is unbounded")]
    Unbounded,
    #[error("normal {0:?} does not support a facet")]
    RedundantNormal(Vec<i64>),
    #[error("polytope is not full-dimensional")]
    Degenerate,
    #[error("simplex is degenerate")]
    DegenerateSimplex,
    #[error("label I(P) is undefined: an outer normal pairs to zero with rho")]
    LabelUndefined,

    #[error("index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("direction is not central; the group center does not contain it")]
    NotCentral,
    #[error("classification requires a semisimple group, got {0}")]
    NotSemisimple(String),
    #[error("classification supports rank 2 only, got rank {0}")]
    UnsupportedRank(usize),
    #[error("{0} candidate normals is too many to enumerate subsets")]
    TooManyCandidates(usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("no sign change of the bracket found on [{lo}, {hi}]")]
    NoSignChange { lo: String, hi: String },
    #[error("Monte-Carlo sampling accepted no points")]
    NoAcceptedSamples,

    #[error("integer overflow in exact geometry")]
    Overflow,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl FanoError {
    /// True for errors that indicate a bug or broken invariant rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, FanoError::Internal(_) | FanoError::Overflow)
    }
}

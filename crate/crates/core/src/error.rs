use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed code: {0}")]
    MalformedCode(String),
    #[error("empty diagram: no crossings")]
    EmptyDiagram,
    #[error("diagram is not a knot (it has {0} components)")]
    NotAKnot(usize),
    #[error("diagram is not alternating")]
    NotAlternating,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("piece could not be classified: {0}")]
    UnclassifiablePiece(String),
    #[error("tree automorphism fixes a band or a band/jewel edge: {0}")]
    InvariantBandViolation(String),
    #[error("tree automorphism fixes more than one point")]
    NonUniqueFixedLocus,
    #[error("not a flype site of this diagram")]
    InvalidSite,
    #[error("flype closure exceeded the budget of {0} diagrams")]
    ClosureBudgetExceeded(usize),
    #[error("inconsistent partition: {0}")]
    InconsistentPartition(String),
    #[error("knot is not negative achiral")]
    NotMinusAchiral,
    #[error("witness synthesis failed: {0}")]
    WitnessSynthesisFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;

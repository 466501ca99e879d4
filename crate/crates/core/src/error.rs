use thiserror::Error;

/// Errors raised anywhere in the pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("rewriting completion exceeded its budget of {0} steps; presentation is untamed")]
    UntamedPresentation(usize),
    #[error("the quotient element must be nonzero")]
    ZeroArgument,
    #[error("bounded search incomplete: {0}")]
    BoundExceeded(String),
    #[error("{gens} generators exceed the enumeration cap of {cap}")]
    EnumerationCapExceeded { gens: usize, cap: usize },
    #[error("idempotent search is incomplete at degree bound {0}")]
    IncompleteIdempotents(u32),
    #[error("invalid admissible block: {0}")]
    InvalidBlock(String),
    #[error("not a homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("cannot express unit image: {0}")]
    UnitExpressionFailure(String),
    #[error("invalid groupoid data: {0}")]
    InvalidGroupoid(String),
    #[error("diagram does not commute: {0}")]
    NonCommutingDiagram(String),
    #[error("parse error: {0}")]
    ParseError(String),
    #[error("restriction data is not functorial: {0}")]
    NonFunctorial(String),
    #[error("missing intersection data: {0}")]
    MissingIntersection(String),
    #[error("colimit conditions failed after stretching: {0}")]
    ConditionCheckFailed(String),
    #[error("invalid simplicial complex: {0}")]
    InvalidComplex(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::ParseError(e.to_string())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("endpoint mismatch: {0}")]
    EndpointMismatch(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("quiver is not acyclic (cycle through `{0}`)")]
    Cyclic(String),
    #[error("relation terms are not parallel: {0}")]
    NonParallelRelation(String),
    #[error("path is not composable: {0}")]
    NotComposable(String),
    #[error("morphism is not well-defined: {0}")]
    IllDefined(String),
    #[error("witness pair does not certify the claimed equation: {0}")]
    InvalidWitness(String),
    #[error("composite is not zero: {0}")]
    NonZeroComposite(String),
    #[error("expected a monomorphism: {0}")]
    NotMono(String),
    #[error("expected an epimorphism: {0}")]
    NotEpi(String),
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("unknown point `{0}`")]
    UnknownPoint(String),
    #[error("relation is not transitive: ({0},{1}) and ({1},{2}) present but ({0},{2}) missing")]
    NotTransitive(String, String, String),
    #[error("carrier of size {size} exceeds the limit of {cap}")]
    TooLarge { size: usize, cap: usize },
    #[error("relation is not round: nothing lies below `{0}`")]
    NotRound(String),
    #[error("axiom violation: {0}")]
    AxiomViolation(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("restriction is not unique: {0}")]
    NonUnique(String),
    #[error("product is not associative on ({0},{1},{2})")]
    NotAssociative(String, String, String),
    #[error("bad inverse: {0}")]
    BadInverse(String),
    #[error("product domain mismatch: {0}")]
    ProductDomainMismatch(String),
    #[error("canonical order characterisations disagree on ({0},{1})")]
    CharacterisationMismatch(String, String),
    #[error("bridge premise violated: {0}")]
    PremiseViolation(String),
    #[error("not an atlas: {0}")]
    NotAtlas(String),
    #[error("groupoid law violated: {0}")]
    GroupoidLawViolation(String),
    #[error("isomorphism failure: {0}")]
    IsomorphismFailure(String),
    #[error("invalid named set `{0}`: {1}")]
    BadNamedSet(String, String),
    #[error("invalid generator spec `{0}`")]
    BadGenerator(String),
    #[error("format error: {0}")]
    Format(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Errors caused by malformed input rather than a failed property.
    pub fn is_input_error(&self) -> bool {
        !matches!(
            self,
            Error::AxiomViolation(_)
                | Error::PreconditionFailed(_)
                | Error::NonUnique(_)
                | Error::GroupoidLawViolation(_)
                | Error::IsomorphismFailure(_)
                | Error::NotAtlas(_)
                | Error::NotRound(_)
        )
    }
}

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An index or intermediate value exceeded the supported range.
    #[error("out of range: {0}")]
    Range(String),

    /// An argument violates an operation's precondition.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// A parameter lies outside a family's admissible domain.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    /// A document could not be parsed or does not follow the interchange format.
    #[error("malformed input: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;

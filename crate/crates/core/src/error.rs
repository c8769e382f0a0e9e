use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument `{name}`: {reason}")]
    InvalidArgument { name: &'static str, reason: String },

    #[error("{value} lies outside the domain [0, {upper}] of the T function")]
    OutsideDomain { value: String, upper: String },

    #[error("({a}, {b}) does not solve a^2 - 4ab + b^2 = a + b")]
    NotASolution { a: String, b: String },

    #[error("descent reached the base case (1, 5)")]
    BaseCase,

    #[error("malformed expression: {0}")]
    MalformedExpression(String),
}

impl Error {
    pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidArgument {
            name,
            reason: reason.into(),
        }
    }
}

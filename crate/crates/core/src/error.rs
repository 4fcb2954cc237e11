use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid rational literal {0:?}")]
    ParseRational(String),

    /// The document does not match the manifold schema.
    #[error("schema violation at `{field}`: {message}")]
    Schema { field: String, message: String },

    /// The document parsed but describes an invalid structure.
    #[error("invariant violation: {0}")]
    Invariant(String),

    #[error("conformal scalar p is required for the {variant} variant but was not supplied")]
    MissingConformalScalar { variant: &'static str },

    #[error("derived identities presuppose a Kenmotsu structure; rerun with force to evaluate anyway")]
    NotKenmotsu,

    /// A computed object broke an identity it holds by construction.
    #[error("engine invariant broken: {0}")]
    Engine(String),

    #[error("unknown example {name:?}; available: {available}")]
    UnknownExample { name: String, available: String },
}

impl Error {
    pub(crate) fn schema(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Schema { field: field.into(), message: message.into() }
    }
}

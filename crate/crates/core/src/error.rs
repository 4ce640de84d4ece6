use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Broad failure class; drives the CLI exit status and the C status codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ErrorClass {
    Validation,
    Parse,
    Domain,
}

impl ErrorClass {
    pub fn exit_code(self) -> i32 {
        match self {
            ErrorClass::Validation => 1,
            ErrorClass::Parse => 2,
            ErrorClass::Domain => 3,
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid degree pair ({mu}, {nu}): {reason}")]
    InvalidDegree { mu: f64, nu: f64, reason: &'static str },

    #[error("label must not be empty")]
    EmptyLabel,

    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),

    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("{0} mismatch between operands")]
    SpaceMismatch(&'static str),

    #[error("expected {expected} values for the universe, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("parameter `{0}` is not in the parameter set but its approximation is not empty")]
    ConstraintViolation(String),

    #[error("parameter space is empty")]
    EmptyParameterSpace,

    #[error("universe is empty")]
    EmptyUniverse,

    #[error("operation `{op}` takes {expected} operand(s), got {got}")]
    Arity {
        op: String,
        expected: usize,
        got: usize,
    },

    #[error("malformed input: {0}")]
    Parse(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("{location}: {source}")]
    At {
        location: String,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub fn at(self, location: impl Into<String>) -> Error {
        Error::At {
            location: location.into(),
            source: Box::new(self),
        }
    }

    pub fn class(&self) -> ErrorClass {
        match self {
            Error::InvalidDegree { .. }
            | Error::EmptyLabel
            | Error::DuplicateLabel(_)
            | Error::UnknownLabel(_)
            | Error::SpaceMismatch(_)
            | Error::LengthMismatch { .. }
            | Error::ConstraintViolation(_) => ErrorClass::Validation,
            Error::EmptyParameterSpace | Error::EmptyUniverse => ErrorClass::Domain,
            Error::Arity { .. } | Error::Parse(_) | Error::Io { .. } => ErrorClass::Parse,
            Error::At { source, .. } => source.class(),
        }
    }

    /// Strips location wrappers.
    pub fn root(&self) -> &Error {
        match self {
            Error::At { source, .. } => source.root(),
            other => other,
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Parse(err.to_string())
    }
}

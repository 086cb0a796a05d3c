use thiserror::Error;

/// Errors raised by the library. Each variant maps onto one CLI exit code.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed input or a value that violates its type's rules.
    #[error("invalid input: {0}")]
    Invalid(String),

    /// A tableau, path or divisor does not fit the graph or shape it was paired with.
    #[error("shape mismatch: {0}")]
    Shape(String),

    /// The operation needs a generic chain of loops.
    #[error("graph is not generic: {0}")]
    NonGeneric(String),

    /// An internal consistency check failed. Always a bug or an input outside
    /// the documented preconditions.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Invalid(_) => 1,
            Error::Shape(_) => 2,
            Error::NonGeneric(_) => 3,
            Error::Invariant(_) => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

macro_rules! invalid {
    ($($arg:tt)*) => { $crate::error::Error::Invalid(format!($($arg)*)) };
}

macro_rules! shape {
    ($($arg:tt)*) => { $crate::error::Error::Shape(format!($($arg)*)) };
}

macro_rules! broken {
    ($($arg:tt)*) => { $crate::error::Error::Invariant(format!($($arg)*)) };
}

pub(crate) use {broken, invalid, shape};

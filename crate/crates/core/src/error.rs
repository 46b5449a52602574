use thiserror::Error;

use crate::algebra::Side;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("field order {0} is not a supported prime (2 <= p <= 251)")]
    BadFieldOrder(u32),

    #[error("structure constants are not associative on basis triple ({0}, {1}, {2})")]
    NonAssociative(usize, usize, usize),

    #[error("declared unit fails to act as identity on basis element {0}")]
    UnitFailure(usize),

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("action matrices do not define a {side} module: {reason}")]
    InvalidModule { side: Side, reason: String },

    #[error("modules live over different algebras or sides")]
    Incompatible,

    #[error("enumeration budget exceeded (cap {0})")]
    BudgetExceeded(usize),

    #[error("catalog is incomplete up to the requested bound")]
    IncompleteCatalog,

    #[error("simple summand matches no simple class")]
    UnmatchedSimple,

    #[error("no embedding found into the constructed hull")]
    NoEmbeddingFound,

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("unknown builtin `{0}`")]
    UnknownBuiltin(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code for the command-line surface.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::BudgetExceeded(_) | Error::IncompleteCatalog => 3,
            Error::UnmatchedSimple | Error::NoEmbeddingFound | Error::Invariant(_) => 4,
            _ => 2,
        }
    }
}

use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division leaves a nonzero remainder")]
    NonExactDivision,
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("empty input")]
    EmptyInput,
    #[error("constant term must be +1 or -1 for an integral series inverse")]
    NonUnitConstantTerm,
    #[error("series truncation orders differ ({0} vs {1})")]
    TruncationMismatch(usize, usize),
    #[error("the zero polynomial has no cyclotomic factorization")]
    ZeroInput,
    #[error("polynomial vanishes at 0; strip powers of x first")]
    NonUnitAtZero,
    #[error("constant term must be 1")]
    ConstantTermNotOne,
    #[error("generators have gcd {0}, expected 1")]
    GcdNotOne(u64),
    #[error("{0} and {1} are not coprime")]
    NotCoprime(u64, u64),
    #[error("a two-generator semigroup needs generators >= 2, got {0} and {1}")]
    GeneratorTooSmall(u64, u64),
    #[error("{relations} relations exceed {variables} variables")]
    TooManyRelations { relations: usize, variables: usize },
    #[error("degree must be positive")]
    NonPositiveDegree,
    #[error("reduced denominator is not a power of (1 - x)")]
    NotStandardGraded,
    #[error("h-vector of length {len} does not fit dimension {dim}")]
    DimensionTooSmall { len: usize, dim: usize },
    #[error("fitted h-polynomial did not stabilize within bound {0}; raise the bound")]
    FitDidNotStabilize(usize),
    #[error("generator ({0}, {1}) does not have the common total degree {2}")]
    MixedDegrees(u64, u64, u64),
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("survey stopped with {0} subtrees pending; rerun with resume")]
    Interrupted(usize),
    #[error("{path}:{line}: malformed record: {message}")]
    MalformedRecord {
        path: PathBuf,
        line: usize,
        message: String,
    },
    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

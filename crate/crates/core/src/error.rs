use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: String, right: String },

    #[error("not a complex: composite is nonzero on column {column}")]
    NotAComplex { column: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("unknown generator '{0}'")]
    UnknownGenerator(String),
    #[error("generator '{0}' has no inverse")]
    NonInvertibleInverse(String),
    #[error("'{0}' is not grouplike")]
    NotGrouplike(String),
    #[error("invalid modular pair: {0}")]
    InvalidPair(String),
    #[error("invalid group table: {0}")]
    InvalidGroupTable(String),
    #[error("presentation is not confluent; critical word {word}")]
    NonConfluentPresentation { word: String },
    #[error("instance is not cocommutative")]
    NotCocommutative,
    #[error("instance is not commutative")]
    NotCommutative,
    #[error("trace axioms fail: {0}")]
    TraceAxiomsFail(String),
    #[error("S_sigma^2 != id, witness {0}")]
    InvolutionFails(String),

    #[error("result escapes the truncation: {0}")]
    CapExceeded(String),
    #[error("complex cannot be truncated: {0}")]
    NotTruncatable(String),

    #[error("parse error: {0}")]
    Parse(String),
    #[error("configuration error: {0}")]
    Config(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

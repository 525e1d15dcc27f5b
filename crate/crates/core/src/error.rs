use std::path::PathBuf;

use thiserror::Error;

/// Everything that can go wrong in the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not positive (d must be at least 2)")]
    NotPositive(i64),
    #[error("{n} is divisible by {p}^2")]
    NotSquarefree { n: i64, p: i64 },
    #[error("{0} is a perfect square")]
    PerfectSquare(i64),
    #[error("operands belong to different fields Q(√{0}) and Q(√{1})")]
    MixedFields(u64, u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("exponent must be nonzero")]
    ZeroExponent,
    #[error("unit {0} has zero √d-coordinate and cannot seed a sequence")]
    ZeroIrrationalPart(String),
    #[error("unit {0} has zero rational coordinate; Lucas terms are undefined")]
    ZeroRationalPart(String),
    #[error("index {0} must be at least 1")]
    NonPositiveIndex(i64),
    #[error("invalid range {from}..{to}")]
    InvalidRange { from: i64, to: i64 },
    #[error("unknown identity tag `{0}`")]
    UnknownIdentity(String),
    #[error("x = {0} lies outside the radius of convergence")]
    OutsideRadius(String),
    #[error("x = {0} is a pole of the generating function")]
    PoleHit(String),
    #[error("precision of {0} digits is outside [1, 10000]")]
    InvalidPrecision(u32),
    #[error("continued fraction period exceeded the cap of {0} steps")]
    ResourceLimit(usize),
    #[error("malformed A-number `{0}`")]
    BadANumber(String),
    #[error("network error: {0}")]
    Network(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{a_number} is not cached in {} and offline mode is set", dir.display())]
    CacheMiss { a_number: String, dir: PathBuf },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

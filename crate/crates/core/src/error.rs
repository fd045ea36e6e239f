use thiserror::Error;

/// Errors raised by domain operations and the algorithms built on them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero element")]
    DivisionByZero,

    #[error("euclidean value is undefined for the zero element")]
    EuclideanValueOfZero,

    #[error("operation requires a nonzero nonunit element")]
    UnitOrZero,

    #[error("modulus must be prime (got {0})")]
    ModulusNotPrime(u64),

    #[error("unknown domain selector {0:?} (expected \"z\", \"zi\", \"fp:<p>\" or \"qx\")")]
    UnknownDomain(String),

    #[error("instance not finitely enumerable per euclidean value")]
    NotEnumerable,

    #[error("enumeration bound {bound} is below f(1) = {min}")]
    EnumerationBound { bound: i64, min: i64 },

    #[error("operation requires a nonzero input")]
    ZeroInput,

    #[error("not guaranteed Egyptian: use bonaccian_split")]
    NotGuaranteedEgyptian,

    #[error("target must lie strictly between 0 and 1: use integer_expand first")]
    GreedyRange,

    #[error("target must be a positive rational")]
    NonPositiveTarget,

    #[error("valuation undefined: R(D) is a field")]
    ValuationUndefined,

    #[error("statement vacuous: D is contained in R(D)")]
    IntersectionVacuous,

    #[error("certificate contains a zero denominator")]
    ZeroDenominator,

    #[error("search budget exhausted after {states} states")]
    SearchBudgetExhausted { states: u64 },

    #[error("certificate domain {found:?} does not match the requested domain {expected:?}")]
    DomainMismatch { expected: String, found: String },

    #[error("{0}")]
    Parse(#[from] ParseError),
}

/// A syntax error in an element, fraction or certificate encoding.
///
/// `position` is a byte offset into the offending input when one is known.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} (at byte {position})")]
pub struct ParseError {
    pub message: String,
    pub position: usize,
}

impl ParseError {
    pub fn new(message: impl Into<String>, position: usize) -> Self {
        ParseError {
            message: message.into(),
            position,
        }
    }
}

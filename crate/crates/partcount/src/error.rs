use thiserror::Error;

/// Errors surfaced by the counting operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("argument `{0}` must be positive")]
    ZeroArgument(&'static str),

    #[error("gcd of an empty sequence is undefined")]
    EmptyGcd,

    #[error("gcd of an all-zero sequence is undefined")]
    AllZeroGcd,

    #[error("interval bounds out of order: a = {a} > b = {b}")]
    IntervalOutOfOrder { a: u64, b: u64 },

    #[error("count overflow while evaluating {context}")]
    Overflow { context: String },

    #[error("invalid query: field `{field}`: {reason}")]
    InvalidQuery { field: &'static str, reason: String },

    #[error("signed inversion produced a negative total for n = {n}")]
    NegativeInversion { n: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;

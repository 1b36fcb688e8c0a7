use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A parameter violates the domain a routine is defined on.
    #[error("parameter out of domain: {0}")]
    Domain(String),

    /// A running product left the representable range.
    #[error("numeric overflow in {0}")]
    Overflow(&'static str),

    /// A denominator factor of a Pochhammer ratio is zero.
    #[error("pole in Pochhammer ratio: denominator factor at offset {offset} is zero")]
    Pole { offset: usize },

    /// The sampling grid cannot resolve a trigonometric polynomial of this degree.
    #[error("grid too coarse: {count} points for degree {degree} (need at least {required})")]
    GridTooCoarse {
        count: usize,
        degree: usize,
        required: usize,
    },

    /// A coefficient sequence is shorter than an operation requires.
    #[error("coefficient sequence too short: have {have}, need {need}")]
    Length { have: usize, need: usize },

    /// A name did not match any catalog function.
    #[error("unknown starlike function: {0}")]
    UnknownFunction(String),

    /// Coefficient sequences must hold at least one entry.
    #[error("empty coefficient sequence")]
    Empty,

    /// Coefficients must be finite.
    #[error("non-finite coefficient at index {0}")]
    NonFinite(usize),
}

pub type Result<T> = std::result::Result<T, Error>;

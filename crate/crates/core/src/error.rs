use thiserror::Error;

use crate::rootsys::Weight;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("weight has {got} coordinates, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("weight {0} is not dominant")]
    NotDominant(Weight),

    #[error("invalid rank {rank} for type {family}")]
    InvalidRank { family: String, rank: usize },

    #[error("{what} = {value} is out of range ({range})")]
    OutOfRange {
        what: &'static str,
        value: i64,
        range: String,
    },

    #[error("{0} does not apply to {1}")]
    WrongFamily(&'static str, String),

    #[error("cannot parse {0}")]
    Parse(String),

    /// An internal identity failed; indicates a bug or a non-invariant input.
    #[error("consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn out_of_range(what: &'static str, value: impl Into<i64>, range: String) -> Error {
    Error::OutOfRange {
        what,
        value: value.into(),
        range,
    }
}

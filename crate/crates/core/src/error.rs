use thiserror::Error;

use crate::perm::DoubleDescentWitness;

/// Errors produced by parsing, validation and the maps between structures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("not a permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid tree: {0}")]
    InvalidTree(String),

    #[error("invalid Motzkin path: {0}")]
    InvalidPath(String),

    #[error("invalid composition: {0}")]
    InvalidComposition(String),

    #[error("not simsun: {0}")]
    NotSimsun(DoubleDescentWitness),

    /// The input is well formed but lies outside the domain of the requested map.
    #[error("outside domain: {0}")]
    Domain(String),

    #[error("{what} = {value} out of range {range}")]
    OutOfRange {
        what: &'static str,
        value: usize,
        range: String,
    },

    #[error("unknown name: {0}")]
    UnknownName(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use alloc::string::String;
use core::fmt;

/// Errors raised by the combinatorics engine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A Coxeter matrix entry violates the accepted shape.
    InvalidMatrix {
        row: usize,
        col: usize,
        entry: i64,
        reason: &'static str,
    },
    /// Rank outside the supported range.
    InvalidRank(usize),
    /// Generator index outside `1..=rank`.
    InvalidGenerator { index: usize, rank: usize },
    /// A word that must be reduced is not.
    NotReduced,
    /// `u <= w` was required but does not hold.
    NotBelow,
    /// The element is not a member of the given interval or subset.
    NotMember,
    /// The operation is not available for this backend.
    Backend(&'static str),
    /// An element literal could not be parsed.
    Parse(String),
    /// Two independent computations disagreed. Always an implementation bug.
    Inconsistent(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidMatrix {
                row,
                col,
                entry,
                reason,
            } => write!(
                f,
                "coxeter matrix entry m[{row}][{col}] = {entry}: {reason}"
            ),
            Error::InvalidRank(n) => write!(f, "unsupported rank {n}"),
            Error::InvalidGenerator { index, rank } => {
                write!(f, "generator s{index} out of range for rank {rank}")
            }
            Error::NotReduced => f.write_str("word is not reduced"),
            Error::NotBelow => f.write_str("element is not below w in Bruhat order"),
            Error::NotMember => f.write_str("element is not a member of the interval"),
            Error::Backend(msg) => write!(f, "unsupported for this backend: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::Inconsistent(msg) => write!(f, "internal consistency failure: {msg}"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;

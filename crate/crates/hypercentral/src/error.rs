//! Error types shared across the crate.

use thiserror::Error;

/// Everything that can go wrong while building or transforming groups,
/// actions, series, and bounds.
#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("table is not closed: entry at row {row}, col {col} is {value}, outside [0, {order})")]
    NotClosed {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },

    #[error("table is not associative: ({a}*{b})*{c} = {lhs} but {a}*({b}*{c}) = {rhs}")]
    NotAssociative {
        a: usize,
        b: usize,
        c: usize,
        lhs: usize,
        rhs: usize,
    },

    #[error("table has no two-sided identity element")]
    NoIdentity,

    #[error("element {elem} has no two-sided inverse")]
    NoInverse { elem: usize },

    #[error("table is not square: row {row} has length {len}, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },

    #[error("subgroup is not normal in its parent: conjugate of {elem} by {by} escapes")]
    NotNormal { elem: usize, by: usize },

    #[error("{what} of size {size} exceeds the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("subgroup is not invariant under automorphism #{auto}: image of {elem} escapes")]
    NotInvariant { auto: usize, elem: usize },

    #[error("series terms do not form an ascending chain at position {position}")]
    NotAChain { position: usize },

    #[error("{value} is not an odd prime")]
    NotOddPrime { value: u64 },

    #[error("bound evaluation overflowed at t = {t}")]
    Overflow { t: u64 },

    #[error("premise failed: {reason}")]
    PremiseFailed { reason: String },

    #[error("map is not multiplication-preserving at ({a}, {b})")]
    NotHomomorphism { a: usize, b: usize },

    #[error("map is not a bijection: {value} is hit twice or missed")]
    NotBijective { value: usize },

    #[error("element index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("parse error at line {line}, col {col}: {message}")]
    Parse {
        line: usize,
        col: usize,
        message: String,
    },

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

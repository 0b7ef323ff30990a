use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An operation was called outside its documented parameter range.
    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("not invertible: {0}")]
    NotInvertible(&'static str),

    /// A brute-force enumeration would visit more candidates than allowed.
    #[error("enumeration refused: {projected} candidates exceed the cap of {cap}")]
    CapExceeded { projected: BigUint, cap: u64 },

    /// An exact division that a closed formula guarantees left a remainder.
    #[error("inexact division: {0}")]
    InexactDivision(String),

    /// A computed object failed a structural property it must satisfy.
    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("i/o error: {0}")]
    Io(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

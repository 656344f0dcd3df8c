//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("image list of length {len} is not a bijection of 0..{len}")]
    NotABijection { len: usize },

    #[error("degree {0} exceeds the cap of {1}")]
    DegreeCap(usize, usize),

    #[error("not a group table: {0}")]
    NotAGroup(String),

    #[error("group is not abelian")]
    NotAbelian,

    #[error("parameter out of range: {0}")]
    Parameter(String),

    #[error("the given set is not a subgroup")]
    NotASubgroup,

    #[error("the given subgroup is not normal")]
    NotNormal,

    #[error("the action does not map into automorphisms: {0}")]
    BadAction(String),

    #[error("permutation group is not transitive")]
    Intransitive,

    #[error("not an association scheme: {0}")]
    NotAScheme(String),

    #[error("color partition is not transpose-closed")]
    NotTransposeClosed,

    #[error("valency pattern not matched: {0}")]
    PatternUnmatched(String),

    #[error("not a difference set: {0}")]
    NotADifferenceSet(String),

    #[error("not a valid S-ring partition: {0}")]
    NotAnSRing(String),

    #[error("the permutation group does not contain the right regular representation")]
    MissingRegularGroup,

    #[error("incompatible operands: {0}")]
    Incompatible(String),

    #[error("search budget exhausted after {nodes} nodes")]
    BudgetExhausted { nodes: u64 },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

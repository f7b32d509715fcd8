use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// `L ∩ N^n` contains a nonzero vector; `witness` is one such vector when known.
    #[error("lattice is not pointed (nonzero nonnegative lattice vector {witness:?})")]
    NotPointed { witness: Vec<i64> },

    #[error("dimension mismatch: expected length {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("lattice generators are linearly dependent")]
    DependentRows,

    #[error("semigroup generator in column {column} is the zero vector")]
    ZeroGenerator { column: usize },

    #[error("semigroup matrix has no generators")]
    NoGenerators,

    #[error("exponent vector {0:?} has a negative entry")]
    NegativeExponent(Vec<i64>),

    #[error("gcd of the empty set is undefined")]
    EmptySet,

    #[error("fiber is empty")]
    EmptyFiber,

    #[error("vector {0:?} is not in the lattice")]
    NotInLattice(Vec<i64>),

    #[error("lattice subset is empty")]
    EmptySubset,

    #[error("grading vector {0:?} is not strictly positive and orthogonal to the lattice")]
    BadGrading(Vec<i64>),

    #[error("face {0} of a basic component is missing from the poset (scan bound too small)")]
    MissingFace(String),

    #[error("degree {0:?} has no integer preimage")]
    NoPreimage(Vec<i64>),

    #[error("GF({0}) is not a prime field")]
    InvalidField(u64),

    #[error("integer overflow in exact arithmetic")]
    Overflow,

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid field `{field}`: {message}")]
    Invalid { field: String, message: String },
}

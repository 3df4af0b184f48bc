use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VarCountMismatch { left: usize, right: usize },

    #[error("variable index {index} out of range for {nvars} variables")]
    IndexOutOfRange { index: usize, nvars: usize },

    #[error("not a permutation of 1..={0}")]
    NotAPermutation(usize),

    #[error("zero substituted into a negative power of variable {0}")]
    ZeroToNegativePower(usize),

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("not exactly divisible; remainder starts with {witness}")]
    NotDivisible { witness: String },

    #[error("not invariant under z{var} -> 1/z{var}; difference starts with {witness}")]
    NotInversionInvariant { var: usize, witness: String },

    #[error("expected a polynomial (non-negative exponents) in variable {0}")]
    NotPolynomial(usize),

    #[error("bottom row must be strictly increasing, got {0:?}")]
    NotStrictlyIncreasing(Vec<i64>),

    #[error("{what} out of range: {detail}")]
    OutOfRange { what: &'static str, detail: String },

    #[error("constant vector has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("operator needs two distinct variables, got {0} twice")]
    EqualVariables(usize),

    #[error("negative power {0} for a difference operator; use the right inverse")]
    NegativePower(i32),

    #[error("seed polynomial is not antisymmetric (swap of variables {0} and {1})")]
    NotAntisymmetric(usize, usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid word: prefix {prefix} has more S than T steps")]
    InvalidWord { prefix: String },

    #[error("cannot parse `{0}`")]
    Parse(String),

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("invalid bounds: {0}")]
    InvalidBounds(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("exponent vector has length {found}, ring has {expected} variables")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("operands live in different rings")]
    RingMismatch,

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("operation is undefined on the zero ideal")]
    ZeroIdeal,

    #[error("operation is undefined on the unit ideal")]
    UnitIdeal,

    #[error("colon iteration did not stabilize within n_max = {n_max}; raise n_max")]
    NoStabilization { n_max: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("ideal is not primary to the maximal ideal")]
    NotMPrimary,

    #[error("operation requires exactly two variables, ring has {0}")]
    NotTwoVariables(usize),

    #[error("invalid derivation: {0}")]
    InvalidDerivation(String),

    #[error("exponent matrix of the monomial map is singular")]
    SingularExponentMatrix,

    #[error("invalid monomial map: {0}")]
    InvalidMap(String),

    #[error("target coordinate {index} does not vanish on any source variable")]
    ZeroWeight { index: usize },

    #[error("weight vector must be nonnegative and nonzero")]
    InvalidWeight,

    #[error("derivation does not lift regularly along the critical coordinates")]
    NotLiftable,

    #[error("degree box exceeded the cap of {cap} per coordinate")]
    DegreeCapExceeded { cap: i64 },

    #[error("facet enumeration supports at most {cap} variables, ring has {n}")]
    TooManyVariables { n: usize, cap: usize },

    #[error("invalid numerical semigroup: {0}")]
    InvalidSemigroup(String),

    #[error("semigroup ideal has no generators")]
    EmptySemigroupIdeal,

    #[error("syntax error at {line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown variable `{name}` at {line}:{column}")]
    UnknownVariable {
        name: String,
        line: usize,
        column: usize,
    },

    #[error("negative exponent at {line}:{column}")]
    NegativeExponent { line: usize, column: usize },
}

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable-count mismatch: {left} vs {right}")]
    VariableMismatch { left: u8, right: u8 },

    #[error("number of variables must be 1 or 2, got {0}")]
    BadVariableCount(u8),

    #[error(
        "operator maps basis monomial {monomial} outside the space of total degree <= {max_degree}"
    )]
    DegreeOverflow { monomial: String, max_degree: u32 },

    #[error("operator term {term} does not strictly lower the total degree")]
    NotNilpotent { term: String },

    #[error("matrix dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("supplied inverse does not invert the transform (max deviation {deviation})")]
    NotInverse { deviation: String },

    #[error("parameter must be nonzero: {0}")]
    ZeroParameter(&'static str),

    #[error("lambda form is not positive definite: need a > 0, c > 0 and a*c - b^2 > 0 (got a*c - b^2 = {det})")]
    NotPositiveDefinite { det: String },

    #[error("no coefficient choice satisfies the commutation relations")]
    NoSolution,

    #[error("precision must be at least 15 decimal digits, got {0}")]
    InvalidPrecision(u32),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

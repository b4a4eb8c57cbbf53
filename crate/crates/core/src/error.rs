use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("minimal polynomial is not squarefree")]
    NotSquarefree,
    #[error("minimal polynomial must have degree at least 1")]
    ConstantModulus,
    #[error("root index {index} out of range for a degree-{degree} field")]
    InvalidRootIndex { index: usize, degree: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is a zero divisor modulo the minimal polynomial")]
    NotInvertible,
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("invalid variable context: {0}")]
    InvalidContext(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("ideal is not homogeneous")]
    NotHomogeneous,
    #[error("polynomial is not homogeneous of degree {0}")]
    WrongDegree(u32),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("eigenvalue iteration did not converge")]
    NoConvergence,
    #[error("ideal is not zero-dimensional (projective dimension {0})")]
    NotZeroDimensional(i64),
    #[error("cubic is not a cone over the last variable")]
    NotACone,
    #[error("plane conditions violated: {0}")]
    ConditionsViolated(String),
}

pub type Result<T> = std::result::Result<T, Error>;

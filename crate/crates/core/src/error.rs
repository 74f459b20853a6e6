use thiserror::Error;

/// Errors raised by the monomial and ideal engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: {left} variables vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("a monomial needs at least one variable")]
    NoVariables,

    #[error("exponent overflow (cap {cap})")]
    ExponentOverflow { cap: u64 },

    #[error("variable index x{index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },

    #[error("cannot parse monomial {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("power exponent must be at least 1")]
    ZeroPower,

    #[error("the unit ideal is not representable")]
    UnitIdeal,

    #[error("operation is undefined on the zero ideal")]
    ZeroIdeal,

    #[error("colon by the zero ideal")]
    ZeroDivisorIdeal,

    #[error("ideal is not squarefree")]
    NotSquarefree,

    #[error("invalid irreducible component: {0}")]
    InvalidComponent(String),

    #[error("invalid variable prime: {0}")]
    InvalidPrime(String),

    #[error("{nvars} variables exceed the enumeration cap of {cap}")]
    EnumerationCap { nvars: usize, cap: usize },

    #[error("time budget exhausted")]
    BudgetExhausted,
}

/// Errors raised by the path family and closed-form predictions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("Ind_{t}(P_{n}) is the zero ideal (needs n >= 2t - 1)")]
    ZeroIdeal { n: usize, t: usize },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("prime {prime} is not predicted for n={n}, t={t}, k={k}")]
    NotPredicted {
        prime: String,
        n: usize,
        t: usize,
        k: usize,
    },

    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;

use thiserror::Error;

/// Errors raised by the algebra library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid index ({i}, {j})")]
    Index { i: usize, j: usize },
    #[error("malformed scalar literal {0:?}")]
    ScalarSyntax(String),
    #[error("symmetrized product is not hermitian at entry ({0}, {1})")]
    NotHermitian(usize, usize),
    #[error("operator is not linear: probe {0} disagrees")]
    LinearityViolation(usize),
    #[error("standard basis construction failed: {0}")]
    Construction(String),
    #[error("element does not lie in the subalgebra")]
    NotInSubalgebra,
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("radical verification failed: {0}")]
    RadicalVerification(String),
    #[error("element must be nonzero")]
    ZeroElement,
    #[error("element is not in the spin factor C = Φ(e1-e2) ⊕ J12")]
    NotInC,
    #[error("unknown subalgebra name {0:?}")]
    UnknownName(String),
    #[error("neither normalization of `a` yields an automorphism")]
    NoAutomorphism,
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;

use thiserror::Error;

use crate::places::Place;

/// Errors raised across the toolkit.
///
/// Mathematical verdicts (a polynomial is not Salem, two lattices are not
/// commensurable) are values, not errors. Errors signal invalid input, a
/// violated precondition, or an exhausted search.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("generators are rank deficient (rank {rank}, expected {expected})")]
    Rank { rank: usize, expected: usize },
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("quadratic form is singular")]
    SingularForm,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,
    #[error("polynomial is not reciprocal of even degree")]
    NotReciprocal,
    #[error("polynomial is not epsilon-symmetric")]
    NotSymmetric,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("polynomial is not a Salem polynomial: {0}")]
    NotSalem(String),
    #[error("degree {degree} exceeds n+1 = {bound}")]
    DimensionTooSmall { degree: usize, bound: usize },
    #[error("dimension must be at least 2, got {0}")]
    InvalidDimension(usize),
    #[error("Hilbert symbol argument is zero")]
    ZeroArgument,
    #[error("zero element has no square class")]
    ZeroElement,
    #[error("search exhausted below ceiling {ceiling}")]
    SearchExhausted { ceiling: u64 },
    #[error("{0} is a local square at {1}; no algebra with that slot ramifies there")]
    UnsatisfiableLocalCondition(String, Place),
    #[error("form is not admissible: {0}")]
    Admissibility(String),
    #[error("certificate check failed: {0}")]
    CheckFailed(String),
    #[error("element is not invertible in the trace field")]
    SingularElement,
    #[error("no sign choice gives determinant +1: {0}")]
    DetSign(String),
    #[error("characteristic polynomial has non-integral coefficients")]
    NotIntegralCharPoly,
    #[error("matrix does not preserve the form")]
    NotIsometry,
    #[error("no eigenvalue off the unit circle")]
    NoHyperbolicEigenvalue,
    #[error("more than one factor has roots off the unit circle")]
    MultipleOffCircleFactors,
    #[error("integer too large to factor: {0}")]
    TooLarge(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

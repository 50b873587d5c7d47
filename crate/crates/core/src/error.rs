use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero divisor")]
    ZeroDivisor,
    #[error("gcd of (0, 0) is undefined")]
    BothZero,
    #[error("not congruent to (1,0) mod 2")]
    NotCongruent,
    #[error("element is not real")]
    NotReal,
    #[error("matrix is not in O(M)")]
    NotOrthogonal,
    #[error("matrix is not in O+(M)")]
    NotOrientationPreserving,
    #[error("matrix is not invertible over the coefficient ring")]
    NotInvertible,
    #[error("chart escape: first coordinate of the image is zero")]
    ChartEscape,
    #[error("point is not in the period domain component D_M+")]
    NotInDomain,
    #[error("matrix is not in the Hermitian upper half space")]
    NotInH2,
    #[error("matrix is not in {0}")]
    NotMember(&'static str),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("Sylvester degenerate for mu: some lambda_i is zero")]
    SylvesterDegenerate,
    #[error("zero vector has no orthogonal complement")]
    ZeroVector,
    #[error("value does not fit in 128-bit integers: {0}")]
    Overflow(&'static str),
    #[error("internal invariant violation: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invariant<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Invariant(msg.into()))
}

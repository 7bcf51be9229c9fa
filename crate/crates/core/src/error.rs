use crate::arith::AlgError;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: expected {expected}")]
    Syntax { pos: usize, expected: String },
    #[error("leading y-coefficient is not 1")]
    NotMonic,
    #[error("polynomial is not reduced: Res_y(f, f_y) = 0")]
    NonReduced,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("empty support")]
    EmptySupport,
    #[error("zero Jacobian")]
    ZeroJacobian,
    #[error("truncation too short: {0}")]
    TruncationTooShort(String),
    #[error("curve is not generic: {0}")]
    NotGeneric(String),
    #[error("no sequence classification validates: {0}")]
    ContradictionWitness(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error(transparent)]
    Alg(#[from] AlgError),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown preset `{0}` (expected `tribonacci` or `third_order_jacobsthal`)")]
    UnknownPreset(String),

    #[error("invalid exact scalar `{0}` (expected an integer or a fraction like 3/2)")]
    InvalidScalar(String),

    #[error("expected six comma-separated values r,s,t,V0,V1,V2, got {0}")]
    InvalidParams(usize),

    #[error("delta = r+s+t-1 is zero; the closed-form sum is undefined")]
    DegenerateDelta,

    #[error("characteristic polynomial has repeated roots; Binet formula is undefined")]
    DegenerateRoots,

    #[error("identity is only stated for the tribonacci preset")]
    UnsupportedParams,

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

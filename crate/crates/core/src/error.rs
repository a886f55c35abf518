use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arithmetic overflow: value exceeds 64-bit range")]
    Overflow,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("input must be positive")]
    NonPositive,

    #[error("invalid family (m={m}, t={t}): need m >= 3 and t >= 1")]
    InvalidFamily { m: u64, t: u64 },

    #[error("index c={c} is outside the valid domain for m={m}")]
    IndexDomain { m: u64, c: i64 },

    #[error("invalid representation for (m={m}, t={t}, n={n}): {reason}")]
    InvalidRepresentation {
        m: u64,
        t: u64,
        n: u64,
        reason: &'static str,
    },

    #[error("invalid negative discriminant {0}")]
    InvalidDiscriminant(i64),

    #[error("form [{a},{b},{c}] is not positive definite")]
    NotPositiveDefinite { a: i64, b: i64, c: i64 },

    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),

    #[error("class number {h} is not supported here")]
    UnsupportedClassNumber { h: usize },

    #[error("no closed form for ({m},{t})")]
    UnsupportedFamily { m: u64, t: u64 },

    #[error("closed form produced a non-integral count for (m={m}, t={t}, n={n})")]
    NonIntegral { m: u64, t: u64, n: u64 },

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
}

use thiserror::Error;

use crate::cosets::VerificationReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("level must be at least 2, got {0}")]
    InvalidLevel(i64),

    #[error("{value} is not a unit modulo {modulus}")]
    NotAUnit { value: i64, modulus: i64 },

    #[error("({a}:{b}) is not on the projective line modulo {modulus}: gcd(a, b, N) > 1")]
    NotOnProjLine { a: i64, b: i64, modulus: i64 },

    #[error("({a}:{b}) is an affine point modulo {modulus}; M is only defined at infinity")]
    NotInH { a: i64, b: i64, modulus: i64 },

    #[error("representatives {first} and {second} are the same element of PSL2(Z)")]
    DuplicateVertex { first: String, second: String },

    #[error("coset verification failed: {0}")]
    VerificationFailed(Box<VerificationReport>),

    #[error("cannot parse word {input:?}: {reason}")]
    ParseWord { input: String, reason: String },

    #[error("invalid coset list: {0}")]
    InvalidList(String),

    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

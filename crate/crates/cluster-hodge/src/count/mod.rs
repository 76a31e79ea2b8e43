//! Point counting over prime fields and the verification harness.

mod field;
mod isolated;
mod poly;
mod variety;
mod verify;

pub use field::PrimeField;
pub use isolated::{count_isolated, count_isolated_naive};
pub use poly::{interpolate, CountingPolynomial};
pub use variety::{count_tree, count_variety};
pub use verify::{verify_table, VerificationReport, Verdict, VERIFY_HELD_OUT, VERIFY_PRIMES};

use thiserror::Error;

use crate::hodge::HodgeError;
use crate::quiver::QuiverError;

/// Errors arising from counting, interpolation, and verification.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum CountError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} is too large for machine-word field arithmetic")]
    PrimeTooLarge(u64),
    #[error("point count overflows u64")]
    CountOverflow,
    #[error("need at least {needed} samples to fit degree {degree} with a held-out check, found {found}")]
    InsufficientSamples {
        needed: usize,
        degree: usize,
        found: usize,
    },
    #[error("samples repeat the evaluation point q = {0}")]
    DuplicateSample(u64),
    #[error("interpolated polynomial has a non-integer coefficient at degree {degree}")]
    NonIntegerCoefficient { degree: usize },
    #[error("held-out sample at q = {q} expected {expected}, polynomial gives {actual}")]
    HeldOutMismatch { q: u64, expected: u64, actual: i64 },
    #[error("cannot count points: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Hodge(#[from] HodgeError),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
}

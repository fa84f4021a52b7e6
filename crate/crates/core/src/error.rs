use thiserror::Error;

/// Errors raised by the library. Counting and enumeration routines are
/// total over their documented domains; errors signal either a violated
/// precondition or an internal arithmetic inconsistency (which would mean
/// a bug, never a recoverable condition).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid plane partition: {0}")]
    InvalidPlanePartition(String),

    #[error("not yet stable-shaped: n - |alpha| = {first} is smaller than alpha_1 = {alpha1}")]
    NotStableShaped { first: isize, alpha1: usize },

    #[error("size mismatch: |{left_name}| = {left} but |{right_name}| = {right}")]
    SizeMismatch {
        left_name: &'static str,
        left: usize,
        right_name: &'static str,
        right: usize,
    },

    #[error("containment violation: {0}")]
    Containment(String),

    #[error("lemma out of range: {0}")]
    LemmaOutOfRange(String),

    #[error("inexact polynomial division (remainder of degree {remainder_degree})")]
    InexactDivision { remainder_degree: usize },

    #[error("not a cyclotomic product: remainder {0}")]
    NotCyclotomicProduct(String),

    #[error("tableau is not in the bijection image: {0}")]
    NotInImage(String),

    #[error("quasipolynomial verification failed: {0}")]
    QuasipolyMismatch(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("internal arithmetic error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

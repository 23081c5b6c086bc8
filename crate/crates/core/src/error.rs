use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("non-unital factor: u_power must be at least 1")]
    NonUnitalFactor,

    #[error("basis extraction requires palindromic input")]
    NotPalindromic,

    /// Some divisor `r` of the divisibility has `r^2` not dividing `value`.
    #[error("divisibility incompatible with square: divisor {divisor} has {divisor}^2 not dividing {value}")]
    DivisibilityIncompatible { divisor: u64, value: i64 },

    #[error("instanton cross-check failed at h = {h}: {detail}")]
    InstantonCrossCheck { h: usize, detail: String },

    #[error("KKV integrality violated at h = {h}, g = {g}")]
    KkvIntegrality { h: usize, g: usize },

    #[error("no basis center reproduces the KKV values at h = 1")]
    NoBasisCenter,

    #[error("pole at tau = 1")]
    PoleAtOne,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

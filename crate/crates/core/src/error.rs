use crate::budget::BudgetExceeded;

/// Errors produced by construction and analysis routines in this crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid parameters s={s}, t={t}, n={n}: need 1 <= s <= t <= n and s dividing n")]
    InvalidParams { s: usize, t: usize, n: usize },

    #[error("{what} index {index} out of range (0..{len})")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        len: usize,
    },

    #[error("{what}: expected length {expected}, got {got}")]
    LengthMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("{what} must have length at least {min}, got {got}")]
    TooShort {
        what: &'static str,
        min: usize,
        got: usize,
    },

    #[error("window {window} contains two cells with equal charge")]
    TiedWindow { window: usize },

    #[error("not a permutation of 1..={size}")]
    InvalidPermutation { size: usize },

    #[error("invalid symbol value {value}: expected 0..={max}")]
    InvalidSymbol { value: u8, max: u8 },

    #[error("invalid character {found:?} at position {index}: expected one of {allowed}")]
    InvalidDigit {
        index: usize,
        found: char,
        allowed: &'static str,
    },

    #[error("windows {first} and {second} rank their shared cells inconsistently")]
    InconsistentOverlap { first: usize, second: usize },

    #[error("order constraints contain a cycle: no charge configuration demodulates to this word")]
    NotRealizable,

    #[error("symbol at position {index} is not followed by an admissible successor")]
    SuccessionViolation { index: usize },

    #[error("no cyclic code with the requested structure exists for n={n}")]
    UnsupportedN { n: usize },

    #[error("transition graph for n={n}, w={w} has {vertices} vertices, above the limit of {limit}")]
    GraphTooLarge {
        n: usize,
        w: usize,
        vertices: u128,
        limit: u128,
    },

    #[error("count methods disagree at n={n}: orders={orders}, scan={scan}")]
    CountMismatch { n: usize, orders: u64, scan: u64 },

    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
}

use thiserror::Error;

/// Everything that can go wrong in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("cannot parse `{input}` as a rational number")]
    ParseRational { input: String },

    #[error("invalid parameter {name}: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    /// The requested construction only exists for `q = 1`.
    #[error("{method} requires q = 1 (got q = {q})")]
    UnsupportedQ { method: &'static str, q: u32 },

    #[error("index {name} = {value} outside {range}")]
    IndexOutOfRange {
        name: &'static str,
        value: usize,
        range: String,
    },

    #[error("gamma ratio with descending arguments (hi = {hi} < lo = {lo})")]
    DescendingGammaRatio { hi: usize, lo: usize },

    #[error("composition expansion at n = {n} exceeds the cap of {cap} (2^(n-1) terms)")]
    CompositionCapExceeded { n: usize, cap: usize },

    #[error("matrix violates the unit-superdiagonal lower-Hessenberg shape: {0}")]
    NotHessenberg(String),

    #[error("domain error: {0}")]
    Domain(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

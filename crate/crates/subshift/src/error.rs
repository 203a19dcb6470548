//! Error type shared by the whole crate.

use thiserror::Error;

/// Coarse error class, used by the CLI to pick an exit code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorCategory {
    /// Malformed or inconsistent input (exit code 2).
    Input,
    /// A computation would exceed a configured budget (exit code 3).
    Budget,
    /// Not enough decimal precision to decide a result exactly (exit code 4).
    Precision,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("alphabet mismatch: size {left} vs size {right}")]
    AlphabetMismatch { left: u32, right: u32 },

    #[error("symbol {symbol} out of range for alphabet of size {alphabet}")]
    SymbolOutOfRange { symbol: u32, alphabet: u32 },

    #[error("invalid alphabet size {size}: must be in 1..=65536")]
    InvalidAlphabetSize { size: u64 },

    #[error("{context}: empty block not allowed")]
    EmptyBlock { context: &'static str },

    #[error("{what} needs {required} items, over the cap of {cap}")]
    Budget {
        what: &'static str,
        required: String,
        cap: String,
    },

    #[error("prefix chain broken at level {level}: block is not extended by its successor")]
    PrefixViolation { level: usize },

    #[error("point is only defined up to length {available}, requested {requested}")]
    PrefixExhausted { available: usize, requested: usize },

    #[error("target needs at least {required} fractional digits, only {available} given")]
    InsufficientDigits { required: usize, available: usize },

    #[error(
        "round-up at {position} digits is undecidable: all known later digits are zero \
         and the expansion is marked as truncated"
    )]
    UndecidableRounding { position: usize },

    #[error("construction depth {requested} exceeds the cap of {cap}")]
    DepthCap { requested: u32, cap: u32 },

    #[error("level {level} is not exact; operation requires exact levels")]
    NonExactLevel { level: usize },

    #[error("horizon {have} is too small: the operation needs levels up to {needed}")]
    HorizonInsufficient { needed: usize, have: usize },

    #[error("level {requested} is beyond the horizon {horizon}")]
    BeyondHorizon { requested: usize, horizon: usize },

    #[error("the gap set is empty: the gap equation has no solution")]
    EmptyGapSet,

    #[error("block length {len} is not divisible by chunk width {chunk}")]
    LengthNotDivisible { len: usize, chunk: usize },

    #[error("dividing the target by {divisor} does not terminate in base 10; supply the quotient digits explicitly")]
    NonTerminatingQuotient { divisor: u64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Which exit-code class this error belongs to.
    pub fn category(&self) -> ErrorCategory {
        use Error::*;
        match self {
            Budget { .. } | DepthCap { .. } => ErrorCategory::Budget,
            InsufficientDigits { .. }
            | UndecidableRounding { .. }
            | NonTerminatingQuotient { .. } => ErrorCategory::Precision,
            _ => ErrorCategory::Input,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors raised by the antipalindrome routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero has no canonical positive expansion")]
    Zero,
    #[error("base {0} is not supported (base must be at least 2)")]
    InvalidBase(u64),
    #[error("digit {digit} is out of range for base {base}")]
    InvalidDigit { digit: u64, base: u64 },
    #[error("digit string is empty")]
    EmptyDigits,
    #[error("digit string has a leading zero")]
    LeadingZero,
    #[error("arithmetic overflow: {0}")]
    Overflow(&'static str),
    #[error("no antipalindromes with {len} digits exist in even base {base}")]
    NoSuchShape { base: u64, len: u32 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("{value} is not antipalindromic in base {base}")]
    NotAntipalindromic { value: u64, base: u64 },
    #[error("top digit {top} is below the required {required}")]
    TopDigitTooSmall { top: u64, required: u64 },
    #[error("base {base} is below the bound {bound}")]
    BelowBound { base: u64, bound: u64 },
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for errors that signal the integer range was exceeded, as opposed
    /// to malformed input.
    pub fn is_range_error(&self) -> bool {
        matches!(self, Error::Overflow(_))
    }
}

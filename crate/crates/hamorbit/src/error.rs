use num_bigint::BigUint;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("empty label sequence")]
    Empty,
    #[error("label {value} out of range for length {n}")]
    OutOfRange { value: u64, n: usize },
    #[error("duplicate label {value}")]
    DuplicateLabel { value: u8 },
    #[error("n = {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("string of length {len} does not match a group over {n} symbols")]
    LengthMismatch { len: usize, n: usize },
    #[error("group elements belong to different modes")]
    ModeMismatch,
    #[error("n = {n} is too small; counting requires n >= 3")]
    NTooSmall { n: usize },
    #[error("{kind} shapes need at least {min} vertices, got {n}")]
    TooShort {
        kind: &'static str,
        min: usize,
        n: usize,
    },
    #[error("shape keys over {a} and {b} vertices cannot be compared")]
    SizeMismatch { a: usize, b: usize },
    #[error("totient is undefined for 0")]
    NonPositive,
    #[error("inexact division: {numerator} is not a multiple of {denominator}")]
    InexactDivision {
        numerator: BigUint,
        denominator: BigUint,
    },
    #[error("{p} is not prime")]
    NotPrime { p: u64 },
    #[error("p = {p} is out of range; need an odd prime p > 2")]
    POutOfRange { p: u64 },
    #[error("radius must be positive and finite, got {radius}")]
    BadRadius { radius: f64 },
    #[error("cannot parse {text:?} as a permutation string")]
    Unparseable { text: String },
    #[error("generator not available in this mode: {what}")]
    GeneratorUnavailable { what: &'static str },
}

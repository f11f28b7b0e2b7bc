use thiserror::Error;

/// Errors raised by the field, polynomial and group layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1, got {0}")]
    InvalidDegree(u32),
    #[error("field of order {p}^{n} exceeds the supported maximum of {max} elements")]
    FieldTooLarge { p: u64, n: u32, max: u32 },
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("modulus {0:?} is reducible over the prime field")]
    ReducibleModulus(Vec<u32>),
    #[error("digit vector {digits:?} is not a valid element of F_{p}^{n}")]
    InvalidDigits { digits: Vec<u32>, p: u32, n: u32 },
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator is the zero polynomial")]
    ZeroDenominator,
    #[error("constant rational function generates only the base field (infinite extension degree)")]
    ConstantFunction,
    #[error("degenerate Moebius map: ad = bc")]
    DegenerateMap,
    #[error("k = {k} is not a multiple of q - 1 = {q_minus_one}")]
    NotMultiple { k: u64, q_minus_one: u64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;

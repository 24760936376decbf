use thiserror::Error;

/// Every failure the library can report.
///
/// Falsification of a mathematical identity is never an `Error`; the
/// verification routines return a verdict for that. Errors are reserved for
/// invalid input, violated preconditions and resource ceilings.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1, got {0}")]
    InvalidDegree(u32),
    #[error("{m} does not divide the extension degree {r}")]
    NotASubfield { m: u32, r: u32 },
    #[error("characteristic {p} divides {n}: the roots of unity of order {n} are repeated")]
    RepeatedRoots { p: u64, n: u64 },
    #[error(
        "field of order {order} has no full set of {n}-th roots of unity; \
         an extension of degree {required_degree} over the prime field is required"
    )]
    FieldTooSmall {
        n: u64,
        order: String,
        required_degree: u32,
    },
    #[error("operands live in different coefficient fields")]
    FieldMismatch,
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("division is not exact: nonzero remainder")]
    NotExact,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("polynomial must not involve {0}")]
    UnexpectedVariable(char),
    #[error("negative exponent after reflection (degree bound {bound} too small)")]
    NegativeExponent { bound: u32 },
    #[error("invalid exponent pair: need A > B >= 1, got A={a}, B={b}")]
    InvalidExponentPair { a: u32, b: u32 },
    #[error("invalid partition {0:?}: parts must be non-increasing")]
    InvalidPartition([u32; 3]),
    #[error("the two constructions of {what} disagree")]
    ConstructionMismatch { what: &'static str },
    #[error("no signature witness exists when B = d or A - B = d; use the Eisenstein-like check instead")]
    CaseTwoPair,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("hypotheses not satisfied: {0}")]
    Hypothesis(String),
    #[error("field size {size} exceeds the enumeration ceiling {ceiling}")]
    CeilingExceeded { size: String, ceiling: u64 },
    #[error("zero point is not a projective point")]
    ZeroPoint,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Everything that can go wrong inside the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("field of order {p}^{d} does not fit in a machine word")]
    FieldTooLarge { p: u64, d: usize },
    #[error("defining polynomial {0} is not a monic irreducible polynomial of the extension degree")]
    NotIrreducible(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different fields")]
    TowerMismatch,
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("polynomial is not homogeneous: {first} and {second} have different degrees")]
    Inhomogeneous { first: String, second: String },
    #[error("the zero polynomial has no degree")]
    ZeroPolynomial,
    #[error("generator {0} is a constant")]
    ConstantGenerator(String),
    #[error("the unit ideal has no dimension")]
    UnitIdeal,
    #[error("cannot saturate with respect to the zero ideal")]
    ZeroDirection,
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("space is not closed under the action")]
    NotClosed,
    #[error("ideal is not invariant under the action")]
    NotInvariant,
    #[error("generators are not a strict complete intersection")]
    NotStrict,
    #[error("degree classes inconsistent with the orbit structure: {0}")]
    DegreeMismatch(String),
    #[error("descent invariant violated: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

//! Error type shared by the whole engine.

use std::fmt;

/// Errors raised by engine operations.
///
/// Every operation is exact; errors signal contract violations (mismatched
/// rings, division by zero, ...) rather than numerical trouble.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two values from different rings were combined.
    RingMismatch(String),
    /// An operation required a field or integer coefficient domain it did not get.
    DomainMismatch(String),
    DivisionByZero,
    /// Exact division was requested but the divisor does not divide.
    NotDivisible,
    /// `ext_gcd(0, 0)` and friends.
    GcdOfZeros,
    ZeroPolynomial(String),
    IndexOutOfRange(String),
    DimensionMismatch(String),
    NotSquare,
    /// Mirrors the error branch of the Rees-algebra construction.
    NotEnoughVariables,
    /// Ring construction with duplicate/empty variable lists or a bad order.
    InvalidRing(String),
    /// A monomial order without the elimination property was used to eliminate.
    NotEliminationOrder,
    /// Degree/dimension machinery is only defined over field coefficients.
    RequiresField(String),
    /// `degree` of an inhomogeneous ideal that is not zero-dimensional.
    DegreeUndefined(String),
    Parse(String),
    UnknownVariable(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::RingMismatch(what) => write!(f, "ring mismatch: {what}"),
            Error::DomainMismatch(what) => write!(f, "coefficient domain mismatch: {what}"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::NotDivisible => write!(f, "not divisible"),
            Error::GcdOfZeros => write!(f, "gcd of two zeros is undefined"),
            Error::ZeroPolynomial(what) => write!(f, "zero polynomial not allowed: {what}"),
            Error::IndexOutOfRange(what) => write!(f, "index out of range: {what}"),
            Error::DimensionMismatch(what) => write!(f, "dimension mismatch: {what}"),
            Error::NotSquare => write!(f, "matrix is not square"),
            Error::NotEnoughVariables => write!(f, "not enough variables"),
            Error::InvalidRing(what) => write!(f, "invalid ring: {what}"),
            Error::NotEliminationOrder => write!(f, "order is not an elimination order"),
            Error::RequiresField(what) => write!(f, "requires field coefficients: {what}"),
            Error::DegreeUndefined(what) => write!(f, "degree undefined: {what}"),
            Error::Parse(what) => write!(f, "parse error: {what}"),
            Error::UnknownVariable(name) => write!(f, "unknown variable: {name}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;

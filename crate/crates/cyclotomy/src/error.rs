//! Error type shared by the whole crate.

use alloc::vec::Vec;
use core::fmt;

/// Everything that can go wrong while building fields, character setups, or
/// converting between cyclotomic numbers and Jacobi sums.
///
/// Parameter problems (`NotPrime`, `OrderDoesNotDivide`, ...) mean the caller
/// asked for an impossible object. The `NonInteger*` / `NotDivisible*` /
/// `NegativeEntry` variants mean an input matrix was mathematically
/// inconsistent: they are detected, never repaired.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    NotPrime { p: u64 },
    InvalidDegree,
    FieldTooLarge { p: u64, r: u32 },
    ModulusNotMonic,
    ModulusWrongDegree { expected: u32, got: usize },
    ModulusReducible { modulus: Vec<u64> },
    CoefficientOutOfRange { coefficient: u64, p: u64 },
    WrongCoefficientCount { expected: u32, got: usize },
    DivisionByZero,
    NotAGenerator,
    InvalidOrder { e: u64 },
    OrderDoesNotDivide { e: u64, q: u64 },
    OrderMismatch { left: u64, right: u64 },
    NotCoprime { t: u64, e: u64 },
    NotAnInteger,
    OddRulesRequireEvenOrder { e: u64 },
    InconsistentParameters { e: u64, k: u64, p: u64 },
    NonIntegerAccumulation { a: u64, b: u64 },
    NotDivisibleByOrderSquared { a: u64, b: u64 },
    NegativeEntry { a: u64, b: u64 },
    CensusMismatch { expected: u64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime { p } => write!(f, "{p} is not prime"),
            Error::InvalidDegree => write!(f, "extension degree must be at least 1"),
            Error::FieldTooLarge { p, r } => {
                write!(f, "field size {p}^{r} exceeds the supported table scale")
            }
            Error::ModulusNotMonic => write!(f, "modulus polynomial is not monic"),
            Error::ModulusWrongDegree { expected, got } => {
                write!(f, "modulus has degree {got}, expected {expected}")
            }
            Error::ModulusReducible { .. } => write!(f, "modulus polynomial is reducible"),
            Error::CoefficientOutOfRange { coefficient, p } => {
                write!(f, "coefficient {coefficient} is outside [0,{p})")
            }
            Error::WrongCoefficientCount { expected, got } => {
                write!(f, "element has {got} coefficients, expected {expected}")
            }
            Error::DivisionByZero => write!(f, "inversion of zero"),
            Error::NotAGenerator => write!(f, "element does not generate the multiplicative group"),
            Error::InvalidOrder { e } => write!(f, "order {e} must be at least 2"),
            Error::OrderDoesNotDivide { e, q } => {
                write!(f, "order {e} does not divide q-1 = {}", q - 1)
            }
            Error::OrderMismatch { left, right } => {
                write!(f, "mixed cyclotomic orders {left} and {right}")
            }
            Error::NotCoprime { t, e } => write!(f, "exponent {t} is not coprime to {e}"),
            Error::NotAnInteger => write!(f, "element is not a rational integer"),
            Error::OddRulesRequireEvenOrder { e } => {
                write!(f, "odd-cofactor rules require even order, got {e}")
            }
            Error::InconsistentParameters { e, k, p } => {
                write!(f, "inconsistent parameters e={e}, k={k}, p={p}")
            }
            Error::NonIntegerAccumulation { a, b } => {
                write!(f, "accumulated value at (a,b)=({a},{b}) is not a rational integer")
            }
            Error::NotDivisibleByOrderSquared { a, b } => {
                write!(f, "accumulated value at (a,b)=({a},{b}) is not divisible by e^2")
            }
            Error::NegativeEntry { a, b } => {
                write!(f, "entry at (a,b)=({a},{b}) is negative")
            }
            Error::CensusMismatch { expected } => {
                write!(f, "matrix entries do not sum to q-2 = {expected}")
            }
        }
    }
}

impl core::error::Error for Error {}

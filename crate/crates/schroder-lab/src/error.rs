//! Error types shared across the library.

use thiserror::Error;

/// Errors raised when constructing or enumerating a path family.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("n must be at least 1 (got {0})")]
    ZeroHeight(u64),
    #[error("r must be at least 1 (got {0})")]
    ZeroSlope(u64),
    #[error("d = {d} exceeds the maximum number of down steps {max} for this family")]
    TooManyDownSteps { d: u64, max: u64 },
    #[error("constraint offset h = {h} exceeds the family height {max}")]
    ConstraintTooDeep { h: u64, max: u64 },
}

/// Errors raised when validating a concrete step sequence.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("step multiset does not match the family (expected {expected}, got {got} of {kind})")]
    WrongStepCounts {
        kind: &'static str,
        expected: u64,
        got: u64,
    },
    #[error("vertex ({x}, {y}) after step {index} lies above the boundary line")]
    AboveBoundary { index: usize, x: i64, y: i64 },
    #[error("vertex ({x}, {y}) after step {index} lies below the constraint line")]
    BelowConstraint { index: usize, x: i64, y: i64 },
}

/// Errors raised when decoding an area code back into a path.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("code has {got} entries but the family height is {expected}")]
    WrongLength { expected: u64, got: u64 },
    #[error("entry {line} decreases: codes must be weakly increasing")]
    NonMonotone { line: usize },
    #[error("entry {line} exceeds its boundary bound {bound}")]
    BoundExceeded { line: usize, bound: i64 },
    #[error("barred entries at line {line} do not form a run of exactly r equal values")]
    BadBarRun { line: usize },
    #[error("after a barred run of value {value}, entry {line} must be at least {min}")]
    BarNotAdvanced { line: usize, value: u64, min: u64 },
    #[error("code has {got} unbarred entries but the family requires {expected}")]
    WrongBarCount { expected: u64, got: u64 },
    #[error("the family is empty (r does not divide d), no code is valid")]
    EmptyFamily,
    #[error("decoded path is invalid: {0}")]
    InvalidPath(#[from] PathError),
}

/// Errors raised by statistics that apply only to a sub-family.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StatError {
    #[error("area per line is defined only for integer-slope families")]
    AreaNeedsIntegerSlope,
    #[error("this dinv statistic requires r = 1 (family has r = {0})")]
    NeedsUnitR(u64),
    #[error("this dinv statistic requires d = n (got d = {d}, n = {n})")]
    NeedsFullDown { d: u64, n: u64 },
    #[error("this dinv statistic requires d = 1 (got d = {0})")]
    NeedsSingleDown(u64),
}

/// Errors raised by exact polynomial arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QAlgebraError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial division is not exact (remainder at q^{exponent})")]
    NotDivisible { exponent: i64 },
}

/// Errors raised by closed-form counting.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("closed form did not evaluate to an integer: {context}")]
    NonIntegral { context: String },
}

/// Errors raised by the recursive formulas of sections 4-7.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("recursion depth exceeded; argument chain: {0}")]
    DepthExceeded(String),
    #[error("argument {name} = {value} must be an integer here")]
    NonInteger { name: &'static str, value: String },
}

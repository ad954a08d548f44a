use alloc::vec::Vec;

use crate::profile::{Flavor, Violation};

/// Errors raised by the operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("rational function with zero denominator")]
    ZeroDenominator,
    #[error("invalid profile: {} violation(s)", .0.len())]
    InvalidProfile(Vec<Violation>),
    #[error("operation requires a {expected} profile")]
    WrongFlavor { expected: Flavor },
    #[error("flavor mismatch: {left} vs {right}")]
    FlavorMismatch { left: Flavor, right: Flavor },
    #[error("weighted degree {found} does not match dimension {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("polynomial rank {polynomial} does not match bundle rank {bundle}")]
    RankMismatch { polynomial: usize, bundle: usize },
    #[error("bundle has {found} fibers but the profile has {expected} fixed points")]
    FiberCountMismatch { expected: usize, found: usize },
    #[error("fiber {index} has {found} weights, expected {expected}")]
    RaggedFiber { index: usize, expected: usize, found: usize },
    #[error("symmetric polynomial is not weighted-homogeneous")]
    NotHomogeneous,
    #[error("exponent vector of length {found} in a rank-{expected} polynomial")]
    ExponentLength { expected: usize, found: usize },
    #[error("value {0} is repeated")]
    Repeated(i64),
    #[error("invalid search bounds: {0}")]
    SearchBounds(&'static str),
}

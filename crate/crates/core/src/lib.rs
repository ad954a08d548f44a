//! Exact localization sums over the fixed-point data of circle actions.
//!
//! A [`FixedPointProfile`] records, for each isolated fixed point of an
//! S¹-action on a 2n-manifold, the n tangent weights of the isotropy
//! representation and the weight of a lifted action on a line bundle. From
//! that data this crate evaluates the localized power sums and Chern
//! numbers, groups points into line-weight levels, classifies injectivity of
//! the lift, checks the fixed-point lower bounds on concrete data, computes
//! the equivariant Dolbeault character, and enumerates bounded weight
//! configurations satisfying the localization constraints.
//!
//! Everything is exact. There is no floating point anywhere in the crate.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod arith;
pub mod error;
pub mod generators;
pub mod genus;
pub mod injectivity;
pub mod localize;
pub mod profile;
pub mod search;
pub mod symmetric;

pub use arith::{
    as_laurent, rational_arith, ratfun_sum, ArithOp, LaurentPolynomial, Rational,
    RationalFunction,
};
pub use error::Error;
pub use generators::{constant_lift, cpn, product};
pub use genus::{dolbeault_character, todd_genus, ToddGenus};
pub use injectivity::{
    aggregate_levels, classify, theorem_report, vandermonde_reconstruct, Classification,
    DichotomyCase, Level, LevelDecomposition, Reconstruction, Statement, TheoremReport, Verdict,
    VerdictStatus,
};
pub use localize::{
    chern_top, consistency_check, localize_symmetric, power_sum, ConsistencyReport, MomentCheck,
};
pub use profile::{
    canonicalize, determinant_lift, relift, validate, FixedPointProfile, Flavor, PointDatum,
    Violation,
};
pub use search::{catalog_audit, enumerate_consistent, AuditReport, SearchSpec};
pub use symmetric::{BundleFiberData, SymmetricPolynomial};

//! Equivariant Dolbeault character and Todd genus from almost-complex
//! fixed-point data.
//!
//! The character is `Σ_i Π_j 1/(1 - t^(-k_j^(i)))`. For data coming from an
//! actual action it is a Laurent polynomial and its value at `t = 1` is the
//! Todd genus. Individual terms are singular at `t = 1`, so the sum is formed
//! exactly before any evaluation.

use num_bigint::BigInt;

use crate::arith::{as_laurent, ratfun_sum, Rational, RationalFunction};
use crate::error::Error;
use crate::profile::{FixedPointProfile, Flavor};

pub fn dolbeault_character(p: &FixedPointProfile) -> Result<RationalFunction, Error> {
    if p.flavor != Flavor::AlmostComplex {
        return Err(Error::WrongFlavor {
            expected: Flavor::AlmostComplex,
        });
    }
    p.ensure_valid()?;
    let mut terms = alloc::vec::Vec::with_capacity(p.len());
    for pt in &p.points {
        let mut term = RationalFunction::one();
        for &k in &pt.tangent_weights {
            term = &term * &RationalFunction::inverse_one_minus_power(k)?;
        }
        terms.push(term);
    }
    Ok(ratfun_sum(&terms))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ToddGenus {
    Integer(BigInt),
    /// Laurent character with a fractional value at 1. Cannot happen for
    /// integer data, kept so the outcome is reported rather than hidden.
    NonIntegral(Rational),
    /// The character has a genuine pole; no almost-complex action has this
    /// fixed-point data.
    NotLaurent,
}

pub fn todd_genus(p: &FixedPointProfile) -> Result<ToddGenus, Error> {
    let chi = dolbeault_character(p)?;
    Ok(match as_laurent(&chi) {
        None => ToddGenus::NotLaurent,
        Some(poly) => {
            let v = poly.coefficient_sum();
            if v.is_integer() {
                ToddGenus::Integer(v.to_integer())
            } else {
                ToddGenus::NonIntegral(v)
            }
        }
    })
}

//! Exact arithmetic: big rationals, Laurent polynomials in one variable and
//! rational functions kept in a canonical reduced form.

mod dense;
mod laurent;
mod ratfun;

use num_traits::Zero;

use crate::error::Error;

pub use laurent::LaurentPolynomial;
pub use ratfun::{as_laurent, ratfun_sum, RationalFunction};

/// Arbitrary-precision fraction, always stored reduced with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn rational_arith(a: &Rational, b: &Rational, op: ArithOp) -> Result<Rational, Error> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => {
            if b.is_zero() {
                return Err(Error::DivisionByZero);
            }
            a / b
        }
    })
}

/// `n / d` as a reduced rational; `None` when `d` is zero.
pub fn ratio(n: i64, d: i64) -> Option<Rational> {
    (d != 0).then(|| Rational::new(n.into(), d.into()))
}

pub fn integer(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

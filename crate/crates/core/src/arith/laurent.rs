use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::dense::Poly;
use super::Rational;

/// A Laurent polynomial in one formal variable `t` with rational
/// coefficients. Only nonzero coefficients are stored, keyed by exponent.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    /// `c · t^exp`.
    pub fn monomial(c: Rational, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (e, c) in iter {
            out.add_term(e, c);
        }
        out
    }

    fn add_term(&mut self, exp: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exp: i64) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Returns the constant when the polynomial has no nonconstant term.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, x)| (e, x * c)).collect(),
        }
    }

    /// Evaluates at a nonzero rational point. Returns `None` at `t = 0` when
    /// a negative exponent is present.
    pub fn eval(&self, t: &Rational) -> Option<Rational> {
        if t.is_zero() && self.min_exponent().is_some_and(|e| e < 0) {
            return None;
        }
        let mut acc = Rational::zero();
        for (&e, c) in &self.terms {
            let p = if e >= 0 {
                num_traits::pow(t.clone(), e as usize)
            } else {
                num_traits::pow(t.recip(), e.unsigned_abs() as usize)
            };
            acc += c * p;
        }
        Some(acc)
    }

    /// Sum of coefficients, i.e. the value at `t = 1`.
    pub fn coefficient_sum(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |acc, c| acc + c)
    }

    /// Splits off the lowest power: `self = t^low · poly` with `poly(0) ≠ 0`.
    pub(crate) fn to_dense(&self) -> (i64, Poly) {
        let Some(low) = self.min_exponent() else {
            return (0, Poly(Vec::new()));
        };
        let high = self.max_exponent().unwrap();
        let mut coeffs = alloc::vec![Rational::zero(); (high - low) as usize + 1];
        for (&e, c) in &self.terms {
            coeffs[(e - low) as usize] = c.clone();
        }
        (low, Poly::new(coeffs))
    }

    pub(crate) fn from_dense(low: i64, poly: &Poly) -> Self {
        Self::from_terms(
            poly.0
                .iter()
                .enumerate()
                .map(|(i, c)| (low + i as i64, c.clone())),
        )
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (&a, x) in &self.terms {
            for (&b, y) in &rhs.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPolynomial {
    /// Highest power first, e.g. `t^2 - 1/2*t + 3 + t^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c < &Rational::zero();
            let mag = if negative { -c } else { c.clone() };
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let unit = mag.is_one();
            if e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !unit {
                write!(f, "{mag}*")?;
            }
            if e == 1 {
                f.write_str("t")?;
            } else {
                write!(f, "t^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{integer, ratio};
    use alloc::string::ToString;

    fn lp(terms: &[(i64, i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(terms.iter().map(|&(e, c)| (e, integer(c))))
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let p = &lp(&[(1, 2), (-1, 1)]) + &lp(&[(1, -2)]);
        assert_eq!(p, lp(&[(-1, 1)]));
        assert_eq!(p.terms().count(), 1);
    }

    #[test]
    fn multiplication_and_eval() {
        // (t + t^-1)(t - t^-1) = t^2 - t^-2
        let p = &lp(&[(1, 1), (-1, 1)]) * &lp(&[(1, 1), (-1, -1)]);
        assert_eq!(p, lp(&[(2, 1), (-2, -1)]));
        assert_eq!(p.eval(&integer(2)).unwrap(), ratio(15, 4).unwrap());
        assert!(p.eval(&integer(0)).is_none());
    }

    #[test]
    fn display() {
        let p = LaurentPolynomial::from_terms([(2, integer(1)), (1, ratio(-1, 2).unwrap()), (0, integer(3)), (-1, integer(1))]);
        assert_eq!(p.to_string(), "t^2 - 1/2*t + 3 + t^-1");
        assert_eq!(lp(&[(0, -1)]).to_string(), "-1");
    }
}

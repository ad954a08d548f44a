//! Dense univariate polynomials over the rationals, lowest degree first.
//! Only what the rational-function normalization needs.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use super::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Poly(pub(crate) Vec<Rational>);

impl Poly {
    pub(crate) fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub(crate) fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn leading(&self) -> Option<&Rational> {
        self.0.last()
    }

    pub(crate) fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly(Vec::new());
        }
        Poly(self.0.iter().map(|x| x * c).collect())
    }

    pub(crate) fn monic(&self) -> Poly {
        match self.leading() {
            Some(lead) => self.scale(&lead.recip()),
            None => self.clone(),
        }
    }

    pub(crate) fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly(Vec::new());
        }
        let mut out = vec![Rational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Poly::new(out)
    }

    /// Euclidean division. Panics on a zero divisor.
    pub(crate) fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("polynomial division by zero");
        let lead_inv = divisor.leading().unwrap().recip();
        let mut rem = self.0.clone();
        if rem.len() <= dd {
            return (Poly(Vec::new()), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.0.iter().enumerate() {
                if !d.is_zero() {
                    rem[k + j] -= &c * d;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub(crate) fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a
    }
}

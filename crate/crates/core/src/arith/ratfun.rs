use core::fmt;
use core::ops::{Add, Mul, Neg};

use num_traits::{One, Zero};

use super::dense::Poly;
use super::laurent::LaurentPolynomial;
use super::Rational;
use crate::error::Error;

/// A quotient of Laurent polynomials in `t`, kept reduced.
///
/// Canonical form: numerator and denominator share no nonconstant factor,
/// the denominator is an ordinary polynomial with lowest exponent 0 and
/// constant term exactly 1, and zero is `0 / 1`. Two rational functions are
/// equal iff their canonical forms are structurally equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    numerator: LaurentPolynomial,
    denominator: LaurentPolynomial,
}

impl RationalFunction {
    pub fn new(numerator: LaurentPolynomial, denominator: LaurentPolynomial) -> Result<Self, Error> {
        if denominator.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::normalize(&numerator, &denominator))
    }

    pub fn zero() -> Self {
        Self::from_laurent(LaurentPolynomial::zero())
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentPolynomial::one())
    }

    pub fn from_laurent(p: LaurentPolynomial) -> Self {
        Self {
            numerator: p,
            denominator: LaurentPolynomial::one(),
        }
    }

    /// `1 / (1 - t^(-k))`, the fixed-point contribution of one tangent
    /// weight `k` to the Dolbeault character.
    pub fn inverse_one_minus_power(k: i64) -> Result<Self, Error> {
        if k == 0 {
            return Err(Error::ZeroDenominator);
        }
        let den = LaurentPolynomial::from_terms([(0, Rational::one()), (-k, -Rational::one())]);
        Self::new(LaurentPolynomial::one(), den)
    }

    pub fn numerator(&self) -> &LaurentPolynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &LaurentPolynomial {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// Evaluates at a rational point; `None` at a pole or at `t = 0` when
    /// negative powers survive.
    pub fn eval(&self, t: &Rational) -> Option<Rational> {
        let d = self.denominator.eval(t)?;
        if d.is_zero() {
            return None;
        }
        Some(self.numerator.eval(t)? / d)
    }

    fn normalize(num: &LaurentPolynomial, den: &LaurentPolynomial) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (nlow, n) = num.to_dense();
        let (dlow, d) = den.to_dense();
        let (n, d) = reduce(n, d);
        Self {
            numerator: LaurentPolynomial::from_dense(nlow - dlow, &n),
            denominator: LaurentPolynomial::from_dense(0, &d),
        }
    }

    fn dense_denominator(&self) -> Poly {
        self.denominator.to_dense().1
    }
}

/// Cancels the gcd of `n` and `d` and scales so that `d(0) = 1`. Both inputs
/// have nonzero constant term.
fn reduce(n: Poly, d: Poly) -> (Poly, Poly) {
    let g = n.gcd(&d);
    let (n, d) = if g.degree().unwrap_or(0) > 0 {
        (n.div_rem(&g).0, d.div_rem(&g).0)
    } else {
        (n, d)
    };
    let c = d.0[0].recip();
    (n.scale(&c), d.scale(&c))
}

impl Add for &RationalFunction {
    type Output = RationalFunction;

    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        // a/b + c/d over lcm(b, d); b and d are ordinary polynomials.
        let b = self.dense_denominator();
        let d = rhs.dense_denominator();
        let g = b.gcd(&d);
        let (b_co, d_co) = if g.degree().unwrap_or(0) > 0 {
            (b.div_rem(&g).0, d.div_rem(&g).0)
        } else {
            (b.clone(), d.clone())
        };
        let left = &self.numerator * &LaurentPolynomial::from_dense(0, &d_co);
        let right = &rhs.numerator * &LaurentPolynomial::from_dense(0, &b_co);
        let den = LaurentPolynomial::from_dense(0, &b.mul(&d_co));
        RationalFunction::normalize(&(&left + &right), &den)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;

    fn neg(self) -> RationalFunction {
        RationalFunction {
            numerator: -&self.numerator,
            denominator: self.denominator.clone(),
        }
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;

    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        RationalFunction::normalize(
            &(&self.numerator * &rhs.numerator),
            &(&self.denominator * &rhs.denominator),
        )
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator.as_constant().is_some_and(|c| c.is_one()) {
            return write!(f, "{}", self.numerator);
        }
        write!(f, "({}) / ({})", self.numerator, self.denominator)
    }
}

/// Exact sum of rational functions in canonical form. The empty sum is 0.
pub fn ratfun_sum<'a, I>(terms: I) -> RationalFunction
where
    I: IntoIterator<Item = &'a RationalFunction>,
{
    terms
        .into_iter()
        .fold(RationalFunction::zero(), |acc, f| &acc + f)
}

/// The Laurent polynomial equal to `f`, when the reduced denominator is a
/// unit monomial.
pub fn as_laurent(f: &RationalFunction) -> Option<LaurentPolynomial> {
    // Canonical denominators have constant term 1, so a unit monomial
    // denominator is exactly the constant 1.
    match f.denominator.as_constant() {
        Some(c) if c.is_one() => Some(f.numerator.clone()),
        _ => None,
    }
}

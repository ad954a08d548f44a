//! Symmetric polynomials written in elementary symmetric generators, and
//! the fiber weights of a higher-rank equivariant bundle.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::Rational;
use crate::error::Error;
use crate::profile::FixedPointProfile;

/// Weights `a_1..a_m` of the lifted action on each fiber of a rank-m
/// bundle, one list per fixed point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BundleFiberData {
    rank: usize,
    fibers: Vec<Vec<i64>>,
}

impl BundleFiberData {
    pub fn new(rank: usize, fibers: Vec<Vec<i64>>) -> Result<Self, Error> {
        for (index, f) in fibers.iter().enumerate() {
            if f.len() != rank {
                return Err(Error::RaggedFiber {
                    index,
                    expected: rank,
                    found: f.len(),
                });
            }
        }
        Ok(Self { rank, fibers })
    }

    /// The rank-1 bundle carried by the profile's line weights.
    pub fn from_line_weights(p: &FixedPointProfile) -> Self {
        Self {
            rank: 1,
            fibers: p.line_weights().map(|a| vec![a]).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn fibers(&self) -> &[Vec<i64>] {
        &self.fibers
    }
}

/// `e_1..e_m` of the given values; index 0 holds `e_0 = 1`.
pub fn elementary_symmetric(values: &[i64]) -> Vec<BigInt> {
    let mut e = vec![BigInt::zero(); values.len() + 1];
    e[0] = BigInt::one();
    for (i, &x) in values.iter().enumerate() {
        let x = BigInt::from(x);
        for k in (1..=i + 1).rev() {
            let prev = &e[k - 1] * &x;
            e[k] += prev;
        }
    }
    e
}

/// A weighted-homogeneous polynomial `f̃(e_1, …, e_m)` where `e_i` carries
/// weight `i`. Terms map exponent vectors `(d_1, …, d_m)` to coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricPolynomial {
    rank: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl SymmetricPolynomial {
    pub fn new<I>(rank: usize, terms: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut map: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        for (exps, c) in terms {
            if exps.len() != rank {
                return Err(Error::ExponentLength {
                    expected: rank,
                    found: exps.len(),
                });
            }
            *map.entry(exps).or_insert_with(Rational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        let mut degrees = map.keys().map(|e| weighted_degree(e));
        if let Some(first) = degrees.next() {
            if degrees.any(|d| d != first) {
                return Err(Error::NotHomogeneous);
            }
        }
        Ok(Self { rank, terms: map })
    }

    /// The single generator `e_d`.
    pub fn elementary(rank: usize, d: usize) -> Result<Self, Error> {
        if d == 0 || d > rank {
            return Err(Error::ExponentLength {
                expected: rank,
                found: d,
            });
        }
        let mut exps = vec![0u32; rank];
        exps[d - 1] = 1;
        Self::new(rank, [(exps, Rational::one())])
    }

    /// `e_1^t`.
    pub fn e1_power(rank: usize, t: u32) -> Self {
        let mut exps = vec![0u32; rank];
        if rank > 0 {
            exps[0] = t;
        }
        Self::new(rank, [(exps, Rational::one())]).expect("single term is homogeneous")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Weighted degree `Σ i·d_i`; `None` for the zero polynomial.
    pub fn weighted_degree(&self) -> Option<usize> {
        self.terms.keys().next().map(|e| weighted_degree(e))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> + '_ {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    /// Substitutes `e_d(values)` for the generators.
    pub fn eval_on_weights(&self, values: &[i64]) -> Rational {
        let e = elementary_symmetric(values);
        let mut acc = Rational::zero();
        for (exps, c) in &self.terms {
            let mut m = BigInt::one();
            for (i, &d) in exps.iter().enumerate() {
                if d > 0 {
                    m *= num_traits::pow(e[i + 1].clone(), d as usize);
                }
            }
            acc += c * Rational::from_integer(m);
        }
        acc
    }
}

fn weighted_degree(exps: &[u32]) -> usize {
    exps.iter()
        .enumerate()
        .map(|(i, &d)| (i + 1) * d as usize)
        .sum()
}

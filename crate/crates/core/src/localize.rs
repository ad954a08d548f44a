//! Localized sums over fixed points: the power sums `Σ a_i^t / Π_j k_j`
//! and the general symmetric-polynomial formula for equivariant bundles.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::Rational;
use crate::error::Error;
use crate::profile::FixedPointProfile;
use crate::symmetric::{BundleFiberData, SymmetricPolynomial};

fn inverse_tangent_product(pt: &crate::profile::PointDatum) -> Rational {
    Rational::new(BigInt::one(), BigInt::from(pt.tangent_product()))
}

/// `Σ_i a_i^t / Π_j k_j^(i)`, with `0^0 = 1`.
pub fn power_sum(p: &FixedPointProfile, t: u32) -> Result<Rational, Error> {
    p.ensure_valid()?;
    Ok(power_sum_unchecked(p, t))
}

pub(crate) fn power_sum_unchecked(p: &FixedPointProfile, t: u32) -> Rational {
    p.points.iter().fold(Rational::zero(), |acc, pt| {
        let num = num_traits::pow(BigInt::from(pt.line_weight), t as usize);
        acc + Rational::new(num, BigInt::from(pt.tangent_product()))
    })
}

/// The localized value of `c_1(L)^n [M]`.
pub fn chern_top(p: &FixedPointProfile) -> Result<Rational, Error> {
    power_sum(p, p.dimension as u32)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentCheck {
    pub t: u32,
    pub value: Rational,
}

impl MomentCheck {
    pub fn passes(&self) -> bool {
        self.value.is_zero()
    }
}

/// The vanishing constraints `t = 0..n-1` together with the top power sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsistencyReport {
    pub moments: Vec<MomentCheck>,
    pub chern_top: Rational,
}

impl ConsistencyReport {
    /// All lower power sums vanish.
    pub fn is_consistent(&self) -> bool {
        self.moments.iter().all(MomentCheck::passes)
    }

    /// A Chern number of a genuine bundle is an integer; a fractional value
    /// certifies the data is not realizable.
    pub fn non_integral_warning(&self) -> bool {
        !self.chern_top.is_integer()
    }

    pub fn first_failure(&self) -> Option<&MomentCheck> {
        self.moments.iter().find(|m| !m.passes())
    }
}

pub fn consistency_check(p: &FixedPointProfile) -> Result<ConsistencyReport, Error> {
    p.ensure_valid()?;
    let n = p.dimension as u32;
    let moments = (0..n)
        .map(|t| MomentCheck {
            t,
            value: power_sum_unchecked(p, t),
        })
        .collect();
    Ok(ConsistencyReport {
        moments,
        chern_top: power_sum_unchecked(p, n),
    })
}

/// `Σ_i f(a^(i)) / Π_j k_j^(i)` for a rank-m bundle and a symmetric
/// polynomial of weighted degree exactly n.
///
/// Lower degrees are rejected rather than evaluated: for a general bundle
/// the localized sum need not vanish there.
pub fn localize_symmetric(
    p: &FixedPointProfile,
    bundle: &BundleFiberData,
    f: &SymmetricPolynomial,
) -> Result<Rational, Error> {
    p.ensure_valid()?;
    if bundle.fibers().len() != p.len() {
        return Err(Error::FiberCountMismatch {
            expected: p.len(),
            found: bundle.fibers().len(),
        });
    }
    if f.rank() != bundle.rank() {
        return Err(Error::RankMismatch {
            polynomial: f.rank(),
            bundle: bundle.rank(),
        });
    }
    match f.weighted_degree() {
        None => return Ok(Rational::zero()),
        Some(d) if d != p.dimension => {
            return Err(Error::DegreeMismatch {
                expected: p.dimension,
                found: d,
            })
        }
        Some(_) => {}
    }
    Ok(p.points
        .iter()
        .zip(bundle.fibers())
        .fold(Rational::zero(), |acc, (pt, fiber)| {
            acc + f.eval_on_weights(fiber) * inverse_tangent_product(pt)
        }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{integer, ratio};
    use crate::profile::{relift, Flavor, PointDatum};
    use alloc::vec;
    use proptest::prelude::*;

    fn pd(k: &[i64], a: i64) -> PointDatum {
        PointDatum::new(k.to_vec(), a)
    }

    fn cp2(a: [i64; 3]) -> FixedPointProfile {
        FixedPointProfile::new(
            2,
            Flavor::AlmostComplex,
            vec![pd(&[1, 2], a[0]), pd(&[-1, 1], a[1]), pd(&[-2, -1], a[2])],
        )
    }

    fn cp1(a: [i64; 2]) -> FixedPointProfile {
        FixedPointProfile::new(1, Flavor::AlmostComplex, vec![pd(&[1], a[0]), pd(&[-1], a[1])])
    }

    #[test]
    fn power_sum_examples() {
        let p = cp2([0, -1, -2]);
        assert_eq!(power_sum(&p, 0).unwrap(), integer(0));
        assert_eq!(power_sum(&p, 2).unwrap(), integer(1));
        let single = FixedPointProfile::new(1, Flavor::AlmostComplex, vec![pd(&[1], 5)]);
        assert_eq!(power_sum(&single, 0).unwrap(), integer(1));
        let bad = FixedPointProfile::new(1, Flavor::AlmostComplex, vec![pd(&[0], 5)]);
        assert!(matches!(power_sum(&bad, 0), Err(Error::InvalidProfile(_))));
    }

    #[test]
    fn chern_top_examples() {
        assert_eq!(chern_top(&cp1([0, -2])).unwrap(), integer(2));
        assert_eq!(chern_top(&cp2([0, -1, -2])).unwrap(), integer(1));
        assert_eq!(chern_top(&cp2([0, 0, 0])).unwrap(), integer(0));
    }

    #[test]
    fn consistency_examples() {
        let r = consistency_check(&cp2([0, -1, -2])).unwrap();
        assert!(r.is_consistent());
        assert_eq!(r.moments.len(), 2);
        assert_eq!(r.chern_top, integer(1));
        assert!(!r.non_integral_warning());

        let single = FixedPointProfile::new(1, Flavor::AlmostComplex, vec![pd(&[1], 0)]);
        let r = consistency_check(&single).unwrap();
        assert!(!r.is_consistent());
        assert_eq!(r.first_failure().unwrap().value, integer(1));

        let frac = FixedPointProfile::new(1, Flavor::AlmostComplex, vec![pd(&[2], 0), pd(&[-2], 1)]);
        let r = consistency_check(&frac).unwrap();
        assert!(r.is_consistent());
        assert_eq!(r.chern_top, ratio(-1, 2).unwrap());
        assert!(r.non_integral_warning());
    }

    #[test]
    fn localize_symmetric_examples() {
        let p = cp2([0, -1, -2]);
        let line = BundleFiberData::from_line_weights(&p);
        let f = SymmetricPolynomial::e1_power(1, 2);
        assert_eq!(localize_symmetric(&p, &line, &f).unwrap(), chern_top(&p).unwrap());

        // O(1) ⊕ O(1) on CP¹
        let q = cp1([0, -1]);
        let b = BundleFiberData::new(2, vec![vec![0, 0], vec![-1, -1]]).unwrap();
        let e1 = SymmetricPolynomial::elementary(2, 1).unwrap();
        assert_eq!(localize_symmetric(&q, &b, &e1).unwrap(), integer(2));
        let e2 = SymmetricPolynomial::elementary(2, 2).unwrap();
        assert_eq!(
            localize_symmetric(&q, &b, &e2),
            Err(Error::DegreeMismatch { expected: 1, found: 2 })
        );
        assert!(matches!(
            localize_symmetric(&q, &line, &e1),
            Err(Error::FiberCountMismatch { .. })
        ));
        let line_q = BundleFiberData::from_line_weights(&q);
        assert!(matches!(
            localize_symmetric(&q, &line_q, &e1),
            Err(Error::RankMismatch { .. })
        ));
    }

    fn binomial(n: u32, k: u32) -> BigInt {
        (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
    }

    fn any_profile() -> impl Strategy<Value = FixedPointProfile> {
        (1usize..4).prop_flat_map(|n| {
            proptest::collection::vec(
                (proptest::collection::vec(prop_oneof![-4i64..0, 1i64..5], n), -5i64..6)
                    .prop_map(|(k, a)| PointDatum::new(k, a)),
                1..6,
            )
            .prop_map(move |pts| FixedPointProfile::new(n, Flavor::Oriented, pts))
        })
    }

    proptest! {
        #[test]
        fn relift_binomial_identity(p in any_profile(), a in -4i64..5) {
            let q = relift(&p, a);
            for t in 0..=p.dimension as u32 {
                let lhs = power_sum(&q, t).unwrap();
                let rhs = (0..=t).fold(Rational::zero(), |acc, u| {
                    let coeff = binomial(t, u) * num_traits::pow(BigInt::from(a), (t - u) as usize);
                    acc + Rational::from_integer(coeff) * power_sum(&p, u).unwrap()
                });
                prop_assert_eq!(lhs, rhs);
            }
        }

        #[test]
        fn sums_ignore_point_order_and_pair_flips(p in any_profile(), k in 0usize..6) {
            let mut q = p.clone();
            let len = q.points.len();
            q.points.rotate_left(k % len);
            if q.dimension >= 2 {
                q.points[0].tangent_weights[0] *= -1;
                q.points[0].tangent_weights[1] *= -1;
            }
            for t in 0..=p.dimension as u32 {
                prop_assert_eq!(power_sum(&p, t).unwrap(), power_sum(&q, t).unwrap());
            }
        }

        #[test]
        fn e1_power_reproduces_chern_top(p in any_profile()) {
            let f = SymmetricPolynomial::e1_power(1, p.dimension as u32);
            let line = BundleFiberData::from_line_weights(&p);
            prop_assert_eq!(localize_symmetric(&p, &line, &f).unwrap(), chern_top(&p).unwrap());
        }
    }
}

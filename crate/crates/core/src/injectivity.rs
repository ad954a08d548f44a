//! Line-weight levels, injectivity of a lift, and the fixed-point lower
//! bounds evaluated on concrete data.
//!
//! Points are grouped by equal line weight `s_t`. Each group contributes
//! `A_t = Σ 1/Π_j k_j` over its points, and the power sums regroup as
//! `Σ_t s_t^u A_t`. When the lower power sums vanish and there are at most
//! n levels, the Vandermonde system in the `A_t` forces them all to zero.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::Rational;
use crate::error::Error;
use crate::localize::{consistency_check, ConsistencyReport};
use crate::profile::FixedPointProfile;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Level {
    /// The common line weight `s_t`.
    pub value: i64,
    /// `A_t`.
    pub weight_sum: Rational,
    pub multiplicity: usize,
}

/// Levels sorted by strictly increasing line weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelDecomposition {
    pub levels: Vec<Level>,
}

impl LevelDecomposition {
    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn values(&self) -> Vec<i64> {
        self.levels.iter().map(|l| l.value).collect()
    }

    /// `Σ_t s_t^u A_t`.
    pub fn moment(&self, u: u32) -> Rational {
        self.levels.iter().fold(Rational::zero(), |acc, l| {
            acc + Rational::from_integer(num_traits::pow(BigInt::from(l.value), u as usize))
                * &l.weight_sum
        })
    }
}

pub fn aggregate_levels(p: &FixedPointProfile) -> Result<LevelDecomposition, Error> {
    p.ensure_valid()?;
    let mut groups: BTreeMap<i64, (Rational, usize)> = BTreeMap::new();
    for pt in &p.points {
        let slot = groups
            .entry(pt.line_weight)
            .or_insert_with(|| (Rational::zero(), 0));
        slot.0 += Rational::new(BigInt::one(), BigInt::from(pt.tangent_product()));
        slot.1 += 1;
    }
    Ok(LevelDecomposition {
        levels: groups
            .into_iter()
            .map(|(value, (weight_sum, multiplicity))| Level {
                value,
                weight_sum,
                multiplicity,
            })
            .collect(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classification {
    /// All line weights distinct.
    EverywhereInjective,
    /// Some line weight occurs once, but not all are distinct.
    SomewhereInjectiveOnly,
    NotSomewhereInjective,
}

impl Classification {
    pub fn is_somewhere_injective(self) -> bool {
        !matches!(self, Classification::NotSomewhereInjective)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Classification::EverywhereInjective => "everywhere-injective",
            Classification::SomewhereInjectiveOnly => "somewhere-injective-only",
            Classification::NotSomewhereInjective => "not-somewhere-injective",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

fn classify_levels(levels: &LevelDecomposition, r: usize) -> Classification {
    if levels.len() == r {
        Classification::EverywhereInjective
    } else if levels.levels.iter().any(|l| l.multiplicity == 1) {
        Classification::SomewhereInjectiveOnly
    } else {
        Classification::NotSomewhereInjective
    }
}

/// Depends only on the line weights.
pub fn classify(p: &FixedPointProfile) -> Result<Classification, Error> {
    let levels = aggregate_levels(p)?;
    Ok(classify_levels(&levels, p.len()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reconstruction {
    Solved(Vec<Rational>),
    /// More levels than available moments.
    Underdetermined,
}

/// Solves `Σ_t s_t^u A_t = moments[u]` for `u = 0..l-1`, where `l` is the
/// number of levels, using the inverse Vandermonde matrix given by the
/// Lagrange basis: `A_t = Σ_u [x^u] L_t(x) · moments[u]`.
pub fn vandermonde_reconstruct(levels: &[i64], moments: &[Rational]) -> Result<Reconstruction, Error> {
    let mut seen = levels.to_vec();
    seen.sort_unstable();
    if let Some(w) = seen.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::Repeated(w[0]));
    }
    let l = levels.len();
    if l > moments.len() {
        return Ok(Reconstruction::Underdetermined);
    }
    let mut out = Vec::with_capacity(l);
    for (t, &st) in levels.iter().enumerate() {
        // coefficients of Π_{j≠t} (x - s_j), lowest degree first
        let mut poly = vec![BigInt::one()];
        let mut denom = BigInt::one();
        for (j, &sj) in levels.iter().enumerate() {
            if j == t {
                continue;
            }
            let mut next = vec![BigInt::zero(); poly.len() + 1];
            for (i, c) in poly.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * BigInt::from(sj);
            }
            poly = next;
            denom *= BigInt::from(st - sj);
        }
        let num = poly
            .iter()
            .zip(moments)
            .fold(Rational::zero(), |acc, (c, m)| acc + Rational::from_integer(c.clone()) * m);
        out.push(num / Rational::from_integer(denom));
    }
    Ok(Reconstruction::Solved(out))
}

/// The three fixed-point statements checked by [`theorem_report`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Statement {
    /// Nonzero top Chern number forces at least n+1 fixed points.
    ChernNonzeroBound,
    /// A somewhere injective lift forces at least n+1 fixed points.
    SomewhereInjectiveBound,
    /// With exactly n+1 fixed points, either the Chern number is nonzero and
    /// the lift everywhere injective, or the number vanishes and the lift is
    /// not somewhere injective.
    Dichotomy,
}

impl Statement {
    pub const ALL: [Statement; 3] = [
        Statement::ChernNonzeroBound,
        Statement::SomewhereInjectiveBound,
        Statement::Dichotomy,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Statement::ChernNonzeroBound => "1",
            Statement::SomewhereInjectiveBound => "2",
            Statement::Dichotomy => "3",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VerdictStatus {
    Verified,
    Violated,
    /// The hypothesis does not hold for this profile.
    NotApplicable,
}

impl VerdictStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            VerdictStatus::Verified => "verified",
            VerdictStatus::Violated => "violated",
            VerdictStatus::NotApplicable => "not-applicable",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DichotomyCase {
    /// Nonzero Chern number, everywhere injective.
    NonzeroInjective,
    /// Zero Chern number, not somewhere injective.
    ZeroNonInjective,
}

impl DichotomyCase {
    pub fn label(self) -> &'static str {
        match self {
            DichotomyCase::NonzeroInjective => "a",
            DichotomyCase::ZeroNonInjective => "b",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verdict {
    pub statement: Statement,
    pub status: VerdictStatus,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub consistency: ConsistencyReport,
    pub levels: LevelDecomposition,
    pub classification: Classification,
    pub chern_top: Rational,
    /// One entry per [`Statement`], in order.
    pub verdicts: Vec<Verdict>,
    /// Which branch of the dichotomy held, when it was verified.
    pub dichotomy: Option<DichotomyCase>,
}

impl TheoremReport {
    /// Verdicts on data failing the vanishing constraints say nothing about
    /// actual actions.
    pub fn is_vacuous(&self) -> bool {
        !self.consistency.is_consistent()
    }

    pub fn any_violated(&self) -> bool {
        self.verdicts.iter().any(|v| v.status == VerdictStatus::Violated)
    }

    pub fn status(&self, s: Statement) -> VerdictStatus {
        self.verdicts
            .iter()
            .find(|v| v.statement == s)
            .map(|v| v.status)
            .unwrap_or(VerdictStatus::NotApplicable)
    }
}

pub fn theorem_report(p: &FixedPointProfile) -> Result<TheoremReport, Error> {
    let consistency = consistency_check(p)?;
    let levels = aggregate_levels(p)?;
    let r = p.len();
    let n = p.dimension;
    let classification = classify_levels(&levels, r);
    let chern_top = consistency.chern_top.clone();
    let consistent = consistency.is_consistent();
    let chern_nonzero = !chern_top.is_zero();
    let bound_holds = r > n;

    let bound = |applies: bool| match (applies, bound_holds) {
        (false, _) => VerdictStatus::NotApplicable,
        (true, true) => VerdictStatus::Verified,
        (true, false) => VerdictStatus::Violated,
    };
    let first = bound(chern_nonzero);
    let second = bound(consistent && classification.is_somewhere_injective());

    let mut dichotomy = None;
    let third = if consistent && r == n + 1 {
        let case_a = chern_nonzero && classification == Classification::EverywhereInjective;
        let case_b = !chern_nonzero && !classification.is_somewhere_injective();
        match (case_a, case_b) {
            (true, false) => {
                dichotomy = Some(DichotomyCase::NonzeroInjective);
                VerdictStatus::Verified
            }
            (false, true) => {
                dichotomy = Some(DichotomyCase::ZeroNonInjective);
                VerdictStatus::Verified
            }
            _ => VerdictStatus::Violated,
        }
    } else {
        VerdictStatus::NotApplicable
    };

    let verdicts = Statement::ALL
        .iter()
        .zip([first, second, third])
        .map(|(&statement, status)| Verdict { statement, status })
        .collect();

    Ok(TheoremReport {
        consistency,
        levels,
        classification,
        chern_top,
        verdicts,
        dichotomy,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{integer, ratio};
    use crate::localize::power_sum;
    use crate::profile::{relift, Flavor, PointDatum};
    use proptest::prelude::*;

    fn cp2(a: [i64; 3]) -> FixedPointProfile {
        FixedPointProfile::new(
            2,
            Flavor::AlmostComplex,
            vec![
                PointDatum::new(vec![1, 2], a[0]),
                PointDatum::new(vec![-1, 1], a[1]),
                PointDatum::new(vec![-2, -1], a[2]),
            ],
        )
    }

    fn level(value: i64, a: Rational, multiplicity: usize) -> Level {
        Level {
            value,
            weight_sum: a,
            multiplicity,
        }
    }

    #[test]
    fn levels_of_cp2() {
        let d = aggregate_levels(&cp2([0, -1, -2])).unwrap();
        assert_eq!(
            d.levels,
            vec![
                level(-2, ratio(1, 2).unwrap(), 1),
                level(-1, integer(-1), 1),
                level(0, ratio(1, 2).unwrap(), 1),
            ]
        );
        let flat = aggregate_levels(&cp2([0, 0, 0])).unwrap();
        assert_eq!(flat.levels, vec![level(0, integer(0), 3)]);
        let cancel = FixedPointProfile::new(
            1,
            Flavor::Oriented,
            vec![PointDatum::new(vec![3], 7), PointDatum::new(vec![-3], 7)],
        );
        assert_eq!(aggregate_levels(&cancel).unwrap().levels, vec![level(7, integer(0), 2)]);
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify(&cp2([0, -1, -2])).unwrap(), Classification::EverywhereInjective);
        assert_eq!(classify(&cp2([0, 0, 5])).unwrap(), Classification::SomewhereInjectiveOnly);
        let two = FixedPointProfile::new(
            1,
            Flavor::AlmostComplex,
            vec![PointDatum::new(vec![1], 0), PointDatum::new(vec![-1], 0)],
        );
        assert_eq!(classify(&two).unwrap(), Classification::NotSomewhereInjective);
    }

    #[test]
    fn vandermonde_examples() {
        let zero = vec![integer(0), integer(0)];
        assert_eq!(
            vandermonde_reconstruct(&[0, 1], &zero).unwrap(),
            Reconstruction::Solved(vec![integer(0), integer(0)])
        );
        let p = cp2([0, -1, -2]);
        let moments: Vec<Rational> = (0..2).map(|t| power_sum(&p, t).unwrap()).collect();
        assert_eq!(
            vandermonde_reconstruct(&[0, -1, -2], &moments).unwrap(),
            Reconstruction::Underdetermined
        );
        let sixth = ratio(1, 6).unwrap();
        assert_eq!(
            vandermonde_reconstruct(&[2], &[sixth.clone()]).unwrap(),
            Reconstruction::Solved(vec![sixth])
        );
        assert_eq!(vandermonde_reconstruct(&[1, 1], &zero), Err(Error::Repeated(1)));
    }

    /// Gaussian elimination on the explicit Vandermonde system.
    fn gauss_solve(levels: &[i64], moments: &[Rational]) -> Vec<Rational> {
        let l = levels.len();
        let mut m: Vec<Vec<Rational>> = (0..l)
            .map(|u| {
                let mut row: Vec<Rational> = levels
                    .iter()
                    .map(|&s| Rational::from_integer(num_traits::pow(BigInt::from(s), u)))
                    .collect();
                row.push(moments[u].clone());
                row
            })
            .collect();
        for c in 0..l {
            let piv = (c..l).find(|&r| !m[r][c].is_zero()).unwrap();
            m.swap(c, piv);
            let inv = m[c][c].recip();
            for x in m[c].iter_mut() {
                *x *= &inv;
            }
            for r in 0..l {
                if r != c && !m[r][c].is_zero() {
                    let f = m[r][c].clone();
                    let pivot_row = m[c].clone();
                    for (x, y) in m[r].iter_mut().zip(pivot_row) {
                        *x -= &f * y;
                    }
                }
            }
        }
        m.into_iter().map(|row| row[l].clone()).collect()
    }

    #[test]
    fn theorem_report_examples() {
        let r = theorem_report(&cp2([0, -1, -2])).unwrap();
        assert!(!r.is_vacuous());
        assert!(r.verdicts.iter().all(|v| v.status == VerdictStatus::Verified));
        assert_eq!(r.dichotomy, Some(DichotomyCase::NonzeroInjective));

        let r = theorem_report(&cp2([0, 0, 0])).unwrap();
        assert_eq!(r.status(Statement::ChernNonzeroBound), VerdictStatus::NotApplicable);
        assert_eq!(r.status(Statement::SomewhereInjectiveBound), VerdictStatus::NotApplicable);
        assert_eq!(r.status(Statement::Dichotomy), VerdictStatus::Verified);
        assert_eq!(r.dichotomy, Some(DichotomyCase::ZeroNonInjective));

        // Level 5 is a lone point with A = 1/2 while only two levels exist,
        // so the constraints must break.
        let p = cp2([0, 0, 5]);
        let r = theorem_report(&p).unwrap();
        assert!(r.is_vacuous());
        assert_eq!(r.consistency.moments[1].value, ratio(5, 2).unwrap());
        assert_eq!(r.classification, Classification::SomewhereInjectiveOnly);
        assert_eq!(r.status(Statement::Dichotomy), VerdictStatus::NotApplicable);
        let lone = r.levels.levels.iter().find(|l| l.value == 5).unwrap();
        assert_eq!(lone.weight_sum, ratio(1, 2).unwrap());
    }

    #[test]
    fn single_point_violation_is_vacuous() {
        let p = FixedPointProfile::new(1, Flavor::AlmostComplex, vec![PointDatum::new(vec![1], 5)]);
        let r = theorem_report(&p).unwrap();
        assert!(r.is_vacuous());
        assert_eq!(r.status(Statement::ChernNonzeroBound), VerdictStatus::Violated);
    }

    fn any_profile() -> impl Strategy<Value = FixedPointProfile> {
        (1usize..4).prop_flat_map(|n| {
            proptest::collection::vec(
                (proptest::collection::vec(prop_oneof![-4i64..0, 1i64..5], n), -4i64..5)
                    .prop_map(|(k, a)| PointDatum::new(k, a)),
                1..7,
            )
            .prop_map(move |pts| FixedPointProfile::new(n, Flavor::AlmostComplex, pts))
        })
    }

    proptest! {
        #[test]
        fn levels_regroup_power_sums(p in any_profile()) {
            let d = aggregate_levels(&p).unwrap();
            prop_assert_eq!(d.levels.iter().map(|l| l.multiplicity).sum::<usize>(), p.len());
            prop_assert!(d.levels.windows(2).all(|w| w[0].value < w[1].value));
            for u in 0..=p.dimension as u32 {
                prop_assert_eq!(d.moment(u), power_sum(&p, u).unwrap());
            }
        }

        #[test]
        fn lone_levels_are_nonzero(p in any_profile()) {
            let d = aggregate_levels(&p).unwrap();
            for l in d.levels.iter().filter(|l| l.multiplicity == 1) {
                prop_assert!(!l.weight_sum.is_zero());
            }
        }

        #[test]
        fn reconstruction_matches_elimination(
            mut s in proptest::collection::btree_set(-6i64..7, 1..5),
            a in proptest::collection::vec((-5i64..6, 1i64..5), 4),
        ) {
            let levels: Vec<i64> = core::mem::take(&mut s).into_iter().collect();
            let truth: Vec<Rational> = a.iter().take(levels.len()).map(|&(n, d)| ratio(n, d).unwrap()).collect();
            let moments: Vec<Rational> = (0..levels.len())
                .map(|u| levels.iter().zip(&truth).fold(Rational::zero(), |acc, (&s, x)| {
                    acc + Rational::from_integer(num_traits::pow(BigInt::from(s), u)) * x
                }))
                .collect();
            prop_assert_eq!(gauss_solve(&levels, &moments), truth.clone());
            prop_assert_eq!(vandermonde_reconstruct(&levels, &moments).unwrap(), Reconstruction::Solved(truth));
        }

        #[test]
        fn classification_survives_relift(p in any_profile(), a in -9i64..10) {
            prop_assert_eq!(classify(&relift(&p, a)).unwrap(), classify(&p).unwrap());
        }

        #[test]
        fn consistent_with_few_levels_forces_zero(p in any_profile()) {
            let r = theorem_report(&p).unwrap();
            if r.consistency.is_consistent() && r.levels.len() <= p.dimension {
                prop_assert!(r.levels.levels.iter().all(|l| l.weight_sum.is_zero()));
                let moments: Vec<Rational> = r.consistency.moments.iter().map(|m| m.value.clone()).collect();
                let solved = vandermonde_reconstruct(&r.levels.values(), &moments).unwrap();
                prop_assert_eq!(solved, Reconstruction::Solved(vec![Rational::zero(); r.levels.len()]));
            }
        }
    }
}

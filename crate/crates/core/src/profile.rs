//! Fixed-point weight data and its symmetries.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::Error;

/// Which sign regime the tangent weights live in.
///
/// For almost-complex data the sign of every tangent weight is meaningful.
/// For oriented data each point's weights are only defined up to an even
/// number of sign changes, so only their product is an invariant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Flavor {
    Oriented,
    AlmostComplex,
}

impl Flavor {
    pub fn as_str(self) -> &'static str {
        match self {
            Flavor::Oriented => "oriented",
            Flavor::AlmostComplex => "almost-complex",
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl core::str::FromStr for Flavor {
    type Err = ();
    fn from_str(s: &str) -> Result<Self, ()> {
        match s {
            "oriented" => Ok(Flavor::Oriented),
            "almost-complex" => Ok(Flavor::AlmostComplex),
            _ => Err(()),
        }
    }
}

/// Weights at one isolated fixed point: the tangent weights `k_j` of the
/// isotropy representation and the weight `a` of the lifted action on the
/// line-bundle fiber.
///
/// Points order by tangent weights first, then line weight.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PointDatum {
    pub tangent_weights: Vec<i64>,
    pub line_weight: i64,
}

impl PointDatum {
    pub fn new(tangent_weights: Vec<i64>, line_weight: i64) -> Self {
        Self {
            tangent_weights,
            line_weight,
        }
    }

    /// `Π_j k_j`. Sign-flip ambiguity in the oriented regime cancels here.
    pub fn tangent_product(&self) -> i128 {
        self.tangent_weights.iter().map(|&k| k as i128).product()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FixedPointProfile {
    /// Complex dimension n of the 2n-manifold.
    pub dimension: usize,
    pub flavor: Flavor,
    pub points: Vec<PointDatum>,
}

impl FixedPointProfile {
    pub fn new(dimension: usize, flavor: Flavor, points: Vec<PointDatum>) -> Self {
        Self {
            dimension,
            flavor,
            points,
        }
    }

    /// Builds a profile and rejects it unless [`validate`] passes.
    pub fn checked(dimension: usize, flavor: Flavor, points: Vec<PointDatum>) -> Result<Self, Error> {
        let p = Self::new(dimension, flavor, points);
        p.ensure_valid()?;
        Ok(p)
    }

    /// Number of fixed points r.
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn line_weights(&self) -> impl Iterator<Item = i64> + '_ {
        self.points.iter().map(|p| p.line_weight)
    }

    pub(crate) fn ensure_valid(&self) -> Result<(), Error> {
        let v = validate(self);
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidProfile(v))
        }
    }
}

impl Ord for FixedPointProfile {
    /// `(n, r)` first, then the point lists, then flavor.
    fn cmp(&self, other: &Self) -> Ordering {
        (self.dimension, self.points.len())
            .cmp(&(other.dimension, other.points.len()))
            .then_with(|| self.points.cmp(&other.points))
            .then_with(|| self.flavor.cmp(&other.flavor))
    }
}

impl PartialOrd for FixedPointProfile {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    ZeroDimension,
    NoPoints,
    WrongTangentCount {
        point: usize,
        expected: usize,
        found: usize,
    },
    ZeroTangentWeight {
        point: usize,
        index: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ZeroDimension => f.write_str("dimension must be positive"),
            Violation::NoPoints => f.write_str("profile has no fixed points"),
            Violation::WrongTangentCount {
                point,
                expected,
                found,
            } => write!(
                f,
                "wrong tangent-weight count at point {point}: expected {expected}, found {found}"
            ),
            Violation::ZeroTangentWeight { point, index } => {
                write!(f, "zero tangent weight at point {point}, position {index}")
            }
        }
    }
}

/// Every structural problem with `p`; empty means valid.
pub fn validate(p: &FixedPointProfile) -> Vec<Violation> {
    let mut out = Vec::new();
    if p.dimension == 0 {
        out.push(Violation::ZeroDimension);
    }
    if p.points.is_empty() {
        out.push(Violation::NoPoints);
    }
    for (i, pt) in p.points.iter().enumerate() {
        if pt.tangent_weights.len() != p.dimension {
            out.push(Violation::WrongTangentCount {
                point: i,
                expected: p.dimension,
                found: pt.tangent_weights.len(),
            });
        }
        for (j, &k) in pt.tangent_weights.iter().enumerate() {
            if k == 0 {
                out.push(Violation::ZeroTangentWeight { point: i, index: j });
            }
        }
    }
    out
}

/// Switches to another lift of the action: every line weight moves by `a`.
pub fn relift(p: &FixedPointProfile, a: i64) -> FixedPointProfile {
    let mut out = p.clone();
    for pt in &mut out.points {
        pt.line_weight += a;
    }
    out
}

/// Replaces the line bundle by the determinant of the tangent bundle: the
/// line weight at each point becomes `Σ_j k_j`.
pub fn determinant_lift(p: &FixedPointProfile) -> Result<FixedPointProfile, Error> {
    if p.flavor != Flavor::AlmostComplex {
        return Err(Error::WrongFlavor {
            expected: Flavor::AlmostComplex,
        });
    }
    let mut out = p.clone();
    for pt in &mut out.points {
        pt.line_weight = pt.tangent_weights.iter().sum();
    }
    Ok(out)
}

/// Lexicographically least tangent tuple reachable from `weights` within
/// the flavor's per-point symmetry.
pub(crate) fn canonical_tangent(weights: &[i64], flavor: Flavor) -> Vec<i64> {
    let mut w: Vec<i64> = weights.to_vec();
    if flavor == Flavor::Oriented && !w.is_empty() {
        // Even sign changes preserve the parity of the negative count. The
        // least sorted tuple negates everything if parity allows, otherwise
        // all but the smallest magnitude.
        let odd_negatives = w.iter().filter(|&&k| k < 0).count() % 2 == 1;
        let all_negative_ok = (w.len() % 2 == 1) == odd_negatives;
        w.iter_mut().for_each(|k| *k = -k.abs());
        w.sort_unstable();
        if !all_negative_ok {
            let last = w.len() - 1;
            w[last] = -w[last];
        }
    } else {
        w.sort_unstable();
    }
    w
}

fn normalized(p: &FixedPointProfile) -> FixedPointProfile {
    let shift = p.line_weights().min().unwrap_or(0);
    let mut points: Vec<PointDatum> = p
        .points
        .iter()
        .map(|pt| PointDatum::new(canonical_tangent(&pt.tangent_weights, p.flavor), pt.line_weight - shift))
        .collect();
    points.sort_unstable();
    FixedPointProfile::new(p.dimension, p.flavor, points)
}

fn negated(p: &FixedPointProfile) -> FixedPointProfile {
    let points = p
        .points
        .iter()
        .map(|pt| PointDatum::new(pt.tangent_weights.iter().map(|k| -k).collect(), -pt.line_weight))
        .collect();
    FixedPointProfile::new(p.dimension, p.flavor, points)
}

/// Least representative of `p` under point permutations, per-point tangent
/// symmetries, line-weight shifts and reversal of the circle direction.
pub fn canonicalize(p: &FixedPointProfile) -> FixedPointProfile {
    let a = normalized(p);
    let b = normalized(&negated(p));
    a.min(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn cp1() -> FixedPointProfile {
        FixedPointProfile::new(
            1,
            Flavor::AlmostComplex,
            vec![PointDatum::new(vec![1], 0), PointDatum::new(vec![-1], 1)],
        )
    }

    #[test]
    fn validate_examples() {
        assert!(validate(&cp1()).is_empty());
        let zero = FixedPointProfile::new(1, Flavor::AlmostComplex, vec![PointDatum::new(vec![0], 0)]);
        assert_eq!(validate(&zero), vec![Violation::ZeroTangentWeight { point: 0, index: 0 }]);
        let short = FixedPointProfile::new(2, Flavor::AlmostComplex, vec![PointDatum::new(vec![1], 0)]);
        assert_eq!(
            validate(&short),
            vec![Violation::WrongTangentCount { point: 0, expected: 2, found: 1 }]
        );
        let empty = FixedPointProfile::new(1, Flavor::Oriented, vec![]);
        assert_eq!(validate(&empty), vec![Violation::NoPoints]);
        assert!(FixedPointProfile::checked(1, Flavor::Oriented, vec![]).is_err());
    }

    #[test]
    fn relift_examples() {
        let p = relift(&cp1(), 5);
        assert_eq!(p.line_weights().collect::<Vec<_>>(), vec![5, 6]);
        assert_eq!(relift(&cp1(), 0), cp1());
        assert_eq!(relift(&relift(&cp1(), 2), -2), cp1());
    }

    #[test]
    fn determinant_lift_examples() {
        let d = determinant_lift(&cp1()).unwrap();
        assert_eq!(d.line_weights().collect::<Vec<_>>(), vec![1, -1]);
        let cp2 = FixedPointProfile::new(
            2,
            Flavor::AlmostComplex,
            vec![
                PointDatum::new(vec![1, 2], 0),
                PointDatum::new(vec![-1, 1], -1),
                PointDatum::new(vec![-2, -1], -2),
            ],
        );
        let d = determinant_lift(&cp2).unwrap();
        assert_eq!(d.line_weights().collect::<Vec<_>>(), vec![3, 0, -3]);
        let mut oriented = cp1();
        oriented.flavor = Flavor::Oriented;
        assert!(matches!(determinant_lift(&oriented), Err(Error::WrongFlavor { .. })));
    }

    #[test]
    fn canonicalize_examples() {
        let p = FixedPointProfile::new(
            2,
            Flavor::AlmostComplex,
            vec![
                PointDatum::new(vec![2, 1], 4),
                PointDatum::new(vec![-1, 1], -1),
                PointDatum::new(vec![-2, -1], -2),
            ],
        );
        let mut q = p.clone();
        q.points.rotate_left(1);
        assert_eq!(canonicalize(&p), canonicalize(&q));
        assert_eq!(canonicalize(&p), canonicalize(&relift(&p, 7)));
        assert_eq!(canonicalize(&p), canonicalize(&negated(&p)));
        let c = canonicalize(&p);
        assert_eq!(c.line_weights().min(), Some(0));
    }

    #[test]
    fn oriented_tangent_canonical_form() {
        assert_eq!(canonical_tangent(&[1, 2], Flavor::Oriented), vec![-2, -1]);
        assert_eq!(canonical_tangent(&[-1, 2], Flavor::Oriented), vec![-2, 1]);
        assert_eq!(canonical_tangent(&[3, 1, 2], Flavor::Oriented), vec![-3, -2, 1]);
        assert_eq!(canonical_tangent(&[-3, 1, 2], Flavor::Oriented), vec![-3, -2, -1]);
        assert_eq!(canonical_tangent(&[2, -1], Flavor::AlmostComplex), vec![-1, 2]);
    }

    /// All tuples reachable by an even number of sign changes, sorted.
    fn even_flip_orbit_min(w: &[i64]) -> Vec<i64> {
        let n = w.len();
        (0u32..1 << n)
            .filter(|m| m.count_ones() % 2 == 0)
            .map(|m| {
                let mut v: Vec<i64> = w
                    .iter()
                    .enumerate()
                    .map(|(i, &k)| if m >> i & 1 == 1 { -k } else { k })
                    .collect();
                v.sort_unstable();
                v
            })
            .min()
            .unwrap()
    }

    fn weight() -> impl Strategy<Value = i64> {
        prop_oneof![-5i64..0, 1i64..6]
    }

    fn profile(flavor: Flavor) -> impl Strategy<Value = FixedPointProfile> {
        (1usize..4).prop_flat_map(move |n| {
            proptest::collection::vec(
                (proptest::collection::vec(weight(), n), -6i64..7)
                    .prop_map(|(k, a)| PointDatum::new(k, a)),
                1..5,
            )
            .prop_map(move |pts| FixedPointProfile::new(n, flavor, pts))
        })
    }

    proptest! {
        #[test]
        fn oriented_canonical_matches_brute_force(w in proptest::collection::vec(weight(), 1..6)) {
            prop_assert_eq!(canonical_tangent(&w, Flavor::Oriented), even_flip_orbit_min(&w));
        }

        #[test]
        fn canonicalize_is_idempotent(p in profile(Flavor::AlmostComplex), a in -9i64..10) {
            let c = canonicalize(&p);
            prop_assert_eq!(canonicalize(&c), c.clone());
            prop_assert_eq!(canonicalize(&relift(&p, a)), c.clone());
            prop_assert!(validate(&c).is_empty());
        }

        #[test]
        fn oriented_canonicalize_absorbs_pair_flips(p in profile(Flavor::Oriented), i in 0usize..8) {
            let c = canonicalize(&p);
            prop_assert_eq!(canonicalize(&c), c.clone());
            let mut q = p.clone();
            let pt = i % q.points.len();
            if q.dimension >= 2 {
                q.points[pt].tangent_weights[0] *= -1;
                q.points[pt].tangent_weights[1] *= -1;
                prop_assert_eq!(canonicalize(&q), c);
            }
        }

        #[test]
        fn determinant_lift_commutes_with_permutation(p in profile(Flavor::AlmostComplex), k in 0usize..5) {
            let mut q = p.clone();
            let len = q.points.len();
            q.points.rotate_left(k % len);
            let mut lifted = determinant_lift(&p).unwrap();
            lifted.points.rotate_left(k % len);
            prop_assert_eq!(determinant_lift(&q).unwrap(), lifted);
        }
    }
}

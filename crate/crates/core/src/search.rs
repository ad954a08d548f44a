//! Bounded exhaustive search for weight data satisfying the vanishing
//! constraints, and auditing of the resulting catalogs.
//!
//! Points are fixed one at a time as a nondecreasing sequence of canonical
//! tangent tuples. Each tuple contributes `L/Π_j k_j` to the scaled t=0
//! moment, where `L` is the lcm of all attainable products, so the whole
//! search runs on machine integers. A branch is cut as soon as the remaining
//! points cannot bring the partial t=0 moment back to zero. Line weights are
//! chosen last and the higher moments checked on the completed assignment.
//!
//! The search tree splits by the first point's tangent tuple. Partitions
//! share nothing, and [`merge_partitions`] fixes the output order, so any
//! schedule over partitions yields identical results.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::Zero;

use crate::error::Error;
use crate::injectivity::{theorem_report, DichotomyCase, Statement, VerdictStatus};
use crate::localize::power_sum_unchecked;
use crate::profile::{canonical_tangent, canonicalize, FixedPointProfile, Flavor, PointDatum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SearchSpec {
    pub dimension: usize,
    pub points: usize,
    /// Tangent weights range over `[-B, B] \ {0}`.
    pub tangent_bound: u32,
    /// Canonical line weights range over `[0, A]`.
    pub line_bound: u32,
    pub flavor: Flavor,
}

impl SearchSpec {
    pub fn new(
        dimension: usize,
        points: usize,
        tangent_bound: u32,
        line_bound: u32,
        flavor: Flavor,
    ) -> Result<Self, Error> {
        let spec = Self {
            dimension,
            points,
            tangent_bound,
            line_bound,
            flavor,
        };
        spec.check()?;
        Ok(spec)
    }

    fn check(&self) -> Result<(), Error> {
        if self.dimension == 0 {
            return Err(Error::SearchBounds("dimension must be at least 1"));
        }
        if self.points == 0 {
            return Err(Error::SearchBounds("point count must be at least 1"));
        }
        if self.tangent_bound == 0 {
            return Err(Error::SearchBounds("tangent bound must be at least 1"));
        }
        Ok(())
    }

    fn nonzero_weights(&self) -> Vec<i64> {
        let b = self.tangent_bound as i64;
        (-b..=b).filter(|&k| k != 0).collect()
    }
}

const MAX_TANGENT_TUPLES: u128 = 1 << 20;

#[derive(Debug, Clone)]
struct TangentOption {
    weights: Vec<i64>,
    /// `L / Π_j k_j`
    scaled: i128,
}

/// Precomputed per-point data for one [`SearchSpec`].
#[derive(Debug, Clone)]
pub struct SearchPlan {
    spec: SearchSpec,
    options: Vec<TangentOption>,
    suffix_min: Vec<i128>,
    suffix_max: Vec<i128>,
}

/// Nondecreasing `len`-tuples drawn from `values` (which is sorted).
fn multisets(values: &[i64], len: usize) -> Vec<Vec<i64>> {
    fn go(values: &[i64], start: usize, len: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for i in start..values.len() {
            cur.push(values[i]);
            go(values, i, len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(values, 0, len, &mut Vec::with_capacity(len), &mut out);
    out
}

impl SearchPlan {
    pub fn new(spec: &SearchSpec) -> Result<Self, Error> {
        spec.check()?;
        let overflow = Error::SearchBounds("bounds too large for exact machine-integer search");
        let weights = spec.nonzero_weights();
        // Multisets of n weights out of 2B.
        let tuple_count = (0..spec.dimension).try_fold(1u128, |acc, i| {
            Some(acc.checked_mul((weights.len() + i) as u128)? / (i as u128 + 1))
        });
        if tuple_count.is_none_or(|c| c > MAX_TANGENT_TUPLES) {
            return Err(overflow);
        }
        // The lcm of all products of n weights from [1, B] is lcm(1..=B)^n.
        let base = (1..=spec.tangent_bound as i128)
            .try_fold(1i128, |l, k| l.checked_div(l.gcd(&k))?.checked_mul(k))
            .ok_or(overflow.clone())?;
        let lcm = (0..spec.dimension)
            .try_fold(1i128, |acc, _| acc.checked_mul(base))
            .ok_or(overflow.clone())?;
        // The largest scaled moment, r·L·A^n, must fit.
        let a = (spec.line_bound as i128).max(1);
        (0..spec.dimension)
            .try_fold(lcm.checked_mul(spec.points as i128), |acc, _| Some(acc?.checked_mul(a)))
            .flatten()
            .ok_or(overflow)?;

        let tuples: BTreeSet<Vec<i64>> = multisets(&weights, spec.dimension)
            .into_iter()
            .map(|w| canonical_tangent(&w, spec.flavor))
            .collect();
        let products: Vec<i128> = tuples
            .iter()
            .map(|w| w.iter().map(|&k| k as i128).product::<i128>())
            .collect();

        let options: Vec<TangentOption> = tuples
            .into_iter()
            .zip(products)
            .map(|(weights, p)| TangentOption {
                weights,
                scaled: lcm / p,
            })
            .collect();
        let mut suffix_min = vec![i128::MAX; options.len() + 1];
        let mut suffix_max = vec![i128::MIN; options.len() + 1];
        for i in (0..options.len()).rev() {
            suffix_min[i] = suffix_min[i + 1].min(options[i].scaled);
            suffix_max[i] = suffix_max[i + 1].max(options[i].scaled);
        }
        Ok(Self {
            spec: *spec,
            options,
            suffix_min,
            suffix_max,
        })
    }

    pub fn spec(&self) -> &SearchSpec {
        &self.spec
    }

    /// Number of independent subtrees, one per first-point tangent tuple.
    pub fn partition_count(&self) -> usize {
        self.options.len()
    }

    /// Canonical consistent profiles whose first point uses tangent tuple
    /// `first`, sorted and without duplicates.
    pub fn enumerate_partition(&self, first: usize) -> Vec<FixedPointProfile> {
        let mut found = BTreeSet::new();
        if first < self.options.len() {
            let mut chosen = Vec::with_capacity(self.spec.points);
            chosen.push(first);
            self.extend(&mut chosen, self.options[first].scaled, &mut found);
        }
        found.into_iter().collect()
    }

    fn extend(&self, chosen: &mut Vec<usize>, sum: i128, found: &mut BTreeSet<FixedPointProfile>) {
        let remaining = (self.spec.points - chosen.len()) as i128;
        if remaining == 0 {
            if sum == 0 {
                self.assign_line_weights(chosen, found);
            }
            return;
        }
        let start = *chosen.last().unwrap();
        for idx in start..self.options.len() {
            // The remaining points after this one draw from options[idx..].
            let s = sum + self.options[idx].scaled;
            let rest = remaining - 1;
            if s + rest * self.suffix_min[idx] > 0 || s + rest * self.suffix_max[idx] < 0 {
                continue;
            }
            chosen.push(idx);
            self.extend(chosen, s, found);
            chosen.pop();
        }
    }

    fn assign_line_weights(&self, chosen: &[usize], found: &mut BTreeSet<FixedPointProfile>) {
        let r = chosen.len();
        let top = self.spec.line_bound as i64;
        let mut a = vec![0i64; r];
        loop {
            if a.iter().any(|&x| x == 0) && self.higher_moments_vanish(chosen, &a) {
                let points = chosen
                    .iter()
                    .zip(&a)
                    .map(|(&i, &w)| PointDatum::new(self.options[i].weights.clone(), w))
                    .collect();
                let p = FixedPointProfile::new(self.spec.dimension, self.spec.flavor, points);
                found.insert(canonicalize(&p));
            }
            // Next assignment; weights on equal tangent tuples stay
            // nondecreasing since those points are interchangeable.
            let mut pos = r;
            loop {
                if pos == 0 {
                    return;
                }
                pos -= 1;
                if a[pos] < top {
                    a[pos] += 1;
                    for j in pos + 1..r {
                        a[j] = if chosen[j] == chosen[j - 1] { a[j - 1] } else { 0 };
                    }
                    break;
                }
            }
        }
    }

    fn higher_moments_vanish(&self, chosen: &[usize], a: &[i64]) -> bool {
        let mut pows: Vec<i128> = chosen.iter().map(|&i| self.options[i].scaled).collect();
        for _t in 1..self.spec.dimension {
            let mut s = 0i128;
            for (p, &w) in pows.iter_mut().zip(a) {
                *p *= w as i128;
                s += *p;
            }
            if s != 0 {
                return false;
            }
        }
        true
    }
}

/// Merges per-partition results into one sorted, duplicate-free list.
pub fn merge_partitions<I>(parts: I) -> Vec<FixedPointProfile>
where
    I: IntoIterator<Item = Vec<FixedPointProfile>>,
{
    let mut all: BTreeSet<FixedPointProfile> = BTreeSet::new();
    for part in parts {
        all.extend(part);
    }
    all.into_iter().collect()
}

/// All canonical profiles within the bounds whose power sums vanish for
/// `t = 0..n-1`, in canonical order. Single-threaded.
pub fn enumerate_consistent(spec: &SearchSpec) -> Result<Vec<FixedPointProfile>, Error> {
    let plan = SearchPlan::new(spec)?;
    Ok(merge_partitions(
        (0..plan.partition_count()).map(|i| plan.enumerate_partition(i)),
    ))
}

/// Reference enumerator without pruning or symmetry reduction: every
/// ordered tuple of points and every line-weight vector with minimum 0,
/// checked with exact rational power sums. Only usable on tiny bounds.
pub fn enumerate_unpruned(spec: &SearchSpec) -> Result<Vec<FixedPointProfile>, Error> {
    spec.check()?;
    let weights = spec.nonzero_weights();
    let n = spec.dimension;
    let r = spec.points;
    let tangent: Vec<Vec<i64>> = product_tuples(&weights, n);
    let lines: Vec<Vec<i64>> = product_tuples(&(0..=spec.line_bound as i64).collect::<Vec<_>>(), r)
        .into_iter()
        .filter(|a| a.contains(&0))
        .collect();
    let mut found = BTreeSet::new();
    let mut idx = vec![0usize; r];
    loop {
        for a in &lines {
            let points = idx
                .iter()
                .zip(a)
                .map(|(&i, &w)| PointDatum::new(tangent[i].clone(), w))
                .collect();
            let p = FixedPointProfile::new(n, spec.flavor, points);
            if (0..n as u32).all(|t| power_sum_unchecked(&p, t).is_zero()) {
                found.insert(canonicalize(&p));
            }
        }
        let mut pos = r;
        loop {
            if pos == 0 {
                return Ok(found.into_iter().collect());
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < tangent.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

fn product_tuples(values: &[i64], len: usize) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                values.iter().map(move |&v| {
                    let mut p = prefix.clone();
                    p.push(v);
                    p
                })
            })
            .collect();
    }
    out
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct StatusCounts {
    pub verified: usize,
    pub violated: usize,
    pub not_applicable: usize,
}

impl StatusCounts {
    fn bump(&mut self, s: VerdictStatus) {
        match s {
            VerdictStatus::Verified => self.verified += 1,
            VerdictStatus::Violated => self.violated += 1,
            VerdictStatus::NotApplicable => self.not_applicable += 1,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AuditReport {
    pub audited: usize,
    /// Profiles failing the vanishing constraints or validation; these are
    /// outside the audit's precondition and are not counted in `statements`.
    pub skipped: usize,
    /// Indexed like [`Statement::ALL`].
    pub statements: [StatusCounts; 3],
    pub dichotomy_nonzero_injective: usize,
    pub dichotomy_zero_non_injective: usize,
    pub first_counterexample: Option<FixedPointProfile>,
}

impl AuditReport {
    pub fn violations(&self) -> usize {
        self.statements.iter().map(|c| c.violated).sum()
    }

    pub fn counts(&self, s: Statement) -> StatusCounts {
        let i = Statement::ALL.iter().position(|&x| x == s).unwrap();
        self.statements[i]
    }
}

/// Runs the theorem checks over a catalog of consistent profiles.
pub fn catalog_audit<'a, I>(profiles: I) -> AuditReport
where
    I: IntoIterator<Item = &'a FixedPointProfile>,
{
    let mut report = AuditReport::default();
    for p in profiles {
        let Ok(tr) = theorem_report(p) else {
            report.skipped += 1;
            continue;
        };
        if tr.is_vacuous() {
            report.skipped += 1;
            continue;
        }
        report.audited += 1;
        for (slot, v) in report.statements.iter_mut().zip(&tr.verdicts) {
            slot.bump(v.status);
        }
        match tr.dichotomy {
            Some(DichotomyCase::NonzeroInjective) => report.dichotomy_nonzero_injective += 1,
            Some(DichotomyCase::ZeroNonInjective) => report.dichotomy_zero_non_injective += 1,
            None => {}
        }
        if tr.any_violated() && report.first_counterexample.is_none() {
            report.first_counterexample = Some(p.clone());
        }
    }
    report
}

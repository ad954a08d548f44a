//! Profiles with independently known answers.

use alloc::vec::Vec;

use crate::error::Error;
use crate::profile::{FixedPointProfile, Flavor, PointDatum};

/// CPⁿ with the circle acting by exponents `lambdas` on homogeneous
/// coordinates, and the line bundle O(d).
///
/// At the i-th coordinate point the tangent weights are `λ_j - λ_i` for
/// `j ≠ i` and the line weight is `-d·λ_i`. With this sign convention the
/// top power sum is `dⁿ`.
pub fn cpn(lambdas: &[i64], d: i64) -> Result<FixedPointProfile, Error> {
    let mut sorted = lambdas.to_vec();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::Repeated(w[0]));
    }
    let n = lambdas.len().saturating_sub(1);
    let points = lambdas
        .iter()
        .enumerate()
        .map(|(i, &li)| {
            let tangent = lambdas
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &lj)| lj - li)
                .collect();
            PointDatum::new(tangent, -d * li)
        })
        .collect();
    FixedPointProfile::checked(n, Flavor::AlmostComplex, points)
}

/// Product action on `M × N` with the external tensor product of the two
/// line bundles: one point per pair, tangent weights concatenated, line
/// weights added.
pub fn product(p: &FixedPointProfile, q: &FixedPointProfile) -> Result<FixedPointProfile, Error> {
    p.ensure_valid()?;
    q.ensure_valid()?;
    if p.flavor != q.flavor {
        return Err(Error::FlavorMismatch {
            left: p.flavor,
            right: q.flavor,
        });
    }
    let points: Vec<PointDatum> = p
        .points
        .iter()
        .flat_map(|a| {
            q.points.iter().map(move |b| {
                let mut k = a.tangent_weights.clone();
                k.extend_from_slice(&b.tangent_weights);
                PointDatum::new(k, a.line_weight + b.line_weight)
            })
        })
        .collect();
    Ok(FixedPointProfile::new(p.dimension + q.dimension, p.flavor, points))
}

/// Every line weight set to `a`: the lifts of the trivial bundle.
pub fn constant_lift(p: &FixedPointProfile, a: i64) -> FixedPointProfile {
    let mut out = p.clone();
    for pt in &mut out.points {
        pt.line_weight = a;
    }
    out
}

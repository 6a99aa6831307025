//! A metric on IFVs, the weighted distance and similarity it induces on
//! IFSs, and classification by maximum similarity.
//!
//! ```text
//! ϱ(a, b) = (1 + |s(a) − s(b)|)/3   if s(a) ≠ s(b)
//!         = |h(a) − h(b)|/3         otherwise
//! d(I1, I2) = Σ w_j ϱ(I1(x_j), I2(x_j))
//! S = 1 − d
//! ```
//!
//! Scores closer than `eps_order` count as equal, so ϱ inherits the jump
//! across the diagonal `s(a) = s(b)`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ifs::Ifs;
use crate::ifv::{Ifv, NumericPolicy, OrderKind};
use crate::isomorphism::gamma_tilde;
pub use crate::weights::WeightVector;

/// The metric ϱ, valued in `[0, 1]`.
pub fn rho(a: &Ifv, b: &Ifv, policy: &NumericPolicy) -> f64 {
    let ds = (a.score() - b.score()).abs();
    if ds <= policy.eps_order {
        (a.accuracy() - b.accuracy()).abs() / 3.0
    } else {
        (1.0 + ds) / 3.0
    }
}

fn weighted_rho(
    i1: &Ifs,
    i2: &Ifs,
    w: &WeightVector,
    policy: &NumericPolicy,
    map: impl Fn(&Ifv) -> Ifv,
) -> Result<f64> {
    i1.check_universe(i2)?;
    w.check_len(i1.len())?;
    Ok(i1
        .values()
        .iter()
        .zip(i2.values())
        .zip(w.as_slice())
        .map(|((a, b), wj)| wj * rho(&map(a), &map(b), policy))
        .sum())
}

/// `Σ w_j ϱ(I1(x_j), I2(x_j))`.
pub fn distance_d(i1: &Ifs, i2: &Ifs, w: &WeightVector, policy: &NumericPolicy) -> Result<f64> {
    weighted_rho(i1, i2, w, policy, |v| *v)
}

/// `1 − distance_d`, admissible for the XY order.
pub fn similarity_s(i1: &Ifs, i2: &Ifs, w: &WeightVector, policy: &NumericPolicy) -> Result<f64> {
    Ok(1.0 - distance_d(i1, i2, w, policy)?)
}

/// Similarity admissible for `ord`: under ZX both sets are first carried
/// to the XY world by the order isomorphism.
pub fn similarity_for(
    i1: &Ifs,
    i2: &Ifs,
    w: &WeightVector,
    ord: OrderKind,
    policy: &NumericPolicy,
) -> Result<f64> {
    let d = match ord {
        OrderKind::XY => weighted_rho(i1, i2, w, policy, |v| *v)?,
        OrderKind::ZX => weighted_rho(i1, i2, w, policy, |v| gamma_tilde(v, policy))?,
    };
    Ok(1.0 - d)
}

/// Patterns ranked by similarity to the unknown sample.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassificationResult {
    /// Descending similarity; equal similarities in ascending label order.
    pub ranking: Vec<(String, f64)>,
    pub winner: String,
}

/// Ranks every pattern by its similarity to `unknown`.
pub fn classify(
    unknown: &Ifs,
    patterns: &BTreeMap<String, Ifs>,
    w: &WeightVector,
    ord: OrderKind,
    policy: &NumericPolicy,
) -> Result<ClassificationResult> {
    if patterns.is_empty() {
        return Err(Error::EmptyPatternSet);
    }
    let mut ranking = patterns
        .iter()
        .map(|(label, p)| Ok((label.clone(), similarity_for(p, unknown, w, ord, policy)?)))
        .collect::<Result<Vec<_>>>()?;
    ranking.sort_by(|(la, sa), (lb, sb)| sb.total_cmp(sa).then_with(|| la.cmp(lb)));
    let winner = ranking[0].0.clone();
    Ok(ClassificationResult { ranking, winner })
}

//! Meet, join and finite infima/suprema under either linear order, plus the
//! closed-form infimum/supremum of a set described by its score range.
//!
//! For a set `Ω` with score set `{μ − ν}` let `ξ` be its infimum and `η` its
//! supremum. Under the XY order:
//!
//! ```text
//! inf Ω = ⟨μ̂, μ̂ − ξ⟩                 if ξ is attained, μ̂ = min μ at score ξ
//!       = ⟨(1 + ξ)/2, (1 − ξ)/2⟩      otherwise
//!
//! sup Ω = ⟨μ̃, μ̃ − η⟩                 if η is attained, μ̃ = max μ at score η
//!       = ⟨0, −η⟩                     if not attained and η ≤ 0
//!       = ⟨η, 0⟩                      if not attained and η > 0
//! ```
//!
//! Finite sets always attain both bounds. The unattained branches are only
//! reachable through a hand-built [`LatticeScan`].

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ifv::{Ifv, NumericPolicy, OrderKind};

/// Smaller of `a` and `b`; `a` on ties.
pub fn meet2(a: &Ifv, b: &Ifv, ord: OrderKind, policy: &NumericPolicy) -> Ifv {
    match a.compare(b, ord, policy) {
        Ordering::Greater => *b,
        _ => *a,
    }
}

/// Larger of `a` and `b`; `a` on ties.
pub fn join2(a: &Ifv, b: &Ifv, ord: OrderKind, policy: &NumericPolicy) -> Ifv {
    match a.compare(b, ord, policy) {
        Ordering::Less => *b,
        _ => *a,
    }
}

pub fn inf_finite(omega: &[Ifv], ord: OrderKind, policy: &NumericPolicy) -> Result<Ifv> {
    let (first, rest) = omega.split_first().ok_or(Error::EmptyCollection)?;
    Ok(rest
        .iter()
        .fold(*first, |acc, x| meet2(&acc, x, ord, policy)))
}

pub fn sup_finite(omega: &[Ifv], ord: OrderKind, policy: &NumericPolicy) -> Result<Ifv> {
    let (first, rest) = omega.split_first().ok_or(Error::EmptyCollection)?;
    Ok(rest
        .iter()
        .fold(*first, |acc, x| join2(&acc, x, ord, policy)))
}

/// Score-range description of a subset of IFVs.
///
/// `mu_hat` is present iff the lower score bound `xi` is attained and is then
/// the least membership among members at that score; `mu_tilde` likewise for
/// the upper bound `eta` with the greatest membership.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LatticeScan {
    pub xi: f64,
    pub eta: f64,
    pub mu_hat: Option<f64>,
    pub mu_tilde: Option<f64>,
}

impl LatticeScan {
    pub fn xi_attained(&self) -> bool {
        self.mu_hat.is_some()
    }

    pub fn eta_attained(&self) -> bool {
        self.mu_tilde.is_some()
    }

    fn check(&self, tol: f64) -> Result<()> {
        let bad = |msg: String| Err(Error::InconsistentScan(msg));
        let in_range = |x: f64| x.is_finite() && (-1.0 - tol..=1.0 + tol).contains(&x);
        if !in_range(self.xi) || !in_range(self.eta) {
            return bad(format!(
                "score bounds must lie in [-1, 1], got xi={}, eta={}",
                self.xi, self.eta
            ));
        }
        if self.xi > self.eta + tol {
            return bad(format!("xi={} exceeds eta={}", self.xi, self.eta));
        }
        // A member ⟨m, m − t⟩ at score t needs m ≥ max(t, 0) and 2m − t ≤ 1.
        let on_line =
            |m: f64, t: f64| m.is_finite() && m >= t.max(0.0) - tol && 2.0 * m - t <= 1.0 + tol;
        if let Some(m) = self.mu_hat {
            if !on_line(m, self.xi) {
                return bad(format!(
                    "mu_hat={m} is not a membership at score {}",
                    self.xi
                ));
            }
        }
        if let Some(m) = self.mu_tilde {
            if !on_line(m, self.eta) {
                return bad(format!(
                    "mu_tilde={m} is not a membership at score {}",
                    self.eta
                ));
            }
        }
        Ok(())
    }
}

/// Scans a finite collection. Scores within `eps_order` of an extreme are
/// grouped with it when picking `mu_hat`/`mu_tilde`.
pub fn scan_of(omega: &[Ifv], policy: &NumericPolicy) -> Result<LatticeScan> {
    if omega.is_empty() {
        return Err(Error::EmptyCollection);
    }
    let (xi, eta) = omega
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), a| {
            (lo.min(a.score()), hi.max(a.score()))
        });
    let mu_hat = omega
        .iter()
        .filter(|a| policy.same(a.score(), xi))
        .map(Ifv::mu)
        .fold(f64::INFINITY, f64::min);
    let mu_tilde = omega
        .iter()
        .filter(|a| policy.same(a.score(), eta))
        .map(Ifv::mu)
        .fold(f64::NEG_INFINITY, f64::max);
    Ok(LatticeScan {
        xi,
        eta,
        mu_hat: Some(mu_hat),
        mu_tilde: Some(mu_tilde),
    })
}

/// Infimum under XY from a scan.
pub fn inf_from_scan(scan: &LatticeScan, policy: &NumericPolicy) -> Result<Ifv> {
    scan.check(policy.eps_order)?;
    let xi = scan.xi;
    Ok(match scan.mu_hat {
        Some(m) => Ifv::saturating(m, m - xi),
        None => Ifv::saturating((1.0 + xi) / 2.0, (1.0 - xi) / 2.0),
    })
}

/// Supremum under XY from a scan.
pub fn sup_from_scan(scan: &LatticeScan, policy: &NumericPolicy) -> Result<Ifv> {
    scan.check(policy.eps_order)?;
    let eta = scan.eta;
    Ok(match scan.mu_tilde {
        Some(m) => Ifv::saturating(m, m - eta),
        None if eta <= 0.0 => Ifv::saturating(0.0, -eta),
        None => Ifv::saturating(eta, 0.0),
    })
}

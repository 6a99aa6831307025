//! Intuitionistic fuzzy values, their derived functionals and the two linear
//! orders used throughout the crate.
//!
//! An [`Ifv`] is a pair `⟨μ, ν⟩` with `μ, ν ∈ [0, 1]` and `μ + ν ≤ 1`. The
//! functionals are
//!
//! - score `s = μ − ν`
//! - accuracy `h = μ + ν`
//! - indeterminacy `π = 1 − μ − ν`
//! - similarity `L = (1 − ν) / ((1 − μ) + (1 − ν))`
//!
//! [`OrderKind::XY`] ranks by score, then accuracy. [`OrderKind::ZX`] ranks by
//! `L`, then accuracy. Both are linear orders with bottom `⟨0, 1⟩` and top
//! `⟨1, 0⟩`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerances for branch selection and constraint validation in floating
/// point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NumericPolicy {
    /// Key equality in comparators and branch selection.
    pub eps_order: f64,
    /// Slack allowed when validating domain constraints.
    pub eps_domain: f64,
}

impl NumericPolicy {
    pub const DEFAULT: NumericPolicy = NumericPolicy {
        eps_order: 1e-9,
        eps_domain: 1e-12,
    };

    /// Builds a policy, requiring `0 < eps_domain ≤ eps_order < 1e-3`.
    pub fn new(eps_order: f64, eps_domain: f64) -> Result<Self> {
        let ok = eps_domain > 0.0 && eps_domain <= eps_order && eps_order < 1e-3;
        if !ok {
            return Err(Error::BadParameter(format!(
                "policy requires 0 < eps_domain <= eps_order < 1e-3, got eps_order={eps_order}, eps_domain={eps_domain}"
            )));
        }
        Ok(NumericPolicy {
            eps_order,
            eps_domain,
        })
    }

    /// Same policy with `eps_order` replaced; `eps_domain` is lowered if it
    /// would exceed the new value.
    pub fn with_eps_order(self, eps_order: f64) -> Result<Self> {
        NumericPolicy::new(eps_order, self.eps_domain.min(eps_order))
    }

    pub(crate) fn same(&self, a: f64, b: f64) -> bool {
        (a - b).abs() <= self.eps_order
    }
}

impl Default for NumericPolicy {
    fn default() -> Self {
        NumericPolicy::DEFAULT
    }
}

/// Which linear order on IFVs to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrderKind {
    /// Score first, then accuracy.
    #[serde(alias = "xy")]
    XY,
    /// Similarity `L` first, then accuracy.
    #[serde(alias = "zx")]
    ZX,
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderKind::XY => f.write_str("XY"),
            OrderKind::ZX => f.write_str("ZX"),
        }
    }
}

/// An intuitionistic fuzzy value `⟨μ, ν⟩`.
///
/// Stored components always satisfy `0 ≤ μ, ν ≤ 1` and `μ + ν ≤ 1` exactly.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawIfv")]
pub struct Ifv {
    mu: f64,
    nu: f64,
}

#[derive(Deserialize)]
struct RawIfv {
    mu: f64,
    nu: f64,
}

impl TryFrom<RawIfv> for Ifv {
    type Error = Error;

    fn try_from(raw: RawIfv) -> Result<Self> {
        Ifv::with_policy(raw.mu, raw.nu, &NumericPolicy::DEFAULT)
    }
}

impl Ifv {
    /// `⟨0, 1⟩`, the bottom of both orders.
    pub const BOTTOM: Ifv = Ifv { mu: 0.0, nu: 1.0 };
    /// `⟨1, 0⟩`, the top of both orders.
    pub const TOP: Ifv = Ifv { mu: 1.0, nu: 0.0 };

    /// Validates with the default policy.
    pub fn new(mu: f64, nu: f64) -> Result<Self> {
        Ifv::with_policy(mu, nu, &NumericPolicy::DEFAULT)
    }

    /// Validates `⟨mu, nu⟩`. Components within `eps_domain` outside the
    /// domain are clamped onto its boundary.
    pub fn with_policy(mu: f64, nu: f64, policy: &NumericPolicy) -> Result<Self> {
        let eps = policy.eps_domain;
        let in_unit = |x: f64| x >= -eps && x <= 1.0 + eps;
        if !mu.is_finite() || !nu.is_finite() || !in_unit(mu) || !in_unit(nu) {
            return Err(Error::DomainViolation(format!(
                "components must lie in [0, 1], got ⟨{mu}, {nu}⟩"
            )));
        }
        if mu + nu > 1.0 + eps {
            return Err(Error::DomainViolation(format!(
                "mu + nu = {} exceeds 1 for ⟨{mu}, {nu}⟩",
                mu + nu
            )));
        }
        Ok(Ifv::saturating(mu, nu))
    }

    /// Projects `⟨mu, nu⟩` onto the domain without validation. Used for
    /// results of closed-form maps whose exact value is known to be in the
    /// domain.
    pub(crate) fn saturating(mu: f64, nu: f64) -> Self {
        let mut mu = if mu.is_nan() { 0.0 } else { mu.clamp(0.0, 1.0) };
        let mut nu = if nu.is_nan() { 0.0 } else { nu.clamp(0.0, 1.0) };
        if mu + nu > 1.0 {
            if mu >= nu {
                mu = 1.0 - nu;
                while mu + nu > 1.0 {
                    mu = mu.next_down();
                }
            } else {
                nu = 1.0 - mu;
                while mu + nu > 1.0 {
                    nu = nu.next_down();
                }
            }
        }
        Ifv { mu, nu }
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    /// `μ − ν`.
    pub fn score(&self) -> f64 {
        self.mu - self.nu
    }

    /// `μ + ν`.
    pub fn accuracy(&self) -> f64 {
        self.mu + self.nu
    }

    /// `1 − μ − ν`.
    pub fn indeterminacy(&self) -> f64 {
        1.0 - self.mu - self.nu
    }

    /// `(1 − ν) / ((1 − μ) + (1 − ν))`. The denominator is at least 1.
    pub fn similarity_l(&self) -> f64 {
        let keep = 1.0 - self.nu;
        keep / ((1.0 - self.mu) + keep)
    }

    /// The two comparison keys of `ord`.
    pub fn order_keys(&self, ord: OrderKind) -> (f64, f64) {
        match ord {
            OrderKind::XY => (self.score(), self.accuracy()),
            OrderKind::ZX => (self.similarity_l(), self.accuracy()),
        }
    }

    /// Three-way comparison under `ord`. Keys closer than `eps_order` are
    /// treated as equal.
    pub fn compare(&self, other: &Ifv, ord: OrderKind, policy: &NumericPolicy) -> Ordering {
        compare_keys(self.order_keys(ord), other.order_keys(ord), policy)
    }

    /// Componentwise equality within `tol`.
    pub fn approx_eq(&self, other: &Ifv, tol: f64) -> bool {
        (self.mu - other.mu).abs() <= tol && (self.nu - other.nu).abs() <= tol
    }
}

/// Lexicographic comparison of `(primary, secondary)` keys with tolerance.
pub(crate) fn compare_keys(a: (f64, f64), b: (f64, f64), policy: &NumericPolicy) -> Ordering {
    if !policy.same(a.0, b.0) {
        return a.0.total_cmp(&b.0);
    }
    if !policy.same(a.1, b.1) {
        return a.1.total_cmp(&b.1);
    }
    Ordering::Equal
}

/// Free-function form of [`Ifv::compare`].
pub fn cmp(a: &Ifv, b: &Ifv, ord: OrderKind, policy: &NumericPolicy) -> Ordering {
    a.compare(b, ord, policy)
}

impl fmt::Display for Ifv {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨{}, {}⟩", self.mu, self.nu)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::arb_ifv;
    use proptest::prelude::*;

    const P: NumericPolicy = NumericPolicy::DEFAULT;

    fn v(mu: f64, nu: f64) -> Ifv {
        Ifv::new(mu, nu).unwrap()
    }

    #[test]
    fn construction() {
        assert_eq!(v(0.5, 0.3), Ifv { mu: 0.5, nu: 0.3 });
        assert!(matches!(Ifv::new(0.7, 0.7), Err(Error::DomainViolation(_))));
        assert_eq!(v(1.0 + 1e-13, 0.0), Ifv::TOP);
        assert!(Ifv::new(1.0 + 1e-11, 0.0).is_err());
        assert!(Ifv::new(-1e-11, 0.5).is_err());
        assert!(Ifv::new(f64::NAN, 0.5).is_err());
        assert_eq!(v(-1e-13, 0.5).mu(), 0.0);
    }

    #[test]
    fn clamped_sum_is_exact() {
        let a = v(0.7 + 5e-13, 0.3);
        assert!(a.mu() + a.nu() <= 1.0);
        let b = v(0.1, 0.9 + 5e-13);
        assert!(b.mu() + b.nu() <= 1.0);
        assert_eq!(b.mu(), 0.1);
    }

    #[test]
    fn policy_bounds() {
        assert!(NumericPolicy::new(1e-9, 1e-12).is_ok());
        assert!(NumericPolicy::new(1e-9, 1e-8).is_err());
        assert!(NumericPolicy::new(1e-2, 1e-12).is_err());
        assert!(NumericPolicy::new(1e-9, 0.0).is_err());
        let p = P.with_eps_order(1e-13).unwrap();
        assert_eq!(p.eps_domain, 1e-13);
    }

    #[test]
    fn functionals() {
        assert_eq!(Ifv::TOP.score(), 1.0);
        assert_eq!(Ifv::BOTTOM.score(), -1.0);
        assert!((v(0.5, 0.3).score() - 0.2).abs() < 1e-15);

        assert_eq!(Ifv::TOP.accuracy(), 1.0);
        assert_eq!(v(0.0, 0.0).accuracy(), 0.0);
        assert!((v(0.5, 0.3).accuracy() - 0.8).abs() < 1e-15);

        assert_eq!(Ifv::TOP.indeterminacy(), 0.0);
        assert_eq!(v(0.0, 0.0).indeterminacy(), 1.0);
        assert!((v(0.5, 0.3).indeterminacy() - 0.2).abs() < 1e-15);

        assert_eq!(Ifv::TOP.similarity_l(), 1.0);
        assert_eq!(Ifv::BOTTOM.similarity_l(), 0.0);
        assert!((v(0.6, 0.2).similarity_l() - 2.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn comparisons() {
        assert_eq!(
            cmp(&v(0.5, 0.3), &v(0.4, 0.1), OrderKind::XY, &P),
            Ordering::Less
        );
        assert_eq!(
            cmp(&v(0.3, 0.1), &v(0.4, 0.2), OrderKind::XY, &P),
            Ordering::Less
        );
        assert_eq!(
            cmp(&v(0.5, 0.3), &v(0.4, 0.1), OrderKind::ZX, &P),
            Ordering::Less
        );
        let a = v(0.25, 0.5);
        for ord in [OrderKind::XY, OrderKind::ZX] {
            assert_eq!(cmp(&a, &a, ord, &P), Ordering::Equal);
        }
    }

    #[test]
    fn display_and_json() {
        assert_eq!(v(0.5, 0.3).to_string(), "⟨0.5, 0.3⟩");
        assert_eq!(Ifv::TOP.to_string(), "⟨1, 0⟩");
        let json = serde_json::to_string(&v(0.5, 0.3)).unwrap();
        assert_eq!(json, r#"{"mu":0.5,"nu":0.3}"#);
        let back: Ifv = serde_json::from_str(&json).unwrap();
        assert_eq!(back, v(0.5, 0.3));
        assert!(serde_json::from_str::<Ifv>(r#"{"mu":0.7,"nu":0.7}"#).is_err());
        let ord: OrderKind = serde_json::from_str(r#""zx""#).unwrap();
        assert_eq!(ord, OrderKind::ZX);
    }

    proptest! {
        #[test]
        fn totality_and_antisymmetry(a in arb_ifv(), b in arb_ifv()) {
            for ord in [OrderKind::XY, OrderKind::ZX] {
                prop_assert_eq!(a.compare(&b, ord, &P), b.compare(&a, ord, &P).reverse());
            }
        }

        #[test]
        fn transitivity(a in arb_ifv(), b in arb_ifv(), c in arb_ifv()) {
            for ord in [OrderKind::XY, OrderKind::ZX] {
                let mut xs = [a, b, c];
                xs.sort_by(|x, y| x.compare(y, ord, &P));
                prop_assert_ne!(xs[0].compare(&xs[2], ord, &P), Ordering::Greater);
                prop_assert_ne!(xs[0].compare(&xs[1], ord, &P), Ordering::Greater);
                prop_assert_ne!(xs[1].compare(&xs[2], ord, &P), Ordering::Greater);
            }
        }

        #[test]
        fn bounded(a in arb_ifv()) {
            for ord in [OrderKind::XY, OrderKind::ZX] {
                prop_assert_ne!(Ifv::BOTTOM.compare(&a, ord, &P), Ordering::Greater);
                prop_assert_ne!(a.compare(&Ifv::TOP, ord, &P), Ordering::Greater);
            }
        }

        #[test]
        fn xy_equality_is_componentwise(a in arb_ifv(), b in arb_ifv()) {
            let eq = a.compare(&b, OrderKind::XY, &P) == Ordering::Equal;
            prop_assert_eq!(eq, a.approx_eq(&b, P.eps_order));
        }

        #[test]
        fn xy_open_interval_on_a_score_line(
            s in -0.9f64..0.9,
            t in prop::array::uniform3(0.0f64..1.0),
        ) {
            // Three points on the line μ − ν = s.
            let lo = s.max(0.0);
            let hi = (1.0 + s) / 2.0;
            let mut mus = t.map(|x| lo + x * (hi - lo));
            mus.sort_by(f64::total_cmp);
            let [ma, mg, mb] = mus;
            prop_assume!(mg - ma > 1e-6 && mb - mg > 1e-6);
            let a = Ifv::saturating(ma, ma - s);
            let g = Ifv::saturating(mg, mg - s);
            let b = Ifv::saturating(mb, mb - s);
            prop_assert_eq!(a.compare(&g, OrderKind::XY, &P), Ordering::Less);
            prop_assert_eq!(g.compare(&b, OrderKind::XY, &P), Ordering::Less);
            // Anything off the line is outside the interval.
            let off = Ifv::saturating(mg, (mg - s + 1e-3).min(1.0 - mg));
            prop_assume!((off.score() - s).abs() > 1e-6);
            let inside = a.compare(&off, OrderKind::XY, &P) == Ordering::Less
                && off.compare(&b, OrderKind::XY, &P) == Ordering::Less;
            prop_assert!(!inside);
        }

        #[test]
        fn l_is_half_iff_mu_equals_nu(a in arb_ifv()) {
            // L − 1/2 = (μ − ν) / (2(2 − μ − ν)), and the denominator lies in [2, 4].
            let gap = (a.similarity_l() - 0.5).abs();
            let diff = (a.mu() - a.nu()).abs();
            if gap <= 1e-12 {
                prop_assert!(diff <= 4e-12 + 1e-15);
            }
            if diff <= 1e-12 {
                prop_assert!(gap <= 1e-12);
            }
        }

        #[test]
        fn l_half_on_diagonal(m in 0.0f64..=0.5) {
            let a = Ifv::saturating(m, m);
            prop_assert!((a.similarity_l() - 0.5).abs() <= 1e-15);
        }
    }
}

//! q-rung orthopair fuzzy numbers.
//!
//! A [`Qrofn`] `⟨μ, ν⟩` of rung `q ≥ 1` satisfies `μ^q + ν^q ≤ 1`. The map
//! [`gamma_q`] `⟨μ, ν⟩ ↦ ⟨μ^q, ν^q⟩` is a bijection onto the IFVs, and every
//! structure in this module is the IFV structure carried across it:
//!
//! - the LW and X orders correspond to the XY order, the Wu order to ZX;
//! - [`lift`] conjugates any IFV operator `f` into `Γ⁻¹ ∘ f ∘ Γⁿ`;
//! - [`neg_tilde`] and [`neg_hat`] are the transported strong negations.
//!
//! Values of different rungs never mix; operations on them fail with
//! [`Error::RungMismatch`].

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ifv::{compare_keys, Ifv, NumericPolicy};
use crate::isomorphism::{gamma_tilde, gamma_tilde_inv};
use crate::negation::negate_xy;
use crate::ops::{ifwa, ifwg};
use crate::weights::WeightVector;

/// A q-rung orthopair fuzzy number.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawQrofn")]
pub struct Qrofn {
    mu: f64,
    nu: f64,
    q: f64,
}

#[derive(Deserialize)]
struct RawQrofn {
    mu: f64,
    nu: f64,
    q: f64,
}

impl TryFrom<RawQrofn> for Qrofn {
    type Error = Error;

    fn try_from(raw: RawQrofn) -> Result<Self> {
        Qrofn::with_policy(raw.mu, raw.nu, raw.q, &NumericPolicy::DEFAULT)
    }
}

fn check_rung(q: f64) -> Result<()> {
    if !(q.is_finite() && q >= 1.0) {
        return Err(Error::BadParameter(format!(
            "rung must be a finite q >= 1, got {q}"
        )));
    }
    Ok(())
}

/// The five ranking functionals of a q-ROFN.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QScores {
    /// `μ^q − ν^q`
    pub s_lw: f64,
    /// `μ^q + ν^q`
    pub h_lw: f64,
    /// `±|μ^q − ν^q|^{1/q}`, negative when `μ < ν`
    pub s_x: f64,
    /// `(μ^q + ν^q)^{1/q}`
    pub h_x: f64,
    /// `((1 − ν^q) / (1 + π^q))^{1/q}`
    pub l_wu: f64,
}

/// Linear orders on q-ROFNs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum QOrderKind {
    /// `(s_lw, h_lw)`
    #[serde(alias = "lw")]
    LW,
    /// `(s_x, h_x)`
    #[serde(alias = "x")]
    X,
    /// `(l_wu, h_x)`
    #[serde(alias = "wu")]
    Wu,
}

impl Qrofn {
    pub fn new(mu: f64, nu: f64, q: f64) -> Result<Self> {
        Qrofn::with_policy(mu, nu, q, &NumericPolicy::DEFAULT)
    }

    /// Validates `μ, ν ∈ [0, 1]`, `μ^q + ν^q ≤ 1` and `q ≥ 1`, clamping
    /// within `eps_domain`.
    pub fn with_policy(mu: f64, nu: f64, q: f64, policy: &NumericPolicy) -> Result<Self> {
        check_rung(q)?;
        let eps = policy.eps_domain;
        let in_unit = |x: f64| x.is_finite() && x >= -eps && x <= 1.0 + eps;
        if !in_unit(mu) || !in_unit(nu) {
            return Err(Error::DomainViolation(format!(
                "components must lie in [0, 1], got ⟨{mu}, {nu}⟩"
            )));
        }
        let sum = mu.clamp(0.0, 1.0).powf(q) + nu.clamp(0.0, 1.0).powf(q);
        if sum > 1.0 + eps {
            return Err(Error::DomainViolation(format!(
                "mu^q + nu^q = {sum} exceeds 1 for ⟨{mu}, {nu}⟩ at q = {q}"
            )));
        }
        Ok(Qrofn::saturating(mu, nu, q))
    }

    pub(crate) fn saturating(mu: f64, nu: f64, q: f64) -> Self {
        let mut mu = if mu.is_nan() { 0.0 } else { mu.clamp(0.0, 1.0) };
        let mut nu = if nu.is_nan() { 0.0 } else { nu.clamp(0.0, 1.0) };
        if mu.powf(q) + nu.powf(q) > 1.0 {
            if mu >= nu {
                mu = (1.0 - nu.powf(q)).max(0.0).powf(1.0 / q);
            } else {
                nu = (1.0 - mu.powf(q)).max(0.0).powf(1.0 / q);
            }
        }
        Qrofn { mu, nu, q }
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    /// `(1 − μ^q − ν^q)^{1/q}`.
    pub fn indeterminacy(&self) -> f64 {
        (1.0 - self.mu.powf(self.q) - self.nu.powf(self.q))
            .max(0.0)
            .powf(1.0 / self.q)
    }

    pub fn scores(&self) -> QScores {
        let q = self.q;
        let m = self.mu.powf(q);
        let n = self.nu.powf(q);
        let root = |x: f64| x.max(0.0).powf(1.0 / q);
        let s_lw = m - n;
        let s_x = if self.mu >= self.nu {
            root(m - n)
        } else {
            -root(n - m)
        };
        let keep = 1.0 - n;
        QScores {
            s_lw,
            h_lw: m + n,
            s_x,
            h_x: root(m + n),
            l_wu: root(keep / ((1.0 - m) + keep)),
        }
    }

    /// Keys for `ord`, raised to the q-th power (sign kept) so that
    /// `eps_order` measures ties at the scale of the IFV image. A q-th root
    /// would otherwise inflate rounding noise near zero past the tolerance.
    fn order_keys(&self, ord: QOrderKind) -> (f64, f64) {
        let s = self.scores();
        let up = |x: f64| x.signum() * x.abs().powf(self.q);
        match ord {
            QOrderKind::LW => (s.s_lw, s.h_lw),
            QOrderKind::X => (up(s.s_x), up(s.h_x)),
            QOrderKind::Wu => (up(s.l_wu), up(s.h_x)),
        }
    }

    fn same_rung(&self, other: &Qrofn) -> Result<()> {
        if self.q != other.q {
            return Err(Error::RungMismatch {
                left: self.q,
                right: other.q,
            });
        }
        Ok(())
    }

    /// Componentwise equality within `tol`, same rung.
    pub fn approx_eq(&self, other: &Qrofn, tol: f64) -> bool {
        self.q == other.q && (self.mu - other.mu).abs() <= tol && (self.nu - other.nu).abs() <= tol
    }
}

impl fmt::Display for Qrofn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨{}, {}⟩", self.mu, self.nu)
    }
}

/// Three-way comparison under `ord`; both values must share a rung.
pub fn qcmp(a: &Qrofn, b: &Qrofn, ord: QOrderKind, policy: &NumericPolicy) -> Result<Ordering> {
    a.same_rung(b)?;
    Ok(compare_keys(a.order_keys(ord), b.order_keys(ord), policy))
}

/// Smaller of `a` and `b` under `ord`; `a` on ties.
pub fn qmeet(a: &Qrofn, b: &Qrofn, ord: QOrderKind, policy: &NumericPolicy) -> Result<Qrofn> {
    Ok(match qcmp(a, b, ord, policy)? {
        Ordering::Greater => *b,
        _ => *a,
    })
}

/// Larger of `a` and `b` under `ord`; `a` on ties.
pub fn qjoin(a: &Qrofn, b: &Qrofn, ord: QOrderKind, policy: &NumericPolicy) -> Result<Qrofn> {
    Ok(match qcmp(a, b, ord, policy)? {
        Ordering::Less => *b,
        _ => *a,
    })
}

/// `⟨μ, ν⟩ ↦ ⟨μ^q, ν^q⟩`.
pub fn gamma_q(a: &Qrofn) -> Ifv {
    Ifv::saturating(a.mu.powf(a.q), a.nu.powf(a.q))
}

/// `⟨μ, ν⟩ ↦ ⟨μ^{1/q}, ν^{1/q}⟩` at rung `q`.
pub fn gamma_q_inv(a: &Ifv, q: f64) -> Result<Qrofn> {
    check_rung(q)?;
    Ok(Qrofn::saturating(
        a.mu().powf(1.0 / q),
        a.nu().powf(1.0 / q),
        q,
    ))
}

fn common_rung(args: &[Qrofn]) -> Result<f64> {
    let (first, rest) = args.split_first().ok_or(Error::EmptyCollection)?;
    for x in rest {
        first.same_rung(x)?;
    }
    Ok(first.q)
}

/// `Γ⁻¹ ∘ f ∘ Γⁿ` for a fallible IFV operator `f`.
pub fn try_lift<F>(args: &[Qrofn], f: F) -> Result<Qrofn>
where
    F: FnOnce(&[Ifv]) -> Result<Ifv>,
{
    let q = common_rung(args)?;
    let images: Vec<Ifv> = args.iter().map(gamma_q).collect();
    gamma_q_inv(&f(&images)?, q)
}

/// `Γ⁻¹ ∘ f ∘ Γⁿ`.
pub fn lift<F>(args: &[Qrofn], f: F) -> Result<Qrofn>
where
    F: FnOnce(&[Ifv]) -> Ifv,
{
    try_lift(args, |xs| Ok(f(xs)))
}

/// Transported XY negation, evaluated in closed form.
///
/// ```text
/// μ > ν  ↦ ⟨((1 − μ^q − ν^q)/2)^{1/q}, ((1 + μ^q − 3ν^q)/2)^{1/q}⟩
/// μ = ν  ↦ ⟨(1/2 − μ^q)^{1/q}, (1/2 − ν^q)^{1/q}⟩
/// μ < ν  ↦ ⟨((1 + ν^q − 3μ^q)/2)^{1/q}, ((1 − μ^q − ν^q)/2)^{1/q}⟩
/// ```
///
/// The branch is chosen on `μ^q − ν^q` with `eps_order`, the same key the
/// IFV negation sees after transport.
pub fn neg_tilde(a: &Qrofn, policy: &NumericPolicy) -> Qrofn {
    let g = gamma_q(a);
    let (m, n) = (g.mu(), g.nu());
    let d = m - n;
    let (x, y) = if policy.same(d, 0.0) {
        (0.5 - m, 0.5 - n)
    } else if d > 0.0 {
        ((1.0 - m - n) / 2.0, (1.0 + m - 3.0 * n) / 2.0)
    } else {
        ((1.0 + n - 3.0 * m) / 2.0, (1.0 - m - n) / 2.0)
    };
    let t = Ifv::saturating(x, y);
    let r = 1.0 / a.q;
    Qrofn::saturating(t.mu().powf(r), t.nu().powf(r), a.q)
}

/// Transported XY negation, evaluated as `Γ⁻¹ ∘ ¬ ∘ Γ`.
pub fn neg_tilde_lifted(a: &Qrofn, policy: &NumericPolicy) -> Qrofn {
    lift(std::slice::from_ref(a), |xs| negate_xy(&xs[0], policy))
        .expect("a single argument always has a common rung")
}

/// Transported ZX negation `Γ⁻¹ ∘ Γ̃⁻¹ ∘ ¬ ∘ Γ̃ ∘ Γ`, the strong negation
/// for the Wu order.
pub fn neg_hat(a: &Qrofn, policy: &NumericPolicy) -> Qrofn {
    let t = gamma_tilde(&gamma_q(a), policy);
    let back = gamma_tilde_inv(&negate_xy(&t, policy), policy);
    Qrofn::saturating(back.mu().powf(1.0 / a.q), back.nu().powf(1.0 / a.q), a.q)
}

/// The strong negation that belongs to `ord`.
pub fn qnegate(a: &Qrofn, ord: QOrderKind, policy: &NumericPolicy) -> Qrofn {
    match ord {
        QOrderKind::LW | QOrderKind::X => neg_tilde(a, policy),
        QOrderKind::Wu => neg_hat(a, policy),
    }
}

/// q-rung orthopair fuzzy weighted average, the lift of [`ifwa`].
pub fn qrofwa(values: &[Qrofn], w: &WeightVector) -> Result<Qrofn> {
    common_rung(values)?;
    w.check_len(values.len())?;
    try_lift(values, |xs| ifwa(xs, w))
}

/// q-rung orthopair fuzzy weighted geometric mean, the lift of [`ifwg`].
pub fn qrofwg(values: &[Qrofn], w: &WeightVector) -> Result<Qrofn> {
    common_rung(values)?;
    w.check_len(values.len())?;
    try_lift(values, |xs| ifwg(xs, w))
}

//! Strong negations for the two linear orders.
//!
//! Under XY the negation reflects the score and keeps points on the same
//! side of the triangle:
//!
//! ```text
//! μ > ν  ↦ ⟨(1 − μ − ν)/2, (1 + μ − 3ν)/2⟩
//! μ = ν  ↦ ⟨1/2 − μ, 1/2 − ν⟩
//! μ < ν  ↦ ⟨(1 + ν − 3μ)/2, (1 − μ − ν)/2⟩
//! ```
//!
//! Under ZX the negation is the XY one conjugated by the order isomorphism.

use std::cmp::Ordering;

use crate::ifv::{Ifv, NumericPolicy, OrderKind};
use crate::isomorphism::{gamma_tilde, gamma_tilde_inv};
use crate::lattice::{join2, meet2};

/// Strong negation on (IFV, ≤XY). `|μ − ν| ≤ eps_order` takes the middle
/// branch.
pub fn negate_xy(a: &Ifv, policy: &NumericPolicy) -> Ifv {
    let (mu, nu) = (a.mu(), a.nu());
    let d = mu - nu;
    if policy.same(d, 0.0) {
        Ifv::saturating(0.5 - mu, 0.5 - nu)
    } else if d > 0.0 {
        Ifv::saturating((1.0 - mu - nu) / 2.0, (1.0 + mu - 3.0 * nu) / 2.0)
    } else {
        Ifv::saturating((1.0 + nu - 3.0 * mu) / 2.0, (1.0 - mu - nu) / 2.0)
    }
}

/// Strong negation on (IFV, ≤ZX).
pub fn negate_zx(a: &Ifv, policy: &NumericPolicy) -> Ifv {
    gamma_tilde_inv(&negate_xy(&gamma_tilde(a, policy), policy), policy)
}

/// The strong negation that belongs to `ord`.
pub fn negate(a: &Ifv, ord: OrderKind, policy: &NumericPolicy) -> Ifv {
    match ord {
        OrderKind::XY => negate_xy(a, policy),
        OrderKind::ZX => negate_zx(a, policy),
    }
}

/// Kleene's inequality `a ∧ ¬a ≤ b ∨ ¬b` under `ord` and its negation.
pub fn kleene_check(a: &Ifv, b: &Ifv, ord: OrderKind, policy: &NumericPolicy) -> bool {
    let lhs = meet2(a, &negate(a, ord, policy), ord, policy);
    let rhs = join2(b, &negate(b, ord, policy), ord, policy);
    lhs.compare(&rhs, ord, policy) != Ordering::Greater
}

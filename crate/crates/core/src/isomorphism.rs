//! The order isomorphism from (IFV, ≤ZX) onto (IFV, ≤XY) and its inverse.
//!
//! The forward map is keyed on the similarity `L`:
//!
//! ```text
//! L = 0        ↦ ⟨0, 1⟩
//! L = 1        ↦ ⟨1, 0⟩
//! L = 1/2      ↦ α
//! 0 < L < 1/2  ↦ ⟨μ/(2(1−L)), (μ + 2 − 4L)/(2(1−L))⟩
//! 1/2 < L < 1  ↦ ⟨½(μ/(1−L) − (2L−1)²/(L(1−L))), (Lμ − (2L−1))/(2L(1−L))⟩
//! ```
//!
//! The last two rows are evaluated in the equivalent form
//!
//! ```text
//! 0 < L < 1/2  ↦ ⟨μ(2−h)/(2(1−μ)), (2ν − μh)/(2(1−μ))⟩
//! 1/2 < L < 1  ↦ ⟨(2μ − νh)/(2(1−ν)), ν(2−h)/(2(1−ν))⟩
//! ```
//!
//! with `h = μ + ν`. Inside each branch the denominator is at least 1, while
//! the `L` form divides by `1 − L`, which vanishes as `μ → 1`.
//!
//! The inverse is keyed on the score `s`:
//!
//! ```text
//! s = −1       ↦ ⟨0, 1⟩
//! s = 1        ↦ ⟨1, 0⟩
//! s = 0        ↦ α
//! 0 < s < 1    ↦ ⟨h − 2ν/(2−s), 2ν/(2−s)⟩
//! −1 < s < 0   ↦ ⟨2μ/(2+s), h − 2μ/(2+s)⟩
//! ```

use crate::ifv::{Ifv, NumericPolicy};

/// Carries the ZX order onto the XY order.
pub fn gamma_tilde(a: &Ifv, policy: &NumericPolicy) -> Ifv {
    let l = a.similarity_l();
    let (mu, nu, h) = (a.mu(), a.nu(), a.accuracy());
    if l <= policy.eps_order {
        Ifv::BOTTOM
    } else if l >= 1.0 - policy.eps_order {
        Ifv::TOP
    } else if policy.same(l, 0.5) {
        *a
    } else if l < 0.5 {
        let den = 2.0 * (1.0 - mu);
        Ifv::saturating(mu * (2.0 - h) / den, (2.0 * nu - mu * h) / den)
    } else {
        let den = 2.0 * (1.0 - nu);
        Ifv::saturating((2.0 * mu - nu * h) / den, nu * (2.0 - h) / den)
    }
}

/// Inverse of [`gamma_tilde`].
pub fn gamma_tilde_inv(a: &Ifv, policy: &NumericPolicy) -> Ifv {
    let s = a.score();
    let (mu, nu, h) = (a.mu(), a.nu(), a.accuracy());
    if s <= -1.0 + policy.eps_order {
        Ifv::BOTTOM
    } else if s >= 1.0 - policy.eps_order {
        Ifv::TOP
    } else if policy.same(s, 0.0) {
        *a
    } else if s > 0.0 {
        let nu_out = 2.0 * nu / (2.0 - s);
        Ifv::saturating(h - nu_out, nu_out)
    } else {
        let mu_out = 2.0 * mu / (2.0 + s);
        Ifv::saturating(mu_out, h - mu_out)
    }
}

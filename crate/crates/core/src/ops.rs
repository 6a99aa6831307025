//! Operational laws on IFVs and the weighted aggregators built from them.

use crate::error::{Error, Result};
use crate::ifv::Ifv;
use crate::weights::WeightVector;

/// `⟨ν, μ⟩`.
pub fn complement_bar(a: &Ifv) -> Ifv {
    Ifv::saturating(a.nu(), a.mu())
}

/// `⟨min μ, max ν⟩`.
pub fn intersect(a: &Ifv, b: &Ifv) -> Ifv {
    Ifv::saturating(a.mu().min(b.mu()), a.nu().max(b.nu()))
}

/// `⟨max μ, min ν⟩`.
pub fn union(a: &Ifv, b: &Ifv) -> Ifv {
    Ifv::saturating(a.mu().max(b.mu()), a.nu().min(b.nu()))
}

/// `⟨μa + μb − μa·μb, νa·νb⟩`.
pub fn add(a: &Ifv, b: &Ifv) -> Ifv {
    Ifv::saturating(a.mu() + b.mu() * (1.0 - a.mu()), a.nu() * b.nu())
}

/// `⟨μa·μb, νa + νb − νa·νb⟩`.
pub fn mul(a: &Ifv, b: &Ifv) -> Ifv {
    Ifv::saturating(a.mu() * b.mu(), a.nu() + b.nu() * (1.0 - a.nu()))
}

fn check_lambda(lambda: f64) -> Result<()> {
    if !(lambda.is_finite() && lambda > 0.0) {
        return Err(Error::BadParameter(format!(
            "lambda must be a positive finite number, got {lambda}"
        )));
    }
    Ok(())
}

/// `⟨1 − (1 − μ)^λ, ν^λ⟩`, `λ > 0`.
pub fn scalar_mul(lambda: f64, a: &Ifv) -> Result<Ifv> {
    check_lambda(lambda)?;
    Ok(Ifv::saturating(
        one_minus_pow_complement(a.mu(), lambda),
        a.nu().powf(lambda),
    ))
}

/// `⟨μ^λ, 1 − (1 − ν)^λ⟩`, `λ > 0`.
pub fn power(a: &Ifv, lambda: f64) -> Result<Ifv> {
    check_lambda(lambda)?;
    Ok(Ifv::saturating(
        a.mu().powf(lambda),
        one_minus_pow_complement(a.nu(), lambda),
    ))
}

/// `1 − (1 − x)^λ` without cancellation for small `x`.
fn one_minus_pow_complement(x: f64, lambda: f64) -> f64 {
    if x >= 1.0 {
        return 1.0;
    }
    -(lambda * (-x).ln_1p()).exp_m1()
}

/// `∏ xᵢ^{wᵢ}` in log space; any zero factor gives 0.
fn weighted_product(xs: impl Iterator<Item = f64>, w: &[f64]) -> f64 {
    let mut log = 0.0;
    for (x, wi) in xs.zip(w) {
        if x <= 0.0 {
            return 0.0;
        }
        log += wi * x.ln();
    }
    log.exp()
}

/// `1 − ∏ (1 − xᵢ)^{wᵢ}` in log space; any `xᵢ = 1` gives 1.
fn weighted_coproduct(xs: impl Iterator<Item = f64>, w: &[f64]) -> f64 {
    let mut log = 0.0;
    for (x, wi) in xs.zip(w) {
        if x >= 1.0 {
            return 1.0;
        }
        log += wi * (-x).ln_1p();
    }
    -log.exp_m1()
}

/// Intuitionistic fuzzy weighted average `⨁ wᵢ·αᵢ`:
/// `⟨1 − ∏(1 − μᵢ)^{wᵢ}, ∏ νᵢ^{wᵢ}⟩`.
pub fn ifwa(values: &[Ifv], w: &WeightVector) -> Result<Ifv> {
    w.check_len(values.len())?;
    let w = w.as_slice();
    Ok(Ifv::saturating(
        weighted_coproduct(values.iter().map(Ifv::mu), w),
        weighted_product(values.iter().map(Ifv::nu), w),
    ))
}

/// Intuitionistic fuzzy weighted geometric mean `⨂ αᵢ^{wᵢ}`:
/// `⟨∏ μᵢ^{wᵢ}, 1 − ∏(1 − νᵢ)^{wᵢ}⟩`.
pub fn ifwg(values: &[Ifv], w: &WeightVector) -> Result<Ifv> {
    w.check_len(values.len())?;
    let w = w.as_slice();
    Ok(Ifv::saturating(
        weighted_product(values.iter().map(Ifv::mu), w),
        weighted_coproduct(values.iter().map(Ifv::nu), w),
    ))
}

impl std::ops::Add for Ifv {
    type Output = Ifv;

    fn add(self, rhs: Ifv) -> Ifv {
        add(&self, &rhs)
    }
}

impl std::ops::Mul for Ifv {
    type Output = Ifv;

    fn mul(self, rhs: Ifv) -> Ifv {
        mul(&self, &rhs)
    }
}

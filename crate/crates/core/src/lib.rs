//! Ordered algebra of intuitionistic fuzzy values (IFVs) and q-rung
//! orthopair fuzzy numbers.
//!
//! An [`Ifv`] `⟨μ, ν⟩` carries membership and non-membership degrees with
//! `μ + ν ≤ 1`. Two linear orders ([`OrderKind::XY`], [`OrderKind::ZX`])
//! make the IFVs a complete lattice; each order has its own strong negation,
//! and [`gamma_tilde`] carries one ordered world onto the other. The same
//! structure transfers to [`Qrofn`] values along [`gamma_q`].
//!
//! ```
//! use orthopair::{negate_xy, Ifv, NumericPolicy};
//!
//! let a = Ifv::new(0.0, 0.0).unwrap();
//! assert_eq!(negate_xy(&a, &NumericPolicy::default()), Ifv::new(0.5, 0.5).unwrap());
//! ```

pub mod error;
pub mod ifs;
pub mod ifv;
pub mod isomorphism;
pub mod lattice;
pub mod negation;
pub mod ops;
pub mod qrofn;
pub mod similarity;
pub mod weights;

#[cfg(test)]
mod testutil;

pub use error::{Error, Result};
pub use ifs::{decompose_check, level_set, pointwise_leq, zadeh_extend, Ifs};
pub use ifv::{cmp, Ifv, NumericPolicy, OrderKind};
pub use isomorphism::{gamma_tilde, gamma_tilde_inv};
pub use lattice::{
    inf_finite, inf_from_scan, join2, meet2, scan_of, sup_finite, sup_from_scan, LatticeScan,
};
pub use negation::{kleene_check, negate, negate_xy, negate_zx};
pub use ops::{add, complement_bar, ifwa, ifwg, intersect, mul, power, scalar_mul, union};
pub use qrofn::{
    gamma_q, gamma_q_inv, lift, neg_hat, neg_tilde, neg_tilde_lifted, qcmp, qjoin, qmeet, qnegate,
    qrofwa, qrofwg, try_lift, QOrderKind, QScores, Qrofn,
};
pub use similarity::{
    classify, distance_d, rho, similarity_for, similarity_s, ClassificationResult,
};
pub use weights::WeightVector;

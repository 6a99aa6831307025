use proptest::prelude::*;

use crate::ifv::Ifv;
use crate::qrofn::Qrofn;

/// Interior points plus the domain boundary (μ = 0, ν = 0, μ + ν = 1, μ = ν).
pub fn arb_ifv() -> impl Strategy<Value = Ifv> {
    prop_oneof![
        6 => (0.0f64..=1.0, 0.0f64..=1.0).prop_map(|(u, t)| Ifv::saturating(u, t * (1.0 - u))),
        1 => (0.0f64..=1.0).prop_map(|u| Ifv::saturating(u, 1.0 - u)),
        1 => (0.0f64..=1.0).prop_map(|u| Ifv::saturating(u, 0.0)),
        1 => (0.0f64..=1.0).prop_map(|u| Ifv::saturating(0.0, u)),
        1 => (0.0f64..=0.5).prop_map(|u| Ifv::saturating(u, u)),
        1 => Just(Ifv::TOP),
        1 => Just(Ifv::BOTTOM),
    ]
}

/// Values on a coarse dyadic grid, so that score ties are common and all
/// score arithmetic is exact.
pub fn arb_grid_ifv() -> impl Strategy<Value = Ifv> {
    (0u32..=16)
        .prop_flat_map(|a| (Just(a), 0..=16 - a))
        .prop_map(|(a, b)| Ifv::saturating(a as f64 / 16.0, b as f64 / 16.0))
}

pub fn arb_qrofn(q: f64) -> impl Strategy<Value = Qrofn> {
    (0.0f64..=1.0, 0.0f64..=1.0).prop_map(move |(u, t)| {
        // Uniform in the IFV triangle, then pulled back to rung q.
        let mu = u;
        let nu = t * (1.0 - u);
        Qrofn::saturating(mu.powf(1.0 / q), nu.powf(1.0 / q), q)
    })
}

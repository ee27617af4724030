//! Electromagnetic self-energy of an ideal-metal spherical shell, as the
//! coefficient of hbar*c/R.
//!
//! After the energy, angular-momentum and fluctuation integrals are done in
//! closed form the periodic-orbit sum reduces to
//!
//! ```text
//! E = sum_{n>=1} 1/(16 pi n^4)
//!   + sum_{n>=2} 15 sqrt(2) / (256 n^4) * sum_{w=1}^{n-1} cos(w pi/2n) / sin^2(w pi/2n)
//! ```
//!
//! The first sum collects the diameter orbits (their stationary point sits at
//! the endpoint of the angular-momentum range) and is `zeta(4)/(16 pi) = pi^3/1440`.
//! The second decays only like `1/n^2`, so it is summed explicitly and the
//! remainder obtained by Richardson extrapolation.

use std::f64::consts::{PI, SQRT_2};

use serde::Serialize;

use crate::error::Result;
use crate::series::{partial_sums, richardson_limit, CompensatedSum, SeriesTailPlan};
use crate::specfun::zeta;

/// Large-n limit of `n^2 * sphere_generic_term(n)`: the inner sum grows like `2n^2/3`.
pub const GENERIC_TERM_ASYMPTOTE: f64 = 5.0 * SQRT_2 / 128.0;

/// `1 / (16 pi n^4)`.
pub fn sphere_diameter_term(n: u32) -> f64 {
    let n = n as f64;
    1.0 / (16.0 * PI * n.powi(4))
}

/// Closed form of the diameter sum, `zeta(4) / (16 pi)`.
pub fn sphere_diameter_sum() -> f64 {
    zeta(4).expect("zeta(4) is supported") / (16.0 * PI)
}

/// `sum_{w=1}^{n-1} cos(w pi / 2n) / sin^2(w pi / 2n)`.
pub fn generic_inner_sum(n: u32) -> f64 {
    let mut acc = CompensatedSum::new();
    let step = PI / (2.0 * n as f64);
    for w in 1..n {
        let (s, c) = (w as f64 * step).sin_cos();
        acc.add(c / (s * s));
    }
    acc.value()
}

/// `15 sqrt(2) / (256 n^4)` times [`generic_inner_sum`]; zero for `n < 2`.
pub fn sphere_generic_term(n: u32) -> f64 {
    if n < 2 {
        return 0.0;
    }
    15.0 * SQRT_2 / (256.0 * (n as f64).powi(4)) * generic_inner_sum(n)
}

/// Decomposition of the sphere coefficient.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SphereEnergyBreakdown {
    pub diameter_sum: f64,
    pub generic_sum: f64,
    pub total: f64,
    pub tail_error: f64,
    pub explicit_terms_used: usize,
    /// Plain partial sum of the generic terms, before extrapolation.
    pub explicit_generic_sum: f64,
}

/// Per-n contributions, for the `--breakdown` table.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SphereTermRow {
    pub n: u32,
    pub diameter_term: f64,
    pub generic_term: f64,
}

pub fn sphere_term_rows(n_max: u32) -> Vec<SphereTermRow> {
    (1..=n_max)
        .map(|n| SphereTermRow { n, diameter_term: sphere_diameter_term(n), generic_term: sphere_generic_term(n) })
        .collect()
}

/// Semiclassical electromagnetic self-energy of the sphere.
pub fn sphere_sce(plan: &SeriesTailPlan) -> Result<SphereEnergyBreakdown> {
    plan.validate()?;
    let last = plan.explicit_terms.max(2);
    let sums = partial_sums(2, last, |n| sphere_generic_term(n as u32))?;
    let explicit_generic_sum = sums.last().map(|&(_, s)| s).unwrap_or(0.0);
    let extrapolated = richardson_limit(&sums, plan)?;
    plan.check_tail(extrapolated.error_estimate)?;

    let diameter_sum = sphere_diameter_sum();
    let generic_sum = extrapolated.limit;
    Ok(SphereEnergyBreakdown {
        diameter_sum,
        generic_sum,
        total: diameter_sum + generic_sum,
        tail_error: extrapolated.error_estimate,
        explicit_terms_used: last,
        explicit_generic_sum,
    })
}

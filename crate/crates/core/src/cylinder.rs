//! Electromagnetic self-energy of an ideal-metal cylindrical shell, as the
//! coefficient of hbar*c*L/R^2.
//!
//! Quadratic fluctuations about the planar periodic rays, with the
//! longitudinal-momentum fraction `alpha` kept inside `[0, 1]`, give
//!
//! ```text
//! E = 15 sqrt(2) / (512 pi) * sum_{n>=1} (-1)^n / n^4 * (-1/2 + sum_{w=1}^n csc^2(w pi / 2n))
//!       * int_0^1 (1 - alpha^2/2)^(-7/2) d alpha
//! ```
//!
//! The bracket equals `(4n^2 - 1)/6`, the series is `-pi^2/18 + 7 pi^4/4320`
//! and the alpha factor is `28 sqrt(2)/15`. Letting the alpha range run to
//! infinity replaces both Fresnel integrals by 1/2 and the coefficient vanishes.

use std::f64::consts::{FRAC_PI_2, PI, SQRT_2};

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::quad::integrate;
use crate::series::{partial_sums, richardson_limit, CompensatedSum, SeriesTailPlan};
use crate::specfun::{dawson, fresnel_cs, struve_combination, zeta, STRUVE_MAX_X};

/// Overall prefactor `15 sqrt(2) / (512 pi)`.
pub const PREFACTOR: f64 = 15.0 * SQRT_2 / (512.0 * PI);

/// `-pi^2/18 + 7 pi^4 / 4320`, from the alternating zeta values eta(2) and eta(4).
pub fn series_closed_form() -> f64 {
    -PI * PI / 18.0 + 7.0 * PI.powi(4) / 4320.0
}

/// `28 sqrt(2) / 15 = int_0^1 (1 - a^2/2)^(-7/2) da`.
pub fn quadratic_alpha_factor() -> f64 {
    28.0 * SQRT_2 / 15.0
}

/// `7 pi (7 pi^2 - 240) / 276480`.
pub fn quadratic_total_closed_form() -> f64 {
    7.0 * PI * (7.0 * PI * PI - 240.0) / 276_480.0
}

/// `(7 pi^2 - 240) / (288 pi^3 sqrt(2))`.
pub fn exponential_fit_total_closed_form() -> f64 {
    (7.0 * PI * PI - 240.0) / (288.0 * PI.powi(3) * SQRT_2)
}

/// Approximation used for the longitudinal-momentum integral.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AlphaIntegralVariant {
    /// `int_0^1 exp(-x sqrt(1 - a^2)) da` by adaptive quadrature.
    ExactQuadrature,
    /// Quadratic expansion of the square root, `int_0^1 exp(-x (1 - a^2/2)) da`.
    SemiclassicalQuadratic,
    /// `exp(-pi x / 4)`.
    ExponentialFit,
    /// The alpha range extended to infinity (Fresnel integrals -> 1/2).
    Unbounded,
}

impl AlphaIntegralVariant {
    pub const ALL: [AlphaIntegralVariant; 4] = [
        AlphaIntegralVariant::ExactQuadrature,
        AlphaIntegralVariant::SemiclassicalQuadratic,
        AlphaIntegralVariant::ExponentialFit,
        AlphaIntegralVariant::Unbounded,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AlphaIntegralVariant::ExactQuadrature => "exact-quadrature",
            AlphaIntegralVariant::SemiclassicalQuadratic => "semiclassical-quadratic",
            AlphaIntegralVariant::ExponentialFit => "exponential-fit",
            AlphaIntegralVariant::Unbounded => "unbounded",
        }
    }
}

/// `sum_{w=1}^{n} csc^2(w pi / 2n)`; analytically `(2n^2 + 1)/3`.
pub fn csc2_sum(n: u32) -> f64 {
    let mut acc = CompensatedSum::new();
    let step = PI / (2.0 * n as f64);
    for w in 1..=n {
        let s = (w as f64 * step).sin();
        acc.add(1.0 / (s * s));
    }
    acc.value()
}

/// `(-1)^n (csc2_sum(n) - 1/2) / n^4`.
pub fn cylinder_n_term(n: u32) -> f64 {
    let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    sign * (csc2_sum(n) - 0.5) / (n as f64).powi(4)
}

/// Longitudinal-momentum integral at imaginary energy `x`, in one of the
/// approximations. The unbounded variant returns the real part of the
/// continued integral, which vanishes identically.
pub fn alpha_integral(x: f64, variant: AlphaIntegralVariant) -> Result<f64> {
    if !x.is_finite() || x < 0.0 {
        return Err(Error::Domain(format!("alpha_integral needs finite x >= 0, got {x}")));
    }
    match variant {
        AlphaIntegralVariant::ExactQuadrature => {
            if x > STRUVE_MAX_X {
                return Err(Error::Domain(format!("exact alpha integral supports x <= 60, got {x}")));
            }
            // a = sin(t) removes the square-root endpoint behaviour at a = 1
            let q = integrate(|t: f64| (-x * t.cos()).exp() * t.cos(), 0.0, FRAC_PI_2, 1e-15, 1e-13)?;
            Ok(q.value)
        }
        AlphaIntegralVariant::SemiclassicalQuadratic => {
            if x == 0.0 {
                return Ok(1.0);
            }
            let z = (0.5 * x).sqrt();
            Ok((2.0 / x).sqrt() * (-0.5 * x).exp() * dawson(z)?)
        }
        AlphaIntegralVariant::ExponentialFit => Ok((-PI * x / 4.0).exp()),
        AlphaIntegralVariant::Unbounded => Ok(unbounded_alpha_integral(x)?.re),
    }
}

/// The Gaussian alpha integral with its upper bound sent to infinity, continued
/// to imaginary energy: `-i exp(-x) sqrt(pi / 2x)`. Purely imaginary.
pub fn unbounded_alpha_integral(x: f64) -> Result<Complex64> {
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::Domain(format!("unbounded alpha integral needs x > 0, got {x}")));
    }
    Ok(Complex64::new(0.0, -(-x).exp() * (PI / (2.0 * x)).sqrt()))
}

/// Fresnel-type fluctuation integral at real energy,
/// `exp(i pi g^2) (C(g) - i S(g)) / g`, with the upper bound at `alpha = 1`.
pub fn fresnel_alpha_integral(gamma: f64) -> Result<Complex64> {
    if !(gamma > 0.0 && gamma.is_finite()) {
        return Err(Error::Domain(format!("fresnel_alpha_integral needs gamma > 0, got {gamma}")));
    }
    let (c, s) = fresnel_cs(gamma)?;
    Ok(Complex64::from_polar(1.0, PI * gamma * gamma) * Complex64::new(c, -s) / gamma)
}

/// Same integral with the bound at infinity: both Fresnel integrals replaced by 1/2.
pub fn fresnel_alpha_integral_unbounded(gamma: f64) -> Result<Complex64> {
    if !(gamma > 0.0 && gamma.is_finite()) {
        return Err(Error::Domain(format!("fresnel_alpha_integral_unbounded needs gamma > 0, got {gamma}")));
    }
    Ok(Complex64::from_polar(1.0, PI * gamma * gamma) * Complex64::new(0.5, -0.5) / gamma)
}

/// `(C(g) - 1/2, S(g) - 1/2)`: what the finite alpha bound adds to the
/// unbounded integral.
pub fn fresnel_deficit(gamma: f64) -> Result<(f64, f64)> {
    let (c, s) = fresnel_cs(gamma)?;
    Ok((c - 0.5, s - 0.5))
}

/// Factor the alpha integral contributes once the energy integral is done.
pub fn alpha_factor(variant: AlphaIntegralVariant) -> Result<f64> {
    match variant {
        AlphaIntegralVariant::SemiclassicalQuadratic => Ok(quadratic_alpha_factor()),
        // The s = 7/2 moment of exp(-pi x/4) would be (4/pi)^(7/2); the
        // exponential-fit coefficient corresponds to the fourth power.
        AlphaIntegralVariant::ExponentialFit => Ok((4.0 / PI).powi(4)),
        AlphaIntegralVariant::Unbounded => Ok(0.0),
        AlphaIntegralVariant::ExactQuadrature => Err(Error::UnsupportedVariant("exact-quadrature")),
    }
}

/// `int_0^1 (1 - a^2/2)^(-7/2) da` by quadrature.
pub fn quadratic_alpha_factor_quadrature() -> Result<f64> {
    Ok(integrate(|a: f64| (1.0 - 0.5 * a * a).powf(-3.5), 0.0, 1.0, 1e-15, 1e-15)?.value)
}

/// Sum of [`cylinder_n_term`] extrapolated from the even partial sums up to
/// `plan.explicit_terms` (rounded up to even). Returns `(value, error_estimate)`.
///
/// The alternating sign makes odd and even partial sums approach the limit
/// from opposite sides; each parity alone has a smooth tail in 1/N.
pub fn cylinder_series(plan: &SeriesTailPlan) -> Result<(f64, f64)> {
    plan.validate()?;
    let last = plan.explicit_terms + plan.explicit_terms % 2;
    let sums = partial_sums(1, last, |n| cylinder_n_term(n as u32))?;
    let even: Vec<(usize, f64)> = sums.into_iter().filter(|&(n, _)| n % 2 == 0).collect();
    let ex = richardson_limit(&even, plan)?;
    plan.check_tail(ex.error_estimate)?;
    Ok((ex.limit, ex.error_estimate))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CylinderEnergyBreakdown {
    pub per_n_terms: Vec<f64>,
    pub series_value: f64,
    pub series_error: f64,
    pub alpha_factor: f64,
    pub prefactor: f64,
    pub total: f64,
    pub variant: AlphaIntegralVariant,
}

/// Semiclassical electromagnetic self-energy of the cylinder.
pub fn cylinder_sce(variant: AlphaIntegralVariant, plan: &SeriesTailPlan) -> Result<CylinderEnergyBreakdown> {
    let alpha = alpha_factor(variant)?;
    let (series_value, series_error) = cylinder_series(plan)?;
    let per_n_terms = (1..=plan.explicit_terms as u32).map(cylinder_n_term).collect();
    let total = if variant == AlphaIntegralVariant::Unbounded { 0.0 } else { PREFACTOR * series_value * alpha };
    Ok(CylinderEnergyBreakdown {
        per_n_terms,
        series_value,
        series_error,
        alpha_factor: alpha,
        prefactor: PREFACTOR,
        total,
        variant,
    })
}

/// The two-reflection (`n = 1`) term of the quadratic variant, `-7 / (128 pi)`.
pub fn cylinder_diffractive_n1() -> f64 {
    PREFACTOR * cylinder_n_term(1) * quadratic_alpha_factor()
}

/// `int_0^{pi/2 - eps} sec^3(phi) d phi` by quadrature.
pub fn sec_cubed_integral(eps: f64) -> Result<f64> {
    if !(eps > 0.0 && eps < FRAC_PI_2) {
        return Err(Error::Domain(format!("eps must lie in (0, pi/2), got {eps}")));
    }
    let q = integrate(|p: f64| p.cos().powi(-3), 0.0, FRAC_PI_2 - eps, 0.0, 1e-13)?;
    Ok(q.value)
}

/// Surface (`g(0)/2`) correction after subtracting the `n = 0` sector:
/// `(3 zeta(3) / 128) Re(i Q(eps))`. `Q` is real, so this is zero for every eps.
pub fn surface_correction_check(eps: f64) -> Result<f64> {
    let q = sec_cubed_integral(eps)?;
    let coefficient = 3.0 * zeta(3)? / 128.0;
    let value = (Complex64::i() * q).re * coefficient;
    // normalise a possible -0.0
    Ok(value + 0.0)
}

/// One row of the longitudinal-momentum comparison.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AlphaRow {
    pub x: f64,
    pub exact: f64,
    pub semiclassical: f64,
    pub exp_fit: f64,
    /// Same integral through the Struve-Bessel closed form.
    pub struve: f64,
}

/// Evaluate the exact integral and both approximants on `x_grid`.
pub fn alpha_table(x_grid: &[f64]) -> Result<Vec<AlphaRow>> {
    x_grid
        .iter()
        .map(|&x| {
            if !(0.0..=STRUVE_MAX_X).contains(&x) {
                return Err(Error::Domain(format!("alpha table x must lie in [0, 60], got {x}")));
            }
            Ok(AlphaRow {
                x,
                exact: alpha_integral(x, AlphaIntegralVariant::ExactQuadrature)?,
                semiclassical: alpha_integral(x, AlphaIntegralVariant::SemiclassicalQuadratic)?,
                exp_fit: alpha_integral(x, AlphaIntegralVariant::ExponentialFit)?,
                struve: struve_combination(x)?,
            })
        })
        .collect()
}

/// Default grid for the alpha-integral table: 0 to 30 in steps of 0.25.
pub fn default_alpha_grid() -> Vec<f64> {
    (0..=120).map(|i| i as f64 * 0.25).collect()
}

//! Debye/WKB spectrum of the interior of a cylindrical cavity.
//!
//! Mode `(ell, n)` has dimensionless transverse wave number `x` solving
//! `f_ell(x) = pi (n + 1/2 +- 1/4)` with `f_ell(x) = sqrt(x^2 - ell^2) - ell acos(ell/x)`,
//! `+` for Dirichlet and `-` for Neumann. The exact counterparts are the
//! zeros of `J_ell` and `J'_ell`.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::orbits::BoundaryCondition;
use crate::specfun::{bessel_j_zero, ZeroKind};

pub const MAX_ELL: u32 = 100;
pub const MAX_RADIAL: u32 = 100;

/// One semiclassical cavity mode.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WkbMode {
    pub ell: u32,
    pub n: u32,
    pub bc: BoundaryCondition,
    pub x: f64,
}

impl WkbMode {
    pub fn new(ell: u32, n: u32, bc: BoundaryCondition) -> Result<Self> {
        Ok(Self { ell, n, bc, x: wkb_zero(ell, n, bc)? })
    }
}

/// Radial phase `f_ell(x)`; zero at `x = ell`, increasing beyond.
pub fn f_ell(ell: u32, x: f64) -> Result<f64> {
    let l = ell as f64;
    if !x.is_finite() || x < l {
        return Err(Error::Domain(format!("f_ell needs x >= ell = {ell}, got {x}")));
    }
    if ell == 0 {
        return Ok(x);
    }
    Ok(((x - l) * (x + l)).sqrt() - l * (l / x).min(1.0).acos())
}

/// Right-hand side `pi (n + 1/2 +- 1/4)` of the quantisation condition.
pub fn quantum_phase(n: u32, bc: BoundaryCondition) -> f64 {
    let shift = match bc {
        BoundaryCondition::Dirichlet => 0.25,
        BoundaryCondition::Neumann => -0.25,
    };
    PI * (n as f64 + 0.5 + shift)
}

/// Solve the WKB condition for `x_{n ell}`.
pub fn wkb_zero(ell: u32, n: u32, bc: BoundaryCondition) -> Result<f64> {
    if ell > MAX_ELL || n > MAX_RADIAL {
        return Err(Error::Domain(format!("wkb_zero supports ell, n <= 100, got ({ell}, {n})")));
    }
    let target = quantum_phase(n, bc);
    let l = ell as f64;
    if ell == 0 {
        return Ok(target);
    }
    // f_ell(x) >= x - ell - ell*pi/2, so the root lies below ell(1 + pi/2) + target
    let mut lo = l;
    let mut hi = l * (1.0 + 0.5 * PI) + target;
    let g = |x: f64| f_ell(ell, x).map(|f| f - target);
    // f'_ell(x) = sqrt(x^2 - ell^2) / x
    let mut x = 0.5 * (lo + hi);
    for _ in 0..200 {
        let value = g(x)?;
        if value > 0.0 {
            hi = x;
        } else {
            lo = x;
        }
        let slope = ((x - l) * (x + l)).sqrt() / x;
        let newton = x - value / slope;
        let next = if slope > 0.0 && newton > lo && newton < hi { newton } else { 0.5 * (lo + hi) };
        if (next - x).abs() <= 1e-15 * x || hi - lo <= 4.0 * f64::EPSILON * hi {
            return Ok(next);
        }
        x = next;
    }
    Err(Error::BracketFailure(format!("wkb_zero({ell}, {n}) did not converge")))
}

/// One row of the WKB-versus-exact comparison.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectrumRow {
    pub ell: u32,
    pub n: u32,
    pub bc: BoundaryCondition,
    pub x_wkb: f64,
    pub x_exact: f64,
    /// `|x_wkb - x_exact| / x_exact`; `None` when the exact zero is at the origin.
    pub rel_error: Option<f64>,
    /// Set on the `(0, 0, Neumann)` row, whose exact zero is `x = 0`.
    pub anomaly: bool,
}

/// The exact zero WKB mode `(ell, n)` approximates: the `(n+1)`-th zero of
/// `J_ell` (Dirichlet) or `J'_ell` (Neumann, origin counted for `ell = 0`).
pub fn exact_zero(ell: u32, n: u32, bc: BoundaryCondition) -> Result<f64> {
    let kind = match bc {
        BoundaryCondition::Dirichlet => ZeroKind::Function,
        BoundaryCondition::Neumann => ZeroKind::Derivative,
    };
    bessel_j_zero(ell, n + 1, kind)
}

/// WKB zeros against exact Bessel zeros for `ell <= ell_max`, `n <= n_max`,
/// ordered by `(ell, n)`.
pub fn spectrum_report(ell_max: u32, n_max: u32, bc: BoundaryCondition) -> Result<Vec<SpectrumRow>> {
    if ell_max > 20 || n_max > 49 {
        return Err(Error::Domain(format!(
            "spectrum_report supports ell_max <= 20 and n_max <= 49, got ({ell_max}, {n_max})"
        )));
    }
    let mut rows = Vec::with_capacity(((ell_max + 1) * (n_max + 1)) as usize);
    for ell in 0..=ell_max {
        for n in 0..=n_max {
            let x_wkb = wkb_zero(ell, n, bc)?;
            let x_exact = exact_zero(ell, n, bc)?;
            let anomaly = x_exact == 0.0;
            let rel_error = (!anomaly).then(|| (x_wkb - x_exact).abs() / x_exact);
            rows.push(SpectrumRow { ell, n, bc, x_wkb, x_exact, rel_error, anomaly });
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn f_ell_values() {
        assert_eq!(f_ell(0, 3.7).unwrap(), 3.7);
        assert_eq!(f_ell(4, 4.0).unwrap(), 0.0);
        let want = 3.0_f64.sqrt() - (0.5_f64).acos();
        assert!((f_ell(1, 2.0).unwrap() - want).abs() < 1e-15);
        assert!((f_ell(1, 2.0).unwrap() - 0.684_853).abs() < 1e-6);
        assert!(matches!(f_ell(3, 2.9), Err(Error::Domain(_))));
    }

    #[test]
    fn wkb_zero_values() {
        assert!((wkb_zero(0, 0, BoundaryCondition::Dirichlet).unwrap() - 0.75 * PI).abs() < 1e-15);
        assert!((wkb_zero(0, 0, BoundaryCondition::Neumann).unwrap() - 0.25 * PI).abs() < 1e-15);
        let x = wkb_zero(1, 0, BoundaryCondition::Dirichlet).unwrap();
        assert!((x - 3.794).abs() < 1e-3, "{x}");
        assert!((f_ell(1, x).unwrap() - 0.75 * PI).abs() < 1e-12);
    }

    #[test]
    fn report_rows_and_anomaly() {
        let d = spectrum_report(1, 1, BoundaryCondition::Dirichlet).unwrap();
        assert_eq!(d.len(), 4);
        let first = d[0];
        assert!((first.x_exact - 2.404_825_557_695_773).abs() < 1e-12);
        let rel = first.rel_error.unwrap();
        assert!((rel - 0.0202).abs() < 5e-5, "{rel}");
        assert!(d[2].rel_error.unwrap() < 0.01);

        let n = spectrum_report(0, 0, BoundaryCondition::Neumann).unwrap();
        assert!(n[0].anomaly);
        assert_eq!(n[0].x_exact, 0.0);
        assert_eq!(n[0].rel_error, None);
        assert!((n[0].x_wkb - 0.25 * PI).abs() < 1e-15);
    }

    #[test]
    fn dirichlet_accuracy_grid() {
        let rows = spectrum_report(10, 10, BoundaryCondition::Dirichlet).unwrap();
        for r in &rows {
            let e = r.rel_error.unwrap();
            assert!(e < 0.021, "{r:?}");
            if r.n >= 1 {
                assert!(e < 0.01, "{r:?}");
            }
        }
    }

    #[test]
    fn errors_shrink_with_radial_index() {
        for bc in BoundaryCondition::ALL {
            let rows = spectrum_report(10, 10, bc).unwrap();
            for ell in 0..=10 {
                let errs: Vec<f64> = rows.iter().filter(|r| r.ell == ell).filter_map(|r| r.rel_error).collect();
                assert!(errs.windows(2).all(|w| w[1] < w[0]), "{bc:?} ell={ell}: {errs:?}");
            }
        }
    }

    proptest! {
        #[test]
        fn quantisation_holds_and_is_monotone(ell in 0u32..=99, n in 0u32..=99) {
            for bc in BoundaryCondition::ALL {
                let x = wkb_zero(ell, n, bc).unwrap();
                prop_assert!(x > ell as f64);
                prop_assert!((f_ell(ell, x).unwrap() - quantum_phase(n, bc)).abs() < 1e-10);
                prop_assert!(wkb_zero(ell, n + 1, bc).unwrap() > x);
                prop_assert!(wkb_zero(ell + 1, n, bc).unwrap() > x);
            }
            let xd = wkb_zero(ell, n, BoundaryCondition::Dirichlet).unwrap();
            let xn = wkb_zero(ell, n, BoundaryCondition::Neumann).unwrap();
            let offset = f_ell(ell, xd).unwrap() - f_ell(ell, xn).unwrap();
            prop_assert!((offset - 0.5 * PI).abs() < 1e-10);
        }
    }
}

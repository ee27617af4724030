//! Classical periodic rays in spherical (and, by the same planar geometry,
//! cylindrical) cavities.
//!
//! A sector `(n, w)` collects closed rays with `n` reflections off the shell
//! and `w` windings about the centre. On the principal branch `w <= n/2` its
//! stationary angular-momentum fraction is `cos(w pi / n)`; the diameter
//! sectors `(2w, w)` sit at the endpoint `z = 0`.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};

/// Boundary condition of one scalar polarisation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum BoundaryCondition {
    Dirichlet,
    Neumann,
}

impl BoundaryCondition {
    pub const ALL: [BoundaryCondition; 2] = [BoundaryCondition::Dirichlet, BoundaryCondition::Neumann];

    /// Phase lost at one specular reflection.
    pub fn reflection_phase(self) -> f64 {
        match self {
            BoundaryCondition::Dirichlet => PI,
            BoundaryCondition::Neumann => 0.0,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            BoundaryCondition::Dirichlet => "D",
            BoundaryCondition::Neumann => "N",
        }
    }
}

/// Periodic-orbit class: `n` reflections, `w` windings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Sector {
    pub n: u32,
    pub w: u32,
}

impl Sector {
    pub fn new(n: u32, w: u32) -> Self {
        Self { n, w }
    }

    /// `n >= 2w >= 1`.
    pub fn is_stationary(self) -> bool {
        self.w >= 1 && self.n >= 2 * self.w
    }

    /// Rays through the centre, bouncing between antipodes (`n = 2w`).
    pub fn is_diameter(self) -> bool {
        self.w >= 1 && self.n == 2 * self.w
    }

    fn check(self) -> Result<()> {
        if self.is_stationary() {
            Ok(())
        } else {
            Err(Error::NoStationaryPoint { n: self.n, w: self.w })
        }
    }

    fn angle(self) -> f64 {
        self.w as f64 * PI / self.n as f64
    }
}

/// Stationary angular-momentum fraction `cos(w pi / n)`.
pub fn stationary_z(sector: Sector) -> Result<f64> {
    sector.check()?;
    if sector.is_diameter() {
        return Ok(0.0);
    }
    Ok(sector.angle().cos())
}

/// Orbit length in units of the radius, `2 n sin(w pi / n)`.
pub fn orbit_length(sector: Sector) -> Result<f64> {
    sector.check()?;
    if sector.is_diameter() {
        return Ok(2.0 * sector.n as f64);
    }
    Ok(2.0 * sector.n as f64 * sector.angle().sin())
}

/// Keller-Maslov index on the sphere: every orbit crosses the second-order
/// caustic `n` times (phase pi each) and reflects `n` times.
pub fn maslov_index(sector: Sector, bc: BoundaryCondition) -> Result<u32> {
    sector.check()?;
    Ok(match bc {
        BoundaryCondition::Dirichlet => 0,
        BoundaryCondition::Neumann => 2 * sector.n,
    })
}

/// Second z-derivative of the phase at the stationary point, `n / sin(w pi / n)`.
pub fn action_curvature(sector: Sector) -> Result<f64> {
    if sector.w == 0 {
        return Err(Error::DivergentCurvature { n: sector.n });
    }
    sector.check()?;
    if sector.is_diameter() {
        return Ok(sector.n as f64);
    }
    Ok(sector.n as f64 / sector.angle().sin())
}

/// Whether the sector survives the Dirichlet + Neumann (electromagnetic)
/// combination: the pair carries `1^n + (-1)^n`, so only even `n` remain.
pub fn em_sector_filter(sector: Sector) -> bool {
    sector.n.is_multiple_of(2)
}

/// All stationary sectors with `n <= n_max`, ordered by `(n, w)`.
pub fn enumerate_sectors(n_max: u32, em_only: bool) -> Vec<Sector> {
    (2..=n_max)
        .flat_map(|n| (1..=n / 2).map(move |w| Sector::new(n, w)))
        .filter(|s| !em_only || em_sector_filter(*s))
        .collect()
}

/// Everything known about one stationary sector.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OrbitGeometry {
    pub sector: Sector,
    pub stationary_z: f64,
    pub length_over_r: f64,
    pub maslov_dirichlet: u32,
    pub maslov_neumann: u32,
    pub curvature: f64,
    pub em_contributes: bool,
    pub diameter: bool,
}

impl OrbitGeometry {
    pub fn new(sector: Sector) -> Result<Self> {
        Ok(Self {
            sector,
            stationary_z: stationary_z(sector)?,
            length_over_r: orbit_length(sector)?,
            maslov_dirichlet: maslov_index(sector, BoundaryCondition::Dirichlet)?,
            maslov_neumann: maslov_index(sector, BoundaryCondition::Neumann)?,
            curvature: action_curvature(sector)?,
            em_contributes: em_sector_filter(sector),
            diameter: sector.is_diameter(),
        })
    }

    /// Phase factor `exp(-i pi beta / 2)` for one boundary condition.
    pub fn maslov_phase(&self, bc: BoundaryCondition) -> num_complex::Complex64 {
        let beta = match bc {
            BoundaryCondition::Dirichlet => self.maslov_dirichlet,
            BoundaryCondition::Neumann => self.maslov_neumann,
        };
        // beta is even, so the phase is exactly +-1
        let sign = if (beta / 2) % 2 == 0 { 1.0 } else { -1.0 };
        num_complex::Complex64::new(sign, 0.0)
    }
}

/// Geometry rows for every stationary sector up to `n_max`.
pub fn orbit_table(n_max: u32) -> Result<Vec<OrbitGeometry>> {
    enumerate_sectors(n_max, false).into_iter().map(OrbitGeometry::new).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const SQRT2: f64 = std::f64::consts::SQRT_2;

    #[test]
    fn stationary_points() {
        assert!((stationary_z(Sector::new(4, 1)).unwrap() - 0.5 * SQRT2).abs() < 1e-15);
        assert_eq!(stationary_z(Sector::new(2, 1)).unwrap(), 0.0);
        assert!(matches!(stationary_z(Sector::new(1, 0)), Err(Error::NoStationaryPoint { n: 1, w: 0 })));
        assert!(stationary_z(Sector::new(3, 2)).is_err());
    }

    #[test]
    fn lengths() {
        assert_eq!(orbit_length(Sector::new(2, 1)).unwrap(), 4.0);
        let square = orbit_length(Sector::new(4, 1)).unwrap();
        assert!((square - SQRT2 * 4.0).abs() < 1e-14);
        assert!((orbit_length(Sector::new(6, 2)).unwrap() - 10.392_304_845_413_264).abs() < 1e-13);
        // (4,2) is another factor sqrt(2) longer than the square
        assert!((square * SQRT2 - orbit_length(Sector::new(4, 2)).unwrap()).abs() < 1e-14);
    }

    #[test]
    fn maslov_indices() {
        assert_eq!(maslov_index(Sector::new(4, 1), BoundaryCondition::Dirichlet).unwrap(), 0);
        assert_eq!(maslov_index(Sector::new(3, 1), BoundaryCondition::Neumann).unwrap(), 6);
        assert_eq!(maslov_index(Sector::new(2, 1), BoundaryCondition::Neumann).unwrap(), 4);
    }

    #[test]
    fn curvature() {
        assert_eq!(action_curvature(Sector::new(2, 1)).unwrap(), 2.0);
        assert!((action_curvature(Sector::new(4, 1)).unwrap() - 4.0 * SQRT2).abs() < 1e-14);
        assert!(matches!(action_curvature(Sector::new(5, 0)), Err(Error::DivergentCurvature { n: 5 })));
    }

    #[test]
    fn em_filter() {
        assert!(em_sector_filter(Sector::new(2, 1)));
        assert!(!em_sector_filter(Sector::new(5, 2)));
        assert!(em_sector_filter(Sector::new(6, 2)));
    }

    #[test]
    fn enumeration() {
        let s = |v: &[(u32, u32)]| v.iter().map(|&(n, w)| Sector::new(n, w)).collect::<Vec<_>>();
        assert_eq!(enumerate_sectors(2, true), s(&[(2, 1)]));
        assert_eq!(enumerate_sectors(4, true), s(&[(2, 1), (4, 1), (4, 2)]));
        assert_eq!(enumerate_sectors(3, false), s(&[(2, 1), (3, 1)]));
        assert!(enumerate_sectors(40, false).iter().all(|s| s.n > 0 && s.w > 0));
    }

    #[test]
    fn table_flags_diameters() {
        let rows = orbit_table(6).unwrap();
        let diam: Vec<_> = rows.iter().filter(|r| r.diameter).map(|r| r.sector).collect();
        assert_eq!(diam, vec![Sector::new(2, 1), Sector::new(4, 2), Sector::new(6, 3)]);
    }

    proptest! {
        #[test]
        fn chord_sum_shorter_than_windings(n in 2u32..400, w_frac in 0.0f64..1.0) {
            let w = 1 + ((n / 2 - 1) as f64 * w_frac) as u32;
            let s = Sector::new(n, w);
            let l = orbit_length(s).unwrap();
            prop_assert!(l > 0.0 && l < 2.0 * PI * w as f64);
            if w < n / 2 {
                prop_assert!(orbit_length(Sector::new(n, w + 1)).unwrap() > l);
            }
            let z = stationary_z(s).unwrap();
            prop_assert!((0.0..1.0).contains(&z));
        }

        #[test]
        fn diameter_identities(w in 1u32..1000) {
            let s = Sector::new(2 * w, w);
            prop_assert_eq!(stationary_z(s).unwrap(), 0.0);
            prop_assert_eq!(orbit_length(s).unwrap(), 4.0 * w as f64);
        }

        #[test]
        fn maslov_offset_and_em_phase(n in 2u32..500, w_frac in 0.0f64..1.0) {
            let w = 1 + ((n / 2 - 1) as f64 * w_frac) as u32;
            let g = OrbitGeometry::new(Sector::new(n, w)).unwrap();
            prop_assert_eq!(g.maslov_neumann - g.maslov_dirichlet, 2 * n);
            let same = g.maslov_phase(BoundaryCondition::Dirichlet) == g.maslov_phase(BoundaryCondition::Neumann);
            prop_assert_eq!(same, em_sector_filter(g.sector));
        }
    }
}

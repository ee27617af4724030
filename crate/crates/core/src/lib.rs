//! Semiclassical (periodic-orbit) Casimir self-energies of ideal-metal
//! spherical and cylindrical shells.
//!
//! The crate is organised bottom-up:
//!
//! * [`specfun`] and [`quad`]: special functions and adaptive quadrature.
//! * [`series`]: compensated summation and Richardson extrapolation.
//! * [`orbits`]: periodic-ray geometry, Keller-Maslov indices, sector enumeration.
//! * [`wkb`]: Debye/WKB spectrum of the cylindrical cavity.
//! * [`sphere`], [`cylinder`]: the electromagnetic energy coefficients.
//! * [`verify`]: the reproduction checks, shared by the CLI and the test suite.
//! * [`cli`]: command-line front end.
//!
//! Units: hbar = c = 1. Sphere energies are coefficients of hbar*c/R, cylinder
//! energies coefficients of hbar*c*L/R^2.

pub mod cli;
pub mod cylinder;
pub mod error;
pub mod orbits;
pub mod quad;
pub mod series;
pub mod specfun;
pub mod sphere;
pub mod verify;
pub mod wkb;

pub use error::{Error, Result};
pub use orbits::{BoundaryCondition, OrbitGeometry, Sector};
pub use series::SeriesTailPlan;

/// Reference value of the exact field-theoretic sphere coefficient (hbar*c/R).
/// Not computed here; used for comparison only.
pub const SPHERE_FIELD_THEORY_REFERENCE: f64 = 0.04617;

/// Reference value of the exact field-theoretic cylinder coefficient
/// (hbar*c*L/R^2). Comparison only.
pub const CYLINDER_FIELD_THEORY_REFERENCE: f64 = -0.0135613;

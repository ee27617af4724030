//! Special-function kernel: Bessel J and its zeros, I1, the Struve-Bessel
//! combination that closes the longitudinal-momentum integral, Dawson's
//! function, Fresnel integrals and the few zeta values the checks need.
//!
//! Everything is binary64 and pure.

mod bessel;
mod ddouble;
mod dawson;
mod fresnel;
mod struve;
mod zeta;

pub use bessel::{bessel_j, bessel_j_prime, bessel_j_zero, ZeroKind, MAX_ORDER, MAX_ZERO_INDEX, MAX_ZERO_ORDER};
pub use dawson::{dawson, DAWSON_SWITCH};
pub use fresnel::fresnel_cs;
pub use struve::{bessel_i1, struve_combination, I1_SWITCH, STRUVE_MAX_X, STRUVE_SWITCH};
pub use zeta::{zeta, ZetaConstant};

//! C interface to `casimir-core`.
//!
//! Every function returns a [`CasimirStatus`] and writes results through out
//! pointers. Handles are opaque and must be released with the matching
//! `*_free` function. After a non-OK status, [`casimir_last_error`] returns
//! a message for the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use casimir_core::cylinder::{self, AlphaIntegralVariant, CylinderEnergyBreakdown};
use casimir_core::specfun::{self, ZeroKind};
use casimir_core::{sphere, wkb, BoundaryCondition, Error, SeriesTailPlan};

/// Result code of every call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CasimirStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Domain = 3,
    UnsupportedOrder = 4,
    BracketFailure = 5,
    Overflow = 6,
    NoStationaryPoint = 7,
    DivergentCurvature = 8,
    NonFinite = 9,
    InsufficientData = 10,
    InvalidPlan = 11,
    UnsupportedVariant = 12,
    Quadrature = 13,
    TailNotConverged = 14,
    Panic = 15,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CasimirBoundary {
    Dirichlet = 0,
    Neumann = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CasimirZeroKind {
    Function = 0,
    Derivative = 1,
}

/// Treatment of the longitudinal-momentum integral.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CasimirAlphaVariant {
    Exact = 0,
    Quadratic = 1,
    ExpFit = 2,
    Unbounded = 3,
}

/// Sphere coefficient in units of hbar c / R.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct CasimirSphereEnergy {
    pub diameter_sum: f64,
    pub generic_sum: f64,
    pub total: f64,
    pub tail_error: f64,
    pub explicit_terms: usize,
}

/// Opaque series plan.
pub struct CasimirPlan(SeriesTailPlan);

/// Opaque cylinder result.
pub struct CasimirCylinder(CylinderEnergyBreakdown);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(err: &Error) -> CasimirStatus {
    match err {
        Error::Domain(_) => CasimirStatus::Domain,
        Error::UnsupportedOrder { .. } => CasimirStatus::UnsupportedOrder,
        Error::BracketFailure(_) => CasimirStatus::BracketFailure,
        Error::Overflow(_) => CasimirStatus::Overflow,
        Error::NoStationaryPoint { .. } => CasimirStatus::NoStationaryPoint,
        Error::DivergentCurvature { .. } => CasimirStatus::DivergentCurvature,
        Error::NonFinite { .. } => CasimirStatus::NonFinite,
        Error::InsufficientData { .. } => CasimirStatus::InsufficientData,
        Error::InvalidPlan(_) => CasimirStatus::InvalidPlan,
        Error::UnsupportedVariant(_) => CasimirStatus::UnsupportedVariant,
        Error::Quadrature(_) => CasimirStatus::Quadrature,
        Error::TailNotConverged { .. } => CasimirStatus::TailNotConverged,
    }
}

// Runs `f`, converting errors and panics into a status.
fn guard<F: FnOnce() -> Result<(), CasimirStatus>>(f: F) -> CasimirStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CasimirStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_last_error("internal panic".into());
            CasimirStatus::Panic
        }
    }
}

fn lift<T>(r: casimir_core::Result<T>) -> Result<T, CasimirStatus> {
    r.map_err(|e| {
        set_last_error(e.to_string());
        status_of(&e)
    })
}

fn null(what: &str) -> CasimirStatus {
    set_last_error(format!("{what} is null"));
    CasimirStatus::NullPointer
}

fn plan_or_default(plan: *const CasimirPlan) -> SeriesTailPlan {
    // SAFETY: callers pass null or a pointer from casimir_plan_new.
    unsafe { plan.as_ref() }.map_or_else(SeriesTailPlan::default, |p| p.0)
}

fn variant(v: CasimirAlphaVariant) -> AlphaIntegralVariant {
    match v {
        CasimirAlphaVariant::Exact => AlphaIntegralVariant::ExactQuadrature,
        CasimirAlphaVariant::Quadratic => AlphaIntegralVariant::SemiclassicalQuadratic,
        CasimirAlphaVariant::ExpFit => AlphaIntegralVariant::ExponentialFit,
        CasimirAlphaVariant::Unbounded => AlphaIntegralVariant::Unbounded,
    }
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn casimir_status_message(status: CasimirStatus) -> *const c_char {
    let s: &'static [u8] = match status {
        CasimirStatus::Ok => b"ok\0",
        CasimirStatus::NullPointer => b"null pointer argument\0",
        CasimirStatus::InvalidArgument => b"invalid argument\0",
        CasimirStatus::Domain => b"argument out of domain\0",
        CasimirStatus::UnsupportedOrder => b"unsupported order\0",
        CasimirStatus::BracketFailure => b"root bracketing failed\0",
        CasimirStatus::Overflow => b"overflow\0",
        CasimirStatus::NoStationaryPoint => b"sector has no stationary point\0",
        CasimirStatus::DivergentCurvature => b"action curvature diverges\0",
        CasimirStatus::NonFinite => b"non-finite series term\0",
        CasimirStatus::InsufficientData => b"too few partial sums\0",
        CasimirStatus::InvalidPlan => b"invalid series plan\0",
        CasimirStatus::UnsupportedVariant => b"unsupported alpha-integral variant\0",
        CasimirStatus::Quadrature => b"quadrature did not converge\0",
        CasimirStatus::TailNotConverged => b"series tail not converged\0",
        CasimirStatus::Panic => b"internal panic\0",
    };
    s.as_ptr().cast()
}

/// Message for the last failing call on this thread. Valid until the next
/// failing call on the same thread.
#[no_mangle]
pub extern "C" fn casimir_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Create a series plan. Release with [`casimir_plan_free`].
///
/// # Safety
/// `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn casimir_plan_new(
    explicit_terms: usize,
    richardson_order: usize,
    tolerance: f64,
    out: *mut *mut CasimirPlan,
) -> CasimirStatus {
    if out.is_null() {
        return null("out");
    }
    guard(|| {
        let plan = lift(SeriesTailPlan::new(explicit_terms, richardson_order, tolerance))?;
        *out = Box::into_raw(Box::new(CasimirPlan(plan)));
        Ok(())
    })
}

/// Release a plan. Null is ignored.
///
/// # Safety
/// `plan` must be null or come from [`casimir_plan_new`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn casimir_plan_free(plan: *mut CasimirPlan) {
    if !plan.is_null() {
        drop(Box::from_raw(plan));
    }
}

/// Sphere coefficient. `plan` may be null for the default plan.
///
/// # Safety
/// `plan` must be null or a live plan; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn casimir_sphere_energy(plan: *const CasimirPlan, out: *mut CasimirSphereEnergy) -> CasimirStatus {
    if out.is_null() {
        return null("out");
    }
    let plan = plan_or_default(plan);
    guard(|| {
        let r = lift(sphere::sphere_sce(&plan))?;
        *out = CasimirSphereEnergy {
            diameter_sum: r.diameter_sum,
            generic_sum: r.generic_sum,
            total: r.total,
            tail_error: r.tail_error,
            explicit_terms: r.explicit_terms_used,
        };
        Ok(())
    })
}

/// Cylinder coefficient per unit length. `plan` may be null. Release the
/// result with [`casimir_cylinder_free`].
///
/// # Safety
/// `plan` must be null or a live plan; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn casimir_cylinder_energy(
    plan: *const CasimirPlan,
    alpha: CasimirAlphaVariant,
    out: *mut *mut CasimirCylinder,
) -> CasimirStatus {
    if out.is_null() {
        return null("out");
    }
    let plan = plan_or_default(plan);
    guard(|| {
        let r = lift(cylinder::cylinder_sce(variant(alpha), &plan))?;
        *out = Box::into_raw(Box::new(CasimirCylinder(r)));
        Ok(())
    })
}

/// # Safety
/// `result` must be a live cylinder handle.
#[no_mangle]
pub unsafe extern "C" fn casimir_cylinder_total(result: *const CasimirCylinder) -> f64 {
    result.as_ref().map_or(f64::NAN, |r| r.0.total)
}

/// # Safety
/// `result` must be a live cylinder handle.
#[no_mangle]
pub unsafe extern "C" fn casimir_cylinder_series(result: *const CasimirCylinder) -> f64 {
    result.as_ref().map_or(f64::NAN, |r| r.0.series_value)
}

/// # Safety
/// `result` must be a live cylinder handle.
#[no_mangle]
pub unsafe extern "C" fn casimir_cylinder_alpha_factor(result: *const CasimirCylinder) -> f64 {
    result.as_ref().map_or(f64::NAN, |r| r.0.alpha_factor)
}

/// Number of explicit per-n series terms held by the result.
///
/// # Safety
/// `result` must be a live cylinder handle.
#[no_mangle]
pub unsafe extern "C" fn casimir_cylinder_term_count(result: *const CasimirCylinder) -> usize {
    result.as_ref().map_or(0, |r| r.0.per_n_terms.len())
}

/// Series term for `n` (1-based).
///
/// # Safety
/// `result` must be a live cylinder handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn casimir_cylinder_term(result: *const CasimirCylinder, n: usize, out: *mut f64) -> CasimirStatus {
    let (Some(r), false) = (result.as_ref(), out.is_null()) else {
        return null("result or out");
    };
    match n.checked_sub(1).and_then(|i| r.0.per_n_terms.get(i)) {
        Some(&t) => {
            *out = t;
            CasimirStatus::Ok
        }
        None => {
            set_last_error(format!("term index {n} outside 1..={}", r.0.per_n_terms.len()));
            CasimirStatus::InvalidArgument
        }
    }
}

/// Release a cylinder result. Null is ignored.
///
/// # Safety
/// `result` must be null or come from [`casimir_cylinder_energy`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn casimir_cylinder_free(result: *mut CasimirCylinder) {
    if !result.is_null() {
        drop(Box::from_raw(result));
    }
}

/// WKB zero `x_{ell,n}` of the radial quantisation condition.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn casimir_wkb_zero(ell: u32, n: u32, bc: CasimirBoundary, out: *mut f64) -> CasimirStatus {
    if out.is_null() {
        return null("out");
    }
    let bc = match bc {
        CasimirBoundary::Dirichlet => BoundaryCondition::Dirichlet,
        CasimirBoundary::Neumann => BoundaryCondition::Neumann,
    };
    guard(|| {
        *out = lift(wkb::wkb_zero(ell, n, bc))?;
        Ok(())
    })
}

/// `k`-th zero of `J_order` or `J'_order` (the origin counts for `J'_0`).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn casimir_bessel_j_zero(order: u32, k: u32, kind: CasimirZeroKind, out: *mut f64) -> CasimirStatus {
    if out.is_null() {
        return null("out");
    }
    let kind = match kind {
        CasimirZeroKind::Function => ZeroKind::Function,
        CasimirZeroKind::Derivative => ZeroKind::Derivative,
    };
    guard(|| {
        *out = lift(specfun::bessel_j_zero(order, k, kind))?;
        Ok(())
    })
}

/// `int_0^1 exp(-x sqrt(1 - a^2)) da` or one of its approximants.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn casimir_alpha_integral(x: f64, alpha: CasimirAlphaVariant, out: *mut f64) -> CasimirStatus {
    if out.is_null() {
        return null("out");
    }
    guard(|| {
        *out = lift(cylinder::alpha_integral(x, variant(alpha)))?;
        Ok(())
    })
}

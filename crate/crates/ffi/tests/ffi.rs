use std::ffi::CStr;
use std::ptr;

use casimir_ffi::*;

#[test]
fn sphere_default_plan() {
    let mut e = CasimirSphereEnergy::default();
    let s = unsafe { casimir_sphere_energy(ptr::null(), &mut e) };
    assert_eq!(s, CasimirStatus::Ok);
    assert!((e.total - 0.04668).abs() < 5e-5);
    assert_eq!(e.explicit_terms, 50);
}

#[test]
fn plan_lifecycle_and_errors() {
    let mut plan = ptr::null_mut();
    assert_eq!(unsafe { casimir_plan_new(70, 4, 1e-5, &mut plan) }, CasimirStatus::Ok);
    let mut e = CasimirSphereEnergy::default();
    assert_eq!(unsafe { casimir_sphere_energy(plan, &mut e) }, CasimirStatus::Ok);
    assert_eq!(e.explicit_terms, 70);
    unsafe { casimir_plan_free(plan) };

    let mut bad = ptr::null_mut();
    assert_eq!(unsafe { casimir_plan_new(3, 4, 1e-5, &mut bad) }, CasimirStatus::InvalidPlan);
    assert!(bad.is_null());
    let msg = unsafe { CStr::from_ptr(casimir_last_error()) }.to_str().unwrap();
    assert!(msg.contains("richardson_order"), "{msg}");
    assert_eq!(unsafe { casimir_plan_new(50, 4, 1e-5, ptr::null_mut()) }, CasimirStatus::NullPointer);
    unsafe { casimir_plan_free(ptr::null_mut()) };
}

#[test]
fn cylinder_handle() {
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { casimir_cylinder_energy(ptr::null(), CasimirAlphaVariant::Quadratic, &mut h) }, CasimirStatus::Ok);
    unsafe {
        assert!((casimir_cylinder_total(h) + 0.013_594_358).abs() < 1e-8);
        assert!((casimir_cylinder_alpha_factor(h) - 28.0 * 2f64.sqrt() / 15.0).abs() < 1e-14);
        assert_eq!(casimir_cylinder_term_count(h), 50);
        let mut t = 0.0;
        assert_eq!(casimir_cylinder_term(h, 1, &mut t), CasimirStatus::Ok);
        assert!((t + 0.5).abs() < 1e-14);
        assert_eq!(casimir_cylinder_term(h, 0, &mut t), CasimirStatus::InvalidArgument);
        assert_eq!(casimir_cylinder_term(h, 51, &mut t), CasimirStatus::InvalidArgument);
        casimir_cylinder_free(h);
    }
    let mut h = ptr::null_mut();
    let s = unsafe { casimir_cylinder_energy(ptr::null(), CasimirAlphaVariant::Exact, &mut h) };
    assert_eq!(s, CasimirStatus::UnsupportedVariant);
    assert!(h.is_null());
}

#[test]
fn scalar_functions() {
    let mut x = 0.0;
    unsafe {
        assert_eq!(casimir_bessel_j_zero(0, 1, CasimirZeroKind::Function, &mut x), CasimirStatus::Ok);
        assert!((x - 2.404_825_557_695_773).abs() < 1e-12);
        assert_eq!(casimir_bessel_j_zero(30, 1, CasimirZeroKind::Function, &mut x), CasimirStatus::UnsupportedOrder);
        assert_eq!(casimir_wkb_zero(0, 0, CasimirBoundary::Neumann, &mut x), CasimirStatus::Ok);
        assert!((x - std::f64::consts::FRAC_PI_4).abs() < 1e-14);
        assert_eq!(casimir_alpha_integral(0.0, CasimirAlphaVariant::Exact, &mut x), CasimirStatus::Ok);
        assert!((x - 1.0).abs() < 1e-14);
        assert_eq!(casimir_alpha_integral(-1.0, CasimirAlphaVariant::Exact, &mut x), CasimirStatus::Domain);
        assert_eq!(casimir_alpha_integral(1.0, CasimirAlphaVariant::Exact, ptr::null_mut()), CasimirStatus::NullPointer);
    }
}

#[test]
fn status_messages_are_static() {
    let m = unsafe { CStr::from_ptr(casimir_status_message(CasimirStatus::TailNotConverged)) };
    assert_eq!(m.to_str().unwrap(), "series tail not converged");
}

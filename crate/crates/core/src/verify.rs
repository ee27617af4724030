//! Reproduction checks. Each criterion returns a [`CriterionResult`]; the CLI
//! `verify` subcommand and the `acceptance` test target both run them.
//!
//! The brute-force and quadrature oracles below are deliberately separate
//! code paths from the library routines they check.

use std::f64::consts::{PI, SQRT_2};
use std::fmt;

use serde::Serialize;

use crate::cylinder::{self, AlphaIntegralVariant};
use crate::orbits::{orbit_length, BoundaryCondition, Sector};
use crate::series::{richardson_limit, CompensatedSum, SeriesTailPlan};
use crate::specfun::{bessel_j_zero, dawson, fresnel_cs, ZeroKind};
use crate::sphere;
use crate::wkb::spectrum_report;
use crate::SPHERE_FIELD_THEORY_REFERENCE;

// Tolerances and thresholds, one per stated bound.
pub const SPHERE_TOTAL: f64 = 0.04668;
pub const SPHERE_TOTAL_TOL: f64 = 5e-5;
pub const SPHERE_RATIO: f64 = 1.011;
pub const SPHERE_RATIO_TOL: f64 = 0.002;
pub const DIAMETER_SUM_TOL: f64 = 1e-12;
pub const TAIL_AGREEMENT_TOL: f64 = 1e-5;
pub const BRUTE_FORCE_TERMS: u32 = 100_000;
pub const CYLINDER_QUADRATIC_TOL: f64 = 1e-6;
pub const CYLINDER_EXPFIT: f64 = -0.013533;
pub const CYLINDER_EXPFIT_TOL: f64 = 1e-5;
pub const CSC2_IDENTITY_TOL: f64 = 1e-12;
pub const CSC2_IDENTITY_MAX_N: u32 = 10_000;
pub const CYLINDER_SERIES_TOL: f64 = 1e-10;
pub const ALPHA_FACTOR_TOL: f64 = 1e-10;
pub const DIFFRACTIVE_TOL: f64 = 1e-6;
pub const WKB_ALL_REL: f64 = 0.021;
pub const WKB_EXCITED_REL: f64 = 0.01;
pub const WKB_GRID_MAX: u32 = 10;
pub const ALPHA_GRID: [f64; 7] = [0.0, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0];
pub const ALPHA_STRUVE_TOL: f64 = 1e-8;
pub const ALPHA_TAIL_X: f64 = 30.0;
pub const ALPHA_TAIL_RANGE: (f64, f64) = (0.9, 1.1);
pub const SURFACE_EPS: [f64; 3] = [0.5, 0.1, 0.001];
pub const DAWSON_ODE_TOL: f64 = 1e-8;

/// Outcome of one criterion.
#[derive(Debug, Clone, Serialize)]
pub struct CriterionResult {
    pub id: u32,
    pub title: &'static str,
    pub passed: bool,
    pub checks: Vec<Check>,
}

/// One measured quantity inside a criterion.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{tag}] criterion {:>2}: {}", self.id, self.title)?;
        for c in &self.checks {
            let t = if c.passed { "ok" } else { "FAILED" };
            write!(f, "\n         - {} [{t}] {}", c.name, c.detail)?;
        }
        Ok(())
    }
}

struct Builder {
    id: u32,
    title: &'static str,
    checks: Vec<Check>,
}

impl Builder {
    fn new(id: u32, title: &'static str) -> Self {
        Self { id, title, checks: Vec::new() }
    }

    fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), passed, detail: detail.into() });
    }

    fn close(&mut self, name: &str, got: f64, want: f64, tol: f64) {
        let diff = (got - want).abs();
        self.check(name, diff <= tol, format!("got {got:.12e}, want {want:.12e}, |diff| {diff:.3e} <= {tol:e}"));
    }

    fn fail(&mut self, name: &str, err: impl fmt::Display) {
        self.check(name, false, format!("error: {err}"));
    }

    fn finish(self) -> CriterionResult {
        let passed = !self.checks.is_empty() && self.checks.iter().all(|c| c.passed);
        CriterionResult { id: self.id, title: self.title, passed, checks: self.checks }
    }
}

/// Direct sum of the sphere series to `n_max`, no extrapolation. The inner
/// angular sums use four interleaved rotation recurrences re-seeded every
/// 256 terms, so the O(n_max^2) work stays at a few seconds for 10^5.
pub fn brute_force_sphere_total(n_max: u32) -> f64 {
    let mut diameter = CompensatedSum::new();
    for n in (1..=n_max).rev() {
        diameter.add(1.0 / (16.0 * PI * (n as f64).powi(4)));
    }
    let mut generic = CompensatedSum::new();
    for n in 2..=n_max {
        generic.add(15.0 * SQRT_2 / (256.0 * (n as f64).powi(4)) * rotating_inner_sum(n));
    }
    diameter.value() + generic.value()
}

fn rotating_inner_sum(n: u32) -> f64 {
    let delta = PI / (2.0 * n as f64);
    let (s4, c4) = (4.0 * delta).sin_cos();
    let mut total = 0.0;
    let mut w = 1u32;
    while w < n {
        let end = (w + 256).min(n);
        let mut sin = [0.0f64; 4];
        let mut cos = [0.0f64; 4];
        for j in 0..4 {
            let (s, c) = ((w + j as u32) as f64 * delta).sin_cos();
            sin[j] = s;
            cos[j] = c;
        }
        let mut acc = [0.0f64; 4];
        let mut k = w;
        while k + 4 <= end {
            for j in 0..4 {
                acc[j] += cos[j] / (sin[j] * sin[j]);
                let s = sin[j] * c4 + cos[j] * s4;
                let c = cos[j] * c4 - sin[j] * s4;
                sin[j] = s;
                cos[j] = c;
            }
            k += 4;
        }
        for m in k..end {
            let (s, c) = (m as f64 * delta).sin_cos();
            acc[0] += c / (s * s);
        }
        total += (acc[0] + acc[1]) + (acc[2] + acc[3]);
        w = end;
    }
    total
}

pub fn criterion_1() -> CriterionResult {
    let mut b = Builder::new(1, "sphere headline coefficient and ratio to field theory");
    match sphere::sphere_sce(&SeriesTailPlan::default()) {
        Ok(r) => {
            b.close("total", r.total, SPHERE_TOTAL, SPHERE_TOTAL_TOL);
            b.close("ratio to 0.04617", r.total / SPHERE_FIELD_THEORY_REFERENCE, SPHERE_RATIO, SPHERE_RATIO_TOL);
        }
        Err(e) => b.fail("sphere_sce", e),
    }
    b.finish()
}

pub fn criterion_2() -> CriterionResult {
    let mut b = Builder::new(2, "sphere diameter sum closed form and leading term");
    b.close("diameter sum vs pi^3/1440", sphere::sphere_diameter_sum(), PI.powi(3) / 1440.0, DIAMETER_SUM_TOL);
    // direct summation, independent of the zeta(4) closed form
    let mut direct = CompensatedSum::new();
    for n in (1..=200_000u32).rev() {
        direct.add(sphere::sphere_diameter_term(n));
    }
    b.close("direct diameter sum vs pi^3/1440", direct.value(), PI.powi(3) / 1440.0, DIAMETER_SUM_TOL);
    b.close("n = 1 term vs 1/(16 pi)", sphere::sphere_diameter_term(1), 1.0 / (16.0 * PI), 1e-18);
    b.finish()
}

pub fn criterion_3() -> CriterionResult {
    let mut b = Builder::new(3, "sphere tail robustness and brute-force agreement");
    let mut totals = Vec::new();
    for terms in [30, 50, 70] {
        match SeriesTailPlan::new(terms, 4, 1e-5).and_then(|p| sphere::sphere_sce(&p)) {
            Ok(r) => totals.push((terms, r.total)),
            Err(e) => b.fail(&format!("explicit_terms = {terms}"), e),
        }
    }
    for i in 0..totals.len() {
        for j in i + 1..totals.len() {
            let (na, a) = totals[i];
            let (nb, bv) = totals[j];
            b.close(&format!("total({na}) vs total({nb})"), a, bv, TAIL_AGREEMENT_TOL);
        }
    }
    let brute = brute_force_sphere_total(BRUTE_FORCE_TERMS);
    if let Some(&(_, extrapolated)) = totals.iter().find(|(n, _)| *n == 50) {
        b.close("direct sum N = 10^5 vs extrapolated", brute, extrapolated, TAIL_AGREEMENT_TOL);
    }
    b.finish()
}

pub fn criterion_4() -> CriterionResult {
    let mut b = Builder::new(4, "cylinder headline coefficients for the three alpha treatments");
    let plan = SeriesTailPlan::default();
    let run = |v| cylinder::cylinder_sce(v, &plan).map(|r| r.total);
    match run(AlphaIntegralVariant::SemiclassicalQuadratic) {
        Ok(t) => b.close("quadratic", t, cylinder::quadratic_total_closed_form(), CYLINDER_QUADRATIC_TOL),
        Err(e) => b.fail("quadratic", e),
    }
    match run(AlphaIntegralVariant::ExponentialFit) {
        Ok(t) => b.close("exponential fit", t, CYLINDER_EXPFIT, CYLINDER_EXPFIT_TOL),
        Err(e) => b.fail("exponential fit", e),
    }
    match run(AlphaIntegralVariant::Unbounded) {
        Ok(t) => b.check("unbounded", t == 0.0, format!("got {t:e}, want exactly 0")),
        Err(e) => b.fail("unbounded", e),
    }
    b.finish()
}

pub fn criterion_5() -> CriterionResult {
    let mut b = Builder::new(5, "cylinder identities: csc^2 sum, alternating series, alpha factor");
    let mut worst = (0u32, 0.0f64);
    for n in 1..=CSC2_IDENTITY_MAX_N {
        let rhs = (4.0 * (n as f64).powi(2) - 1.0) / 6.0;
        let rel = ((cylinder::csc2_sum(n) - 0.5) - rhs).abs() / rhs.max(1.0);
        if rel > worst.1 {
            worst = (n, rel);
        }
    }
    b.check(
        "csc2_sum(n) - 1/2 = (4n^2 - 1)/6, n <= 10^4",
        worst.1 <= CSC2_IDENTITY_TOL,
        format!("worst relative deviation {:.3e} at n = {} (<= {CSC2_IDENTITY_TOL:e})", worst.1, worst.0),
    );

    // The window at N = 50 leaves a 1/N^5 residue of a few 1e-9; 400 terms
    // push it below 1e-11.
    match SeriesTailPlan::new(400, 4, 1e-5).and_then(|p| cylinder::cylinder_series(&p)) {
        Ok((v, _)) => b.close("alternating series (400 terms + Richardson)", v, cylinder::series_closed_form(), CYLINDER_SERIES_TOL),
        Err(e) => b.fail("alternating series", e),
    }
    match cylinder::quadratic_alpha_factor_quadrature() {
        Ok(q) => b.close("int (1 - a^2/2)^(-7/2) vs 28 sqrt(2)/15", q, cylinder::quadratic_alpha_factor(), ALPHA_FACTOR_TOL),
        Err(e) => b.fail("alpha factor", e),
    }
    b.finish()
}

pub fn criterion_6() -> CriterionResult {
    let mut b = Builder::new(6, "two-reflection diffractive cylinder term");
    let d = cylinder::cylinder_diffractive_n1();
    b.close("n = 1 term vs -7/(128 pi)", d, -7.0 / (128.0 * PI), DIFFRACTIVE_TOL);
    b.close("n = 1 term vs -0.0174077", d, -0.017_407_7, DIFFRACTIVE_TOL);
    match cylinder::cylinder_sce(AlphaIntegralVariant::SemiclassicalQuadratic, &SeriesTailPlan::default()) {
        Ok(r) => b.check(
            "|n = 1 term| > |total|",
            d.abs() > r.total.abs(),
            format!("|{d:.9}| vs |{:.9}|", r.total),
        ),
        Err(e) => b.fail("total", e),
    }
    b.finish()
}

pub fn criterion_7() -> CriterionResult {
    let mut b = Builder::new(7, "WKB zeros vs exact Bessel zeros (l, n <= 10)");
    for bc in BoundaryCondition::ALL {
        let rows = match spectrum_report(WKB_GRID_MAX, WKB_GRID_MAX, bc) {
            Ok(r) => r,
            Err(e) => {
                b.fail(&format!("{bc:?} report"), e);
                continue;
            }
        };
        let regular = rows.iter().filter(|r| !r.anomaly);
        let worst_all = regular
            .clone()
            .map(|r| (r.rel_error.unwrap_or(f64::INFINITY), r.ell, r.n))
            .fold((0.0, 0, 0), |a, c| if c.0 > a.0 { c } else { a });
        let worst_excited = regular
            .filter(|r| r.n >= 1)
            .map(|r| (r.rel_error.unwrap_or(f64::INFINITY), r.ell, r.n))
            .fold((0.0, 0, 0), |a, c| if c.0 > a.0 { c } else { a });
        b.check(
            format!("{bc:?}: all rel. errors < {WKB_ALL_REL}"),
            worst_all.0 < WKB_ALL_REL,
            format!("worst {:.4} at (l={}, n={})", worst_all.0, worst_all.1, worst_all.2),
        );
        b.check(
            format!("{bc:?}: rel. errors with n >= 1 < {WKB_EXCITED_REL}"),
            worst_excited.0 < WKB_EXCITED_REL,
            format!("worst {:.4} at (l={}, n={})", worst_excited.0, worst_excited.1, worst_excited.2),
        );
        if bc == BoundaryCondition::Neumann {
            let flagged = rows.iter().find(|r| r.ell == 0 && r.n == 0);
            let ok = flagged.is_some_and(|r| r.anomaly && r.x_exact == 0.0 && (r.x_wkb - PI / 4.0).abs() < 1e-14);
            b.check(
                "(0,0,Neumann) flagged: WKB pi/4 vs exact 0",
                ok,
                flagged.map_or("row missing".to_string(), |r| format!("x_wkb {:.9}, x_exact {}", r.x_wkb, r.x_exact)),
            );
        }
    }
    b.finish()
}

/// Tanh-sinh rule on [0, 1], used as the alpha-integral oracle.
fn tanh_sinh_unit<F: Fn(f64) -> f64>(f: F) -> f64 {
    let h = 1.0 / 64.0;
    let mut sum = 0.0;
    for k in -400i32..=400 {
        let t = k as f64 * h;
        let u = 0.5 * PI * t.sinh();
        let weight = 0.5 * PI * t.cosh() / u.cosh().powi(2);
        // x = (1 + tanh u)/2, written so that 1 - x keeps full precision
        let one_minus = 1.0 / (1.0 + (2.0 * u).exp());
        let x = 1.0 - one_minus;
        if weight.is_nan() || weight <= 0.0 || x <= 0.0 || one_minus <= 0.0 {
            continue;
        }
        sum += 0.5 * weight * f(x);
    }
    sum * h
}

pub fn criterion_8() -> CriterionResult {
    let mut b = Builder::new(8, "alpha-integral curves: exact vs Struve form, ordering, 1/x^2 tail");
    let rows = match cylinder::alpha_table(&ALPHA_GRID) {
        Ok(r) => r,
        Err(e) => {
            b.fail("table", e);
            return b.finish();
        }
    };
    let worst = rows.iter().map(|r| ((r.exact - r.struve).abs(), r.x)).fold((0.0, 0.0), |a, c| if c.0 > a.0 { c } else { a });
    b.check(
        "exact quadrature vs Struve combination",
        worst.0 < ALPHA_STRUVE_TOL,
        format!("max |diff| {:.3e} at x = {} (< {ALPHA_STRUVE_TOL:e})", worst.0, worst.1),
    );
    let oracle_worst = rows
        .iter()
        .map(|r| {
            let x = r.x;
            ((tanh_sinh_unit(|a| (-x * ((1.0 - a) * (1.0 + a)).sqrt()).exp()) - r.struve).abs(), x)
        })
        .fold((0.0, 0.0), |a, c| if c.0 > a.0 { c } else { a });
    b.check(
        "tanh-sinh oracle vs Struve combination",
        oracle_worst.0 < ALPHA_STRUVE_TOL,
        format!("max |diff| {:.3e} at x = {}", oracle_worst.0, oracle_worst.1),
    );
    let ordered = rows.iter().all(|r| r.exact >= r.semiclassical);
    b.check("exact >= semiclassical on grid", ordered, format!("{} points", rows.len()));
    match cylinder::alpha_integral(ALPHA_TAIL_X, AlphaIntegralVariant::ExactQuadrature) {
        Ok(v) => {
            let scaled = ALPHA_TAIL_X * ALPHA_TAIL_X * v;
            b.check(
                "x^2 * exact(30) in [0.9, 1.1]",
                (ALPHA_TAIL_RANGE.0..=ALPHA_TAIL_RANGE.1).contains(&scaled),
                format!("{scaled:.9}"),
            );
        }
        Err(e) => b.fail("exact(30)", e),
    }
    b.finish()
}

pub fn criterion_9() -> CriterionResult {
    let mut b = Builder::new(9, "surface correction vanishes");
    for eps in SURFACE_EPS {
        match cylinder::surface_correction_check(eps) {
            Ok(v) => b.check(format!("eps = {eps}"), v == 0.0, format!("got {v:e}")),
            Err(e) => b.fail(&format!("eps = {eps}"), e),
        }
    }
    b.finish()
}

pub fn criterion_10() -> CriterionResult {
    let mut b = Builder::new(10, "property suites");

    // Richardson is exact on tails that are polynomials in 1/N of degree <= order.
    let plan = SeriesTailPlan::default();
    let mut worst = 0.0f64;
    for (limit, coeffs) in [
        (1.0, vec![0.3, -2.0, 0.7, 5.0]),
        (-3.5, vec![1.0]),
        (0.25, vec![0.0, 0.0, 1.0, -1.0]),
        (2.0, vec![-4.0, 0.5]),
    ] {
        let sums: Vec<(usize, f64)> = (20..30)
            .map(|n| {
                let h = 1.0 / n as f64;
                let tail: f64 = coeffs.iter().enumerate().map(|(j, c)| c * h.powi(j as i32 + 1)).sum();
                (n, limit + tail)
            })
            .collect();
        match richardson_limit(&sums, &plan) {
            Ok(ex) => worst = worst.max((ex.limit - limit).abs()),
            Err(e) => b.fail("richardson", e),
        }
    }
    b.check("Richardson exact on polynomial tails", worst < 1e-9, format!("max |error| {worst:.3e}"));

    let mut interlace_ok = true;
    let mut interlace_msg = String::from("l <= 10, k <= 10");
    'outer: for ell in 0..=10u32 {
        for k in 1..=10u32 {
            let z = |l, k| bessel_j_zero(l, k, ZeroKind::Function);
            match (z(ell, k), z(ell + 1, k), z(ell, k + 1)) {
                (Ok(a), Ok(bb), Ok(c)) if a < bb && bb < c => {}
                other => {
                    interlace_ok = false;
                    interlace_msg = format!("violated at l={ell}, k={k}: {other:?}");
                    break 'outer;
                }
            }
        }
    }
    b.check("Bessel-zero interlacing", interlace_ok, interlace_msg);

    let h = 1e-5;
    let mut residual = 0.0f64;
    for i in 0..=500 {
        let z = i as f64 * 0.01;
        let r = (|| -> crate::Result<f64> {
            let d = dawson(z)?;
            let dp = (dawson(z + h)? - dawson(z - h)?) / (2.0 * h);
            Ok((dp + 2.0 * z * d - 1.0).abs())
        })();
        residual = residual.max(r.unwrap_or(f64::INFINITY));
    }
    b.check("Dawson ODE residual on [0, 5]", residual < DAWSON_ODE_TOL, format!("max {residual:.3e}"));

    let mut fresnel_ok = true;
    let mut fresnel_worst = 0.0f64;
    for i in 0..=400 {
        let g = 2.0 + i as f64 * 0.25;
        match fresnel_cs(g) {
            Ok((c, s)) => {
                let bound = 1.0 / (PI * g);
                fresnel_ok &= (c - 0.5).abs() < bound && (s - 0.5).abs() < bound;
                fresnel_worst = fresnel_worst.max((c - 0.5).abs().max((s - 0.5).abs()) * PI * g);
            }
            Err(_) => fresnel_ok = false,
        }
    }
    b.check(
        "Fresnel |C - 1/2|, |S - 1/2| < 1/(pi g) for g in [2, 102]",
        fresnel_ok,
        format!("max pi*g*deviation {fresnel_worst:.6}"),
    );

    let lengths = (|| -> crate::Result<(f64, f64, bool)> {
        let square = orbit_length(Sector::new(4, 1))?;
        let diameter = orbit_length(Sector::new(2, 1))?;
        let mut diam_ok = true;
        for w in 1..=50u32 {
            diam_ok &= orbit_length(Sector::new(2 * w, w))? == 4.0 * w as f64;
        }
        Ok((square, diameter, diam_ok))
    })();
    match lengths {
        Ok((square, diameter, diam_ok)) => {
            b.close("length(4,1) = sqrt(2) length(2,1)", square, SQRT_2 * diameter, 1e-14);
            b.check("length(2w, w) = 4w for w <= 50", diam_ok, "exact equality");
        }
        Err(e) => b.fail("orbit lengths", e),
    }

    b.finish()
}

/// Every criterion, in order.
pub fn run_all() -> Vec<CriterionResult> {
    vec![
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
        criterion_9(),
        criterion_10(),
    ]
}

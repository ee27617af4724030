//! Deterministic summation and Richardson extrapolation of slowly
//! convergent sector sums.

use serde::Serialize;

use crate::error::{Error, Result};

/// How a sector sum is evaluated: explicit terms, then a polynomial-in-1/N
/// extrapolation of the trailing partial sums.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SeriesTailPlan {
    pub explicit_terms: usize,
    pub richardson_order: usize,
    pub tolerance: f64,
}

impl Default for SeriesTailPlan {
    fn default() -> Self {
        Self { explicit_terms: 50, richardson_order: 4, tolerance: 1e-5 }
    }
}

impl SeriesTailPlan {
    pub fn new(explicit_terms: usize, richardson_order: usize, tolerance: f64) -> Result<Self> {
        let plan = Self { explicit_terms, richardson_order, tolerance };
        plan.validate()?;
        Ok(plan)
    }

    pub fn validate(&self) -> Result<()> {
        if self.richardson_order == 0 {
            return Err(Error::InvalidPlan("richardson_order must be at least 1".into()));
        }
        if self.explicit_terms <= self.richardson_order {
            return Err(Error::InvalidPlan(format!(
                "explicit_terms ({}) must exceed richardson_order ({})",
                self.explicit_terms, self.richardson_order
            )));
        }
        if !(self.tolerance > 0.0 && self.tolerance.is_finite()) {
            return Err(Error::InvalidPlan(format!("tolerance must be positive, got {}", self.tolerance)));
        }
        Ok(())
    }

    /// Reject a tail whose error estimate exceeds `tolerance`.
    pub fn check_tail(&self, estimate: f64) -> Result<()> {
        if estimate > self.tolerance {
            return Err(Error::TailNotConverged { estimate, tolerance: self.tolerance });
        }
        Ok(())
    }
}

/// Running Neumaier-compensated sum, in insertion order.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.carry
    }
}

/// Compensated sum of `terms` in the given order.
pub fn compensated_sum(terms: &[f64]) -> Result<f64> {
    let mut acc = CompensatedSum::new();
    for (index, &value) in terms.iter().enumerate() {
        if !value.is_finite() {
            return Err(Error::NonFinite { index, value });
        }
        acc.add(value);
    }
    Ok(acc.value())
}

/// Partial sums `S_N` of `term(n)` for `n = first..=last`, accumulated with
/// compensation. Returns `(N, S_N)` pairs.
pub fn partial_sums<F>(first: usize, last: usize, mut term: F) -> Result<Vec<(usize, f64)>>
where
    F: FnMut(usize) -> f64,
{
    let mut acc = CompensatedSum::new();
    let mut out = Vec::with_capacity(last.saturating_sub(first) + 1);
    for n in first..=last {
        let value = term(n);
        if !value.is_finite() {
            return Err(Error::NonFinite { index: n, value });
        }
        acc.add(value);
        out.push((n, acc.value()));
    }
    Ok(out)
}

/// Outcome of a Richardson extrapolation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Extrapolation {
    pub limit: f64,
    pub error_estimate: f64,
    /// `stages[k]` is the extrapolated value from the newest `k + 1` window nodes.
    pub stages: Vec<f64>,
}

/// Extrapolate partial sums `(N, S_N)` to `N -> infinity`, assuming
/// `S_N = S + a_1/N + ... + a_order/N^order`.
///
/// Uses `order + 1` entries ending at the last one (Neville's scheme in
/// `h = 1/N`), spaced out once there are more than `8 * order` of them. The
/// error estimate is the larger of the last two gaps between consecutive
/// stages; the last gap alone undershoots when a tail coefficient happens
/// to vanish (zeta(2) has no 1/N^4 term).
pub fn richardson_limit(partial_sums: &[(usize, f64)], plan: &SeriesTailPlan) -> Result<Extrapolation> {
    let order = plan.richardson_order;
    if order == 0 {
        return Err(Error::InvalidPlan("richardson_order must be at least 1".into()));
    }
    let needed = order + 1;
    if partial_sums.len() < needed {
        return Err(Error::InsufficientData { needed, got: partial_sums.len() });
    }
    // Adjacent nodes h = 1/N, 1/(N-1), ... become nearly coincident for large
    // N and the extrapolation weights amplify roundoff like N^order; spread
    // the nodes over the last eighth-per-order of the data instead.
    let stride = (partial_sums.len() / (8 * order)).max(1);
    let window: Vec<(usize, f64)> =
        (0..needed).rev().map(|j| partial_sums[partial_sums.len() - 1 - j * stride]).collect();
    let window = &window[..];
    for (i, &(n, s)) in window.iter().enumerate() {
        if n == 0 {
            return Err(Error::Domain("partial-sum index N must be positive".into()));
        }
        if !s.is_finite() {
            return Err(Error::NonFinite { index: i, value: s });
        }
    }

    // Neville tableau built from the newest point backwards so that stage k
    // uses exactly the last k+1 sums.
    let h: Vec<f64> = window.iter().rev().map(|&(n, _)| 1.0 / n as f64).collect();
    let mut column: Vec<f64> = window.iter().rev().map(|&(_, s)| s).collect();
    let mut stages = vec![column[0]];
    for k in 1..needed {
        for i in 0..needed - k {
            let (hi, hk) = (h[i], h[i + k]);
            // skip the division when both entries already agree (converged input)
            column[i] = if column[i] == column[i + 1] {
                column[i]
            } else {
                (hk * column[i] - hi * column[i + 1]) / (hk - hi)
            };
        }
        stages.push(column[0]);
    }

    let limit = stages[order];
    let mut error_estimate = (stages[order] - stages[order - 1]).abs();
    if order >= 2 {
        error_estimate = error_estimate.max((stages[order - 1] - stages[order - 2]).abs());
    }
    Ok(Extrapolation { limit, error_estimate, stages })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    use proptest::prelude::*;

    fn zeta_partials(p: i32, upto: usize) -> Vec<(usize, f64)> {
        partial_sums(1, upto, |n| 1.0 / (n as f64).powi(p)).unwrap()
    }

    #[test]
    fn compensated_cases() {
        assert_eq!(compensated_sum(&[1.0, 1e-16, -1.0]).unwrap(), 1e-16);
        assert_eq!(compensated_sum(&[]).unwrap(), 0.0);
        let tenths = vec![0.1; 1_000_000];
        // exact value of 10^6 * fl(0.1) differs from 1e5 by ~5.5e-12
        assert!((compensated_sum(&tenths).unwrap() - 100_000.0).abs() < 1e-9);
        assert!(matches!(compensated_sum(&[1.0, f64::NAN]), Err(Error::NonFinite { index: 1, .. })));
    }

    #[test]
    fn compensated_is_order_fixed_and_reproducible() {
        let terms: Vec<f64> = (1..5000).map(|k| ((k as f64) * 0.37).sin() / k as f64).collect();
        let a = compensated_sum(&terms).unwrap();
        let b = compensated_sum(&terms).unwrap();
        assert_eq!(a.to_bits(), b.to_bits());
    }

    #[test]
    fn plan_validation() {
        assert!(SeriesTailPlan::default().validate().is_ok());
        assert!(SeriesTailPlan::new(4, 4, 1e-5).is_err());
        assert!(SeriesTailPlan::new(10, 0, 1e-5).is_err());
        assert!(SeriesTailPlan::new(10, 4, 0.0).is_err());
    }

    #[test]
    fn zeta2_window() {
        let sums = zeta_partials(2, 50);
        let ex = richardson_limit(&sums[41..], &SeriesTailPlan::default()).unwrap();
        assert!((ex.limit - PI * PI / 6.0).abs() < 1e-9, "{ex:?}");
    }

    #[test]
    fn zeta4_window() {
        // The first neglected tail term, N^-5/3, leaves about 1.5e-9 at N = 46..50.
        let sums = zeta_partials(4, 50);
        let ex = richardson_limit(&sums[41..], &SeriesTailPlan::default()).unwrap();
        let err = (ex.limit - PI.powi(4) / 90.0).abs();
        assert!(err < 2e-9, "error {err:e}");
        // a longer explicit range brings it well below 1e-10
        let sums = zeta_partials(4, 200);
        let ex = richardson_limit(&sums, &SeriesTailPlan::default()).unwrap();
        assert!((ex.limit - PI.powi(4) / 90.0).abs() < 1e-10);
    }

    #[test]
    fn converged_sequence_is_returned_exactly() {
        let c = 0.123_456_789;
        let sums: Vec<_> = (10..20).map(|n| (n, c)).collect();
        let ex = richardson_limit(&sums, &SeriesTailPlan::default()).unwrap();
        assert_eq!(ex.limit, c);
        assert_eq!(ex.error_estimate, 0.0);
    }

    #[test]
    fn insufficient_data() {
        let sums = vec![(1, 1.0), (2, 1.25)];
        assert!(matches!(
            richardson_limit(&sums, &SeriesTailPlan::default()),
            Err(Error::InsufficientData { needed: 5, got: 2 })
        ));
    }

    #[test]
    fn error_estimate_bounds_true_error_on_zeta_families() {
        let plan = SeriesTailPlan::default();
        for p in [2, 4] {
            let exact = if p == 2 { PI * PI / 6.0 } else { PI.powi(4) / 90.0 };
            let sums = zeta_partials(p, 120);
            for n in 20..=120 {
                let ex = richardson_limit(&sums[..n], &plan).unwrap();
                let err = (ex.limit - exact).abs();
                assert!(err <= ex.error_estimate, "p={p} N={n}: err {err:e} > est {:e}", ex.error_estimate);
            }
        }
    }

    proptest! {
        #[test]
        fn exact_on_polynomial_tails(
            limit in -10.0f64..10.0,
            coeffs in proptest::collection::vec(-5.0f64..5.0, 1..=4),
            start in 5usize..200,
        ) {
            let order = coeffs.len();
            let plan = SeriesTailPlan::new(order + 10, order, 1e-5).unwrap();
            let sums: Vec<_> = (start..start + order + 1)
                .map(|n| {
                    let h = 1.0 / n as f64;
                    let tail: f64 = coeffs.iter().enumerate().map(|(j, c)| c * h.powi(j as i32 + 1)).sum();
                    (n, limit + tail)
                })
                .collect();
            let ex = richardson_limit(&sums, &plan).unwrap();
            let scale = (start as f64).powi(order as i32);
            prop_assert!((ex.limit - limit).abs() < 1e-13 * scale.max(1.0) * 10.0, "{} vs {}", ex.limit, limit);
        }

        #[test]
        fn idempotent_on_converged_input(c in -1e3f64..1e3, start in 1usize..1000) {
            let sums: Vec<_> = (start..start + 6).map(|n| (n, c)).collect();
            let ex = richardson_limit(&sums, &SeriesTailPlan::default()).unwrap();
            prop_assert_eq!(ex.limit, c);
        }
    }
}

use std::f64::consts::PI;

use super::ddouble::DoubleDouble;
use crate::error::{Error, Result};

/// Switch from the ascending series to the asymptotic expansion of I1.
pub const I1_SWITCH: f64 = 20.0;
/// Switch from the double-double power series to the asymptotic expansion
/// in [`struve_combination`].
pub const STRUVE_SWITCH: f64 = 25.0;
/// Upper end of the supported range of [`struve_combination`].
pub const STRUVE_MAX_X: f64 = 60.0;

const I1_OVERFLOW: f64 = 700.0;

// pi/2 to double-double precision
const HALF_PI: DoubleDouble = DoubleDouble { hi: std::f64::consts::FRAC_PI_2, lo: 6.123_233_995_736_766e-17 };

/// Modified Bessel function of the first kind, order one.
pub fn bessel_i1(x: f64) -> Result<f64> {
    if !x.is_finite() || x < 0.0 {
        return Err(Error::Domain(format!("bessel_i1 needs finite x >= 0, got {x}")));
    }
    if x > I1_OVERFLOW {
        return Err(Error::Overflow(format!("I1({x}) exceeds the supported range x <= 700")));
    }
    if x <= I1_SWITCH {
        Ok(i1_series(x))
    } else {
        Ok(i1_asymptotic(x))
    }
}

fn i1_series(x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut term = 0.5 * x;
    let mut sum = term;
    let mut k = 0.0;
    loop {
        k += 1.0;
        term *= q / (k * (k + 1.0));
        sum += term;
        if term <= 1e-17 * sum {
            return sum;
        }
    }
}

fn i1_asymptotic(x: f64) -> f64 {
    // e^x / sqrt(2 pi x) * sum_k (-1)^k a_k(1) / x^k, a_k(nu) built from (4nu^2 - (2j-1)^2)
    let mu = 4.0;
    let mut term = 1.0_f64;
    let mut sum = 1.0;
    for k in 1..60 {
        let odd = (2 * k - 1) as f64;
        let next = -term * (mu - odd * odd) / (k as f64 * 8.0 * x);
        if next.abs() >= term.abs() {
            break;
        }
        term = next;
        sum += term;
        if term.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    // split the exponential so x close to 700 does not overflow early
    let half = (0.5 * x).exp();
    half * (half / (2.0 * PI * x).sqrt()) * sum
}

/// `(pi/2) (H_{-1}(ix) - I_1(x))`, which is real and equals
/// `int_0^1 exp(-x sqrt(1 - a^2)) da`.
///
/// `H_{-1}(ix) = sum_k (x/2)^{2k} / (Gamma(k+3/2) Gamma(k+1/2))`, i.e. the
/// modified Struve function L_{-1}(x). Merged with I1 the result is the
/// alternating entire series `(pi/2) sum_j (-x/2)^j / (Gamma(j/2+1/2) Gamma(j/2+3/2))`,
/// whose terms reach e^x before cancelling to O(1/x^2); it is summed in
/// double-double below [`STRUVE_SWITCH`]. Above it the asymptotic expansion
/// `1/x^2 + 3/x^4 + 45/x^6 + ...` takes over.
pub fn struve_combination(x: f64) -> Result<f64> {
    if !x.is_finite() || !(0.0..=STRUVE_MAX_X).contains(&x) {
        return Err(Error::Domain(format!("struve_combination needs 0 <= x <= 60, got {x}")));
    }
    if x < STRUVE_SWITCH {
        Ok(combination_series(x))
    } else {
        Ok(combination_asymptotic(x))
    }
}

fn combination_series(x: f64) -> f64 {
    let x2 = DoubleDouble::square(x);
    // even powers: (pi/2) L_{-1}(x); odd powers: (pi/2) I_1(x)
    let mut even = DoubleDouble::from_f64(1.0);
    let mut odd = HALF_PI * DoubleDouble::from_f64(0.5 * x);
    let mut even_sum = even;
    let mut odd_sum = odd;
    let mut k = 0.0_f64;
    loop {
        even = (even * x2).div_f64((2.0 * k + 1.0) * (2.0 * k + 3.0));
        odd = (odd * x2).div_f64((2.0 * k + 2.0) * (2.0 * k + 4.0));
        even_sum = even_sum + even;
        odd_sum = odd_sum + odd;
        k += 1.0;
        if k > x && even.hi < 1e-34 * even_sum.hi && odd.hi < 1e-34 * even_sum.hi {
            break;
        }
    }
    (even_sum - odd_sum).to_f64()
}

fn combination_asymptotic(x: f64) -> f64 {
    let inv_x2 = 1.0 / (x * x);
    let mut term = 2.0 * inv_x2;
    let mut sum = term;
    let mut k = 1.0_f64;
    loop {
        let next = term * (4.0 * k * k - 1.0) * inv_x2;
        if next >= term || next < 1e-17 * sum {
            break;
        }
        term = next;
        sum += term;
        k += 1.0;
    }
    0.5 * sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::integrate;

    fn alpha_integral(x: f64) -> f64 {
        integrate(|a: f64| (-x * (1.0 - a * a).sqrt()).exp(), 0.0, 1.0, 1e-15, 1e-14).unwrap().value
    }

    #[test]
    fn i1_small_values() {
        assert_eq!(bessel_i1(0.0).unwrap(), 0.0);
        assert!((bessel_i1(2.0).unwrap() - 1.590_636_854_637_329).abs() < 1e-14);
        assert!((bessel_i1(0.1).unwrap() - 0.050_062_526_047_092_7).abs() < 1e-15);
    }

    #[test]
    fn i1_branches_agree_at_switch() {
        for x in [18.0, 20.0, 22.0, 30.0] {
            let s = i1_series(x);
            let a = i1_asymptotic(x);
            assert!((s / a - 1.0).abs() < 1e-10, "x={x}: {s} vs {a}");
        }
    }

    #[test]
    fn i1_overflow_guard() {
        assert!(bessel_i1(699.0).unwrap().is_finite());
        assert!(matches!(bessel_i1(701.0), Err(Error::Overflow(_))));
        assert!(matches!(bessel_i1(-1.0), Err(Error::Domain(_))));
    }

    #[test]
    fn combination_at_origin() {
        assert_eq!(struve_combination(0.0).unwrap(), 1.0);
    }

    #[test]
    fn combination_matches_quadrature() {
        for x in [0.01, 0.5, 1.0, 5.0, 12.0, 24.9, 25.0, 30.0, 45.0, 60.0] {
            let s = struve_combination(x).unwrap();
            let q = alpha_integral(x);
            assert!((s - q).abs() < 1e-10, "x={x}: {s} vs {q}");
        }
    }

    #[test]
    fn combination_branches_overlap() {
        for x in [22.0, 25.0, 28.0] {
            let s = combination_series(x);
            let a = combination_asymptotic(x);
            assert!((s - a).abs() < 1e-10, "x={x}: {s} vs {a}");
        }
    }

    #[test]
    fn combination_decays_like_inverse_square() {
        let x = 60.0;
        assert!((x * x * struve_combination(x).unwrap() - 1.0).abs() < 1e-3);
        assert!(struve_combination(60.5).is_err());
    }

    #[test]
    fn small_x_slope_is_minus_pi_over_four() {
        let h = 1e-6;
        let slope = (struve_combination(h).unwrap() - 1.0) / h;
        assert!((slope + PI / 4.0).abs() < 1e-5);
    }
}

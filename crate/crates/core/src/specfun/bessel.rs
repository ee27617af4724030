use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Highest integer order accepted by [`bessel_j`].
pub const MAX_ORDER: u32 = 64;
/// Highest order accepted by [`bessel_j_zero`].
pub const MAX_ZERO_ORDER: u32 = 20;
/// Highest zero index accepted by [`bessel_j_zero`].
pub const MAX_ZERO_INDEX: u32 = 50;

const RESCALE_ABOVE: f64 = 1e250;
const RESCALE_BY: f64 = 1e-250;

/// Which function the zero belongs to: `J_n` itself or its derivative `J'_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ZeroKind {
    Function,
    Derivative,
}

/// Bessel function of the first kind `J_order(x)` for integer order.
///
/// Uses Miller's backward recurrence normalised by `J_0 + 2 sum J_2k = 1`,
/// which is stable for every `x` and needs no separate asymptotic branch.
pub fn bessel_j(order: u32, x: f64) -> Result<f64> {
    if order > MAX_ORDER {
        return Err(Error::UnsupportedOrder { order: order as i64, supported: "0..=64" });
    }
    if !x.is_finite() || x < 0.0 {
        return Err(Error::Domain(format!("bessel_j needs finite x >= 0, got {x}")));
    }
    Ok(miller(order, x))
}

fn miller(order: u32, x: f64) -> f64 {
    if x == 0.0 {
        return if order == 0 { 1.0 } else { 0.0 };
    }
    let top = (order as f64).max(x.ceil());
    let mut start = (top + 20.0 + (40.0 * top).sqrt()) as u64;
    start += start % 2;

    let two_over_x = 2.0 / x;
    let mut above = 0.0_f64; // J_{k+1}
    let mut current = 1e-300_f64; // J_k
    let mut wanted = 0.0_f64;
    let mut norm = 0.0_f64;

    for k in (1..=start).rev() {
        let below = k as f64 * two_over_x * current - above;
        above = current;
        current = below;
        // `current` now holds J_{k-1}
        if k - 1 == order as u64 {
            wanted = current;
        }
        if (k - 1) % 2 == 0 && k > 1 {
            norm += 2.0 * current;
        }
        if current.abs() > RESCALE_ABOVE {
            current *= RESCALE_BY;
            above *= RESCALE_BY;
            wanted *= RESCALE_BY;
            norm *= RESCALE_BY;
        }
    }
    norm += current;
    wanted / norm
}

/// Derivative `J'_order(x)`.
pub fn bessel_j_prime(order: u32, x: f64) -> Result<f64> {
    if order == 0 {
        return Ok(-bessel_j(1, x)?);
    }
    Ok(0.5 * (bessel_j(order - 1, x)? - bessel_j(order + 1, x)?))
}

fn second_derivative(order: u32, x: f64, j: f64, jp: f64) -> f64 {
    let nu = order as f64;
    -jp / x - (1.0 - nu * nu / (x * x)) * j
}

/// McMahon's large-zero expansion, used as the Newton seed.
fn mcmahon(order: u32, k: u32, kind: ZeroKind) -> f64 {
    let mu = 4.0 * (order as f64).powi(2);
    match kind {
        ZeroKind::Function => {
            let b = (k as f64 + 0.5 * order as f64 - 0.25) * PI;
            let b8 = 8.0 * b;
            b - (mu - 1.0) / b8 - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * b8.powi(3))
        }
        ZeroKind::Derivative => {
            let b = (k as f64 + 0.5 * order as f64 - 0.75) * PI;
            let b8 = 8.0 * b;
            b - (mu + 3.0) / b8 - 4.0 * (7.0 * mu * mu + 82.0 * mu - 9.0) / (3.0 * b8.powi(3))
        }
    }
}

/// The `k`-th positive zero of `J_order` or `J'_order`.
///
/// For `(order = 0, Derivative)` the zero of `J'_0 = -J_1` at the origin is
/// counted as the first one, so `bessel_j_zero(0, 1, Derivative) == 0`.
pub fn bessel_j_zero(order: u32, k: u32, kind: ZeroKind) -> Result<f64> {
    if order > MAX_ZERO_ORDER {
        return Err(Error::UnsupportedOrder { order: order as i64, supported: "0..=20" });
    }
    if k == 0 || k > MAX_ZERO_INDEX {
        return Err(Error::Domain(format!("zero index must be in 1..=50, got {k}")));
    }
    let mut rank = k;
    if order == 0 && kind == ZeroKind::Derivative {
        if k == 1 {
            return Ok(0.0);
        }
        rank = k - 1;
    }

    let value = |x: f64| -> f64 {
        match kind {
            ZeroKind::Function => miller(order, x),
            ZeroKind::Derivative => bessel_j_prime(order, x).unwrap_or(f64::NAN),
        }
    };

    // Neither J_n nor J'_n (n >= 1) vanishes on (0, n); zeros are more than
    // 2.4 apart, so a 0.25 step sees every sign change.
    let step = 0.25;
    let mut lo = (0.5 * order as f64).max(0.05);
    let mut f_lo = value(lo);
    let mut found = 0;
    let limit = mcmahon(order, rank, kind) + 10.0 + 2.0 * order as f64;
    loop {
        let hi = lo + step;
        let f_hi = value(hi);
        if f_lo == 0.0 || f_lo.signum() != f_hi.signum() {
            found += 1;
            if found == rank {
                return refine(order, kind, lo, hi, mcmahon(order, rank, kind));
            }
        }
        lo = hi;
        f_lo = f_hi;
        if lo > limit {
            return Err(Error::BracketFailure(format!(
                "zero {k} of order {order} not bracketed below x = {limit:.3}"
            )));
        }
    }
}

fn refine(order: u32, kind: ZeroKind, mut lo: f64, mut hi: f64, seed: f64) -> Result<f64> {
    let eval = |x: f64| -> (f64, f64) {
        let j = miller(order, x);
        let jp = bessel_j_prime(order, x).unwrap_or(f64::NAN);
        match kind {
            ZeroKind::Function => (j, jp),
            ZeroKind::Derivative => (jp, second_derivative(order, x, j, jp)),
        }
    };
    let f_lo_sign = eval(lo).0.signum();
    let mut x = if seed > lo && seed < hi { seed } else { 0.5 * (lo + hi) };

    for _ in 0..200 {
        let (f, df) = eval(x);
        if f == 0.0 {
            return Ok(x);
        }
        if f.signum() == f_lo_sign {
            lo = x;
        } else {
            hi = x;
        }
        let newton = x - f / df;
        let next = if newton > lo && newton < hi && df != 0.0 { newton } else { 0.5 * (lo + hi) };
        if (next - x).abs() <= 1e-15 * x.abs().max(1.0) || hi - lo <= 4.0 * f64::EPSILON * hi {
            return Ok(next);
        }
        x = next;
    }
    Err(Error::BracketFailure(format!("refinement stalled in [{lo}, {hi}]")))
}

#[cfg(test)]
mod tests {
    use super::*;

    // Periodic trapezoid rule for J_n(x) = (1/pi) int_0^pi cos(n t - x sin t) dt;
    // spectrally accurate with enough nodes.
    fn bessel_integral(order: u32, x: f64) -> f64 {
        let m = 2048;
        let h = PI / m as f64;
        let mut s = 0.5 * (1.0 + (order as f64 * PI).cos());
        for i in 1..m {
            let t = i as f64 * h;
            s += (order as f64 * t - x * t.sin()).cos();
        }
        s * h / PI
    }

    #[test]
    fn values_at_origin() {
        assert_eq!(bessel_j(0, 0.0).unwrap(), 1.0);
        assert_eq!(bessel_j(1, 0.0).unwrap(), 0.0);
        assert_eq!(bessel_j(64, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn matches_integral_representation() {
        for &order in &[0, 1, 2, 5, 13, 20, 40, 64] {
            for &x in &[0.01, 0.7, 2.5, 9.0, 21.3, 48.0, 77.7, 100.0] {
                let got = bessel_j(order, x).unwrap();
                let want = bessel_integral(order, x);
                let scale = want.abs().max(1e-3 * (2.0 / (PI * x)).sqrt().min(1.0));
                assert!(
                    (got - want).abs() <= 1e-12 * scale.max(1e-300) + 1e-15,
                    "J_{order}({x}): {got} vs {want}"
                );
            }
        }
    }

    #[test]
    fn tiny_argument_high_order_does_not_overflow() {
        let v = bessel_j(64, 1e-3).unwrap();
        assert!(v.is_finite() && v >= 0.0);
        let j10 = bessel_j(10, 1e-2).unwrap();
        // leading series term (x/2)^10 / 10!
        let lead = (5e-3_f64).powi(10) / 3_628_800.0;
        assert!((j10 / lead - 1.0).abs() < 1e-5);
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(bessel_j(0, -1.0), Err(Error::Domain(_))));
        assert!(matches!(bessel_j(65, 1.0), Err(Error::UnsupportedOrder { .. })));
        assert!(bessel_j(0, f64::NAN).is_err());
        assert!(bessel_j_zero(21, 1, ZeroKind::Function).is_err());
        assert!(bessel_j_zero(0, 0, ZeroKind::Function).is_err());
        assert!(bessel_j_zero(0, 51, ZeroKind::Function).is_err());
    }

    #[test]
    fn first_zeros() {
        let j01 = bessel_j_zero(0, 1, ZeroKind::Function).unwrap();
        assert!((j01 - 2.404_825_557_695_773).abs() < 1e-12);
        let j11 = bessel_j_zero(1, 1, ZeroKind::Function).unwrap();
        assert!((j11 - 3.831_705_970_207_512).abs() < 1e-12);
        assert_eq!(bessel_j_zero(0, 1, ZeroKind::Derivative).unwrap(), 0.0);
        let jp02 = bessel_j_zero(0, 2, ZeroKind::Derivative).unwrap();
        assert!((jp02 - j11).abs() < 1e-12);
        let jp11 = bessel_j_zero(1, 1, ZeroKind::Derivative).unwrap();
        assert!((jp11 - 1.841_183_781_340_659).abs() < 1e-12);
        let j20_1 = bessel_j_zero(20, 1, ZeroKind::Function).unwrap();
        assert!((j20_1 - 25.417_140_814_072_73).abs() < 1e-9);
    }

    #[test]
    fn zeros_are_roots_and_counted_in_order() {
        for order in [0, 3, 11, 20] {
            let mut previous = 0.0;
            for k in [1, 2, 3, 10, 25, 50] {
                let z = bessel_j_zero(order, k, ZeroKind::Function).unwrap();
                assert!(z > previous);
                assert!(bessel_j(order, z).unwrap().abs() < 1e-13);
                previous = z;
            }
        }
        // 50th zero of J_0 sits near (50 - 1/4) pi
        let z = bessel_j_zero(0, 50, ZeroKind::Function).unwrap();
        assert!((z - 49.75 * PI).abs() < 1e-2);
    }
}

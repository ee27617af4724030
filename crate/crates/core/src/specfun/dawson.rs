use crate::error::{Error, Result};

/// Below this argument the exp-weighted positive series is used; above it
/// the continued fraction.
pub const DAWSON_SWITCH: f64 = 5.0;

/// Dawson's integral `D(z) = exp(-z^2) int_0^z exp(t^2) dt`. Odd in `z`.
pub fn dawson(z: f64) -> Result<f64> {
    if !z.is_finite() {
        return Err(Error::Domain(format!("dawson needs a finite argument, got {z}")));
    }
    let a = z.abs();
    let d = if a < DAWSON_SWITCH { series(a) } else { continued_fraction(a) };
    Ok(d.copysign(z))
}

// exp(-z^2) * sum_k z^(2k+1) / (k! (2k+1)); all terms positive.
fn series(z: f64) -> f64 {
    let z2 = z * z;
    let mut power = z; // z^(2k+1) / k!
    let mut sum = z;
    let mut k = 0.0_f64;
    loop {
        k += 1.0;
        power *= z2 / k;
        let term = power / (2.0 * k + 1.0);
        sum += term;
        if term <= 1e-17 * sum {
            break;
        }
    }
    (-z2).exp() * sum
}

// D(z) = z / (1 + 2z^2 - 4z^2 / (3 + 2z^2 - 8z^2 / (5 + 2z^2 - ...))),
// evaluated bottom-up at a fixed depth.
fn continued_fraction(z: f64) -> f64 {
    let z2 = z * z;
    let depth = 60;
    let mut tail = 0.0_f64;
    for k in (1..=depth).rev() {
        let partial = 4.0 * k as f64 * z2;
        tail = partial / ((2 * k + 1) as f64 + 2.0 * z2 - tail);
    }
    z / (1.0 + 2.0 * z2 - tail)
}

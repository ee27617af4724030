use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

const SERIES_LIMIT: f64 = 1.5;

/// Fresnel integrals `(C(g), S(g)) = (int_0^g cos(pi t^2/2) dt, int_0^g sin(pi t^2/2) dt)`.
///
/// Power series below `|g| = 1.5`, Lentz continued fraction for the
/// complementary error function above.
pub fn fresnel_cs(gamma: f64) -> Result<(f64, f64)> {
    if !gamma.is_finite() {
        return Err(Error::Domain(format!("fresnel_cs needs a finite argument, got {gamma}")));
    }
    let t = gamma.abs();
    let (c, s) = if t < SERIES_LIMIT { series(t) } else { continued_fraction(t) };
    Ok((c.copysign(gamma), s.copysign(gamma)))
}

fn series(t: f64) -> (f64, f64) {
    if t == 0.0 {
        return (0.0, 0.0);
    }
    let arg = 0.5 * PI * t * t;
    let mut c = t;
    let mut s = 0.0;
    let mut fact = 1.0; // t * arg^k / k!
    let mut sign = 1.0;
    let mut k = 1;
    loop {
        fact *= arg / k as f64;
        let term = t * fact / (2 * k + 1) as f64;
        if k % 2 == 1 {
            s += sign * term;
        } else {
            sign = -sign;
            c += sign * term;
        }
        if term < 1e-17 * c.abs().max(s.abs()) {
            return (c, s);
        }
        k += 1;
    }
}

fn continued_fraction(t: f64) -> (f64, f64) {
    let tiny = 1e-300;
    let pix2 = PI * t * t;
    let mut b = Complex64::new(1.0, -pix2);
    let mut cc = Complex64::new(1.0 / tiny, 0.0);
    let mut d = b.inv();
    let mut h = d;
    let mut n = -1.0_f64;
    for _ in 2..400 {
        n += 2.0;
        let a = -n * (n + 1.0);
        b += 4.0;
        d = (d * a + b).inv();
        cc = b + a / cc;
        let del = cc * d;
        h *= del;
        if (del.re - 1.0).abs() + del.im.abs() < 1e-16 {
            break;
        }
    }
    h *= Complex64::new(t, -t);
    let phase = Complex64::from_polar(1.0, 0.5 * pix2);
    let cs = Complex64::new(0.5, 0.5) * (Complex64::new(1.0, 0.0) - phase * h);
    (cs.re, cs.im)
}

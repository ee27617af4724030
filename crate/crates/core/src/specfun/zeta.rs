use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// A Riemann zeta value at a small positive integer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZetaConstant {
    pub s: u32,
    pub value: f64,
}

impl ZetaConstant {
    pub fn new(s: u32) -> Result<Self> {
        Ok(Self { s, value: zeta(s)? })
    }
}

/// `zeta(s)` for `s` in {2, 3, 4}.
pub fn zeta(s: u32) -> Result<f64> {
    match s {
        2 => Ok(PI * PI / 6.0),
        3 => Ok(*ZETA3.get_or_init(apery)),
        4 => Ok(PI.powi(4) / 90.0),
        _ => Err(Error::UnsupportedOrder { order: s as i64, supported: "{2, 3, 4}" }),
    }
}

static ZETA3: OnceLock<f64> = OnceLock::new();

// zeta(3) = (5/2) sum_{k>=1} (-1)^(k+1) / (k^3 binom(2k, k)); each term is
// about a quarter of the previous one.
fn apery() -> f64 {
    let mut central = 1.0_f64; // binom(2k, k)
    let mut terms = Vec::with_capacity(30);
    for k in 1..=30u32 {
        let kf = k as f64;
        central *= (2.0 * kf - 1.0) * 2.0 / kf;
        let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
        terms.push(sign / (kf * kf * kf * central));
    }
    // smallest first
    2.5 * terms.iter().rev().sum::<f64>()
}

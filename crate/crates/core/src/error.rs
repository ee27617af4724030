use thiserror::Error;

/// Errors produced by the numerical kernels and energy assemblies.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("argument out of domain: {0}")]
    Domain(String),

    #[error("unsupported order {order} (supported: {supported})")]
    UnsupportedOrder { order: i64, supported: &'static str },

    #[error("root bracketing failed: {0}")]
    BracketFailure(String),

    #[error("overflow: {0}")]
    Overflow(String),

    #[error("sector (n={n}, w={w}) has no stationary point")]
    NoStationaryPoint { n: u32, w: u32 },

    #[error("action curvature diverges for sector (n={n}, w=0)")]
    DivergentCurvature { n: u32 },

    #[error("non-finite term at index {index}: {value}")]
    NonFinite { index: usize, value: f64 },

    #[error("insufficient data: need {needed} partial sums, got {got}")]
    InsufficientData { needed: usize, got: usize },

    #[error("series tail not converged: estimate {estimate:e} exceeds tolerance {tolerance:e}")]
    TailNotConverged { estimate: f64, tolerance: f64 },

    #[error("invalid series plan: {0}")]
    InvalidPlan(String),

    #[error("alpha-integral variant `{0}` has no closed-form sector reduction")]
    UnsupportedVariant(&'static str),

    #[error("quadrature did not converge: {0}")]
    Quadrature(String),
}

pub type Result<T> = std::result::Result<T, Error>;

//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("separation must be positive, got {0}")]
    NonPositiveSeparation(f64),

    #[error("proper acceleration must be nonnegative, got {0}")]
    NegativeAcceleration(f64),

    #[error("speed of light must be positive, got {0}")]
    NonPositiveSpeedOfLight(f64),

    #[error("proper-time worldline forms are undefined at a = 0; use the lab-time forms")]
    DegenerateAcceleration,

    #[error("imaginary frequency must be nonnegative, got {0}")]
    NegativeFrequency(f64),

    #[error("negative wavenumber {0}")]
    NegativeWavenumber(f64),

    #[error("polarizability pole on the real axis at k0 = {k0}")]
    ResonancePole { k0: f64 },

    #[error("static polarizability must be positive, got {0}")]
    NonPositivePolarizability(f64),

    #[error("resonance wavenumber must be positive, got {0}")]
    NonPositiveResonance(f64),

    #[error("bad polarizability table: {0}")]
    InvalidTable(String),

    #[error("negative time {0}; energies are reported for t >= 0")]
    NegativeTime(f64),

    #[error("nonpositive wavenumber {0}; field modes need k > 0")]
    NonPositiveWavenumber(f64),

    #[error("direction must be a unit vector, |v| = {0}")]
    NonUnitVector(f64),

    #[error("boost speed must satisfy |beta| < 1, got {0}")]
    SuperluminalBoost(f64),

    #[error("field sample is not in the laboratory frame")]
    NotLabFrame,

    #[error(
        "quadrature did not converge: error estimate {error_estimate:e} after {evaluations} evaluations"
    )]
    QuadratureNonConvergence {
        error_estimate: f64,
        evaluations: usize,
    },

    #[error("oscillatory integral does not stabilize over the regulator sequence")]
    RegulatorDivergence,

    #[error("regulator sequence must be positive and strictly decreasing")]
    BadRegulatorSequence,

    #[error("time average needs at least {needed} samples over this window, got {got}")]
    InsufficientSampling { needed: usize, got: usize },

    #[error("{0}")]
    Unsupported(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

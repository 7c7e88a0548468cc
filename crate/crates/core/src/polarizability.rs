//! Dynamic polarizability models, evaluable on the real wavenumber axis and
//! on the imaginary frequency axis (where dispersion integrals converge).
//!
//! Three variants:
//! - `Static`: α ≡ α₀. Reproduces the far-zone closed forms exactly but its
//!   imaginary-axis integral ∫α² du diverges, so near-zone formulas reject it.
//! - `Lorentz`: single-resonance model α(iu) = α₀/(1 + u²/k₀²) and
//!   α(k) = α₀/(1 − k²/k₀²) with a hard pole at k = k₀. The imaginary-axis
//!   square integrates to πα₀²k₀/4, the oracle used throughout the tests.
//! - `Tabulated`: monotone cubic interpolation of (u, α) samples, constant
//!   below the grid, u⁻² decay above it.

use crate::error::{Error, Result};
use std::path::Path;

#[derive(Debug, Clone, PartialEq)]
pub enum PolarizabilityModel {
    Static { alpha0: f64 },
    Lorentz { alpha0: f64, k0: f64 },
    Tabulated(Table),
}

impl PolarizabilityModel {
    pub fn static_model(alpha0: f64) -> Result<Self> {
        if !(alpha0 > 0.0) {
            return Err(Error::NonPositivePolarizability(alpha0));
        }
        Ok(Self::Static { alpha0 })
    }

    pub fn lorentz(alpha0: f64, k0: f64) -> Result<Self> {
        if !(alpha0 > 0.0) {
            return Err(Error::NonPositivePolarizability(alpha0));
        }
        if !(k0 > 0.0) {
            return Err(Error::NonPositiveResonance(k0));
        }
        Ok(Self::Lorentz { alpha0, k0 })
    }

    pub fn tabulated(points: &[(f64, f64)]) -> Result<Self> {
        Ok(Self::Tabulated(Table::new(points)?))
    }

    /// Parse the two-column CSV layout `u_cm^-1,alpha_cm^3` (header required).
    pub fn from_csv_str(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::InvalidTable("empty file".into()))?;
        let cols: Vec<&str> = header.split(',').map(str::trim).collect();
        if cols != ["u_cm^-1", "alpha_cm^3"] {
            return Err(Error::InvalidTable(format!(
                "expected header 'u_cm^-1,alpha_cm^3', got '{header}'"
            )));
        }
        let mut points = Vec::new();
        for (i, line) in lines.enumerate() {
            let mut parts = line.split(',').map(str::trim);
            let (u, alpha) = match (parts.next(), parts.next(), parts.next()) {
                (Some(u), Some(a), None) => (u, a),
                _ => {
                    return Err(Error::InvalidTable(format!(
                        "row {}: expected two columns, got '{line}'",
                        i + 2
                    )))
                }
            };
            let u: f64 = u.parse().map_err(|_| {
                Error::InvalidTable(format!("row {}: bad number '{u}'", i + 2))
            })?;
            let alpha: f64 = alpha.parse().map_err(|_| {
                Error::InvalidTable(format!("row {}: bad number '{alpha}'", i + 2))
            })?;
            points.push((u, alpha));
        }
        Self::tabulated(&points)
    }

    pub fn from_csv_path<P: AsRef<Path>>(path: P) -> Result<Self> {
        Self::from_csv_str(&std::fs::read_to_string(path)?)
    }

    /// α evaluated at imaginary frequency iu, u ≥ 0.
    pub fn eval_imag(&self, u: f64) -> Result<f64> {
        if u < 0.0 {
            return Err(Error::NegativeFrequency(u));
        }
        Ok(match self {
            Self::Static { alpha0 } => *alpha0,
            Self::Lorentz { alpha0, k0 } => {
                let r = u / k0;
                alpha0 / (1.0 + r * r)
            }
            Self::Tabulated(t) => t.eval(u),
        })
    }

    /// α on the real wavenumber axis, k ≥ 0. Undamped: the Lorentz variant
    /// has a hard pole at k₀ and errors there; tabulated models live on the
    /// imaginary axis only and are rejected.
    pub fn eval_real(&self, k: f64) -> Result<f64> {
        if k < 0.0 {
            return Err(Error::NegativeWavenumber(k));
        }
        match self {
            Self::Static { alpha0 } => Ok(*alpha0),
            Self::Lorentz { alpha0, k0 } => {
                if k == *k0 {
                    return Err(Error::ResonancePole { k0: *k0 });
                }
                let r = k / k0;
                Ok(alpha0 / (1.0 - r * r))
            }
            Self::Tabulated(_) => Err(Error::Unsupported(
                "tabulated polarizabilities evaluate on the imaginary axis only".into(),
            )),
        }
    }

    /// Static value α(0).
    pub fn alpha0(&self) -> f64 {
        match self {
            Self::Static { alpha0 } | Self::Lorentz { alpha0, .. } => *alpha0,
            Self::Tabulated(t) => t.eval(0.0),
        }
    }

    /// Characteristic imaginary-frequency scale over which α decays, if the
    /// model has one. `None` for the static model.
    pub fn frequency_scale(&self) -> Option<f64> {
        match self {
            Self::Static { .. } => None,
            Self::Lorentz { k0, .. } => Some(*k0),
            Self::Tabulated(t) => {
                let mid = t.u[t.u.len() / 2];
                Some(if mid > 0.0 { mid } else { *t.u.last().unwrap() })
            }
        }
    }
}

/// Strictly increasing (u, α) samples with precomputed monotone cubic slopes.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    u: Vec<f64>,
    alpha: Vec<f64>,
    slope: Vec<f64>,
}

impl Table {
    fn new(points: &[(f64, f64)]) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::InvalidTable("need at least two rows".into()));
        }
        let u: Vec<f64> = points.iter().map(|p| p.0).collect();
        let alpha: Vec<f64> = points.iter().map(|p| p.1).collect();
        if u[0] < 0.0 {
            return Err(Error::InvalidTable("u must be nonnegative".into()));
        }
        if u.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidTable("u must be strictly increasing".into()));
        }
        if alpha.iter().any(|&a| !(a >= 0.0) || !a.is_finite()) {
            return Err(Error::InvalidTable(
                "alpha values must be finite and nonnegative".into(),
            ));
        }
        let slope = pchip_slopes(&u, &alpha);
        Ok(Self { u, alpha, slope })
    }

    fn eval(&self, x: f64) -> f64 {
        let n = self.u.len();
        if x <= self.u[0] {
            return self.alpha[0];
        }
        if x >= self.u[n - 1] {
            // power-law tail matched to the last sample
            let r = self.u[n - 1] / x;
            return self.alpha[n - 1] * r * r;
        }
        let i = self.u.partition_point(|&g| g <= x) - 1;
        let h = self.u[i + 1] - self.u[i];
        let s = (x - self.u[i]) / h;
        let (y0, y1) = (self.alpha[i], self.alpha[i + 1]);
        let (m0, m1) = (self.slope[i] * h, self.slope[i + 1] * h);
        let s2 = s * s;
        let s3 = s2 * s;
        y0 * (2.0 * s3 - 3.0 * s2 + 1.0)
            + m0 * (s3 - 2.0 * s2 + s)
            + y1 * (-2.0 * s3 + 3.0 * s2)
            + m1 * (s3 - s2)
    }
}

/// Fritsch-Carlson slopes: shape-preserving, so interpolation of monotone
/// data stays monotone and values never overshoot the samples.
fn pchip_slopes(x: &[f64], y: &[f64]) -> Vec<f64> {
    let n = x.len();
    let h: Vec<f64> = x.windows(2).map(|w| w[1] - w[0]).collect();
    let delta: Vec<f64> = (0..n - 1).map(|i| (y[i + 1] - y[i]) / h[i]).collect();
    let mut m = vec![0.0; n];
    if n == 2 {
        m[0] = delta[0];
        m[1] = delta[0];
        return m;
    }
    for i in 1..n - 1 {
        if delta[i - 1] * delta[i] > 0.0 {
            let w1 = 2.0 * h[i] + h[i - 1];
            let w2 = h[i] + 2.0 * h[i - 1];
            m[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
        }
    }
    m[0] = endpoint_slope(h[0], h[1], delta[0], delta[1]);
    m[n - 1] = endpoint_slope(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
    m
}

fn endpoint_slope(h0: f64, h1: f64, d0: f64, d1: f64) -> f64 {
    let mut m = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if m * d0 <= 0.0 {
        m = 0.0;
    } else if d0 * d1 < 0.0 && m.abs() > 3.0 * d0.abs() {
        m = 3.0 * d0;
    }
    m
}

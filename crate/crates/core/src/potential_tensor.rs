//! Per-mode potential tensor seen in the co-moving frame of two
//! uniformly accelerating atoms, with the separation along z and the
//! motion along x.
//!
//! The tensor couples the induced dipole of one atom to the field of
//! the other for a single field mode of wavenumber k. Three views are
//! provided: the instantaneous tensor, its numerical time average over
//! many oscillation periods, and the closed-form average used by the
//! energy integrals. The closed form keeps the leading secular terms
//! in t, so the numeric average approaches it as omega*t grows at
//! fixed a*t/c.
//!
//! Correction note: the closed-form average is implemented with the
//! transverse-projector term as -S (kR)^2 cos(kR). Reading that term
//! with +sin(kR), which one printed source suggests, fails both the
//! derivation-independent numeric average (by tens of percent) and the
//! contraction identity against the rest-atom potential, so the cosine
//! form is used throughout.

use crate::error::{Error, Result};
use crate::kinematics::Trajectory;
use crate::linalg::{Mat3, ZERO_MAT};
use crate::quadrature::neumaier_sum;

/// Diagonal of the near-field tensor for a separation along z.
const T_DIAG: [f64; 3] = [1.0, 1.0, -2.0];
/// Diagonal of the transverse projector for a separation along z.
const S_DIAG: [f64; 3] = [1.0, 1.0, 0.0];

/// One field mode interacting with one atom pair: wavenumber, fixed
/// separation, elapsed lab time and the shared worldline.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeContext {
    /// Mode wavenumber in cm^-1.
    pub k: f64,
    /// Interatomic separation in cm, along z.
    pub r: f64,
    /// Lab time in s.
    pub t: f64,
    pub traj: Trajectory,
}

impl ModeContext {
    pub fn new(k: f64, r: f64, t: f64, traj: Trajectory) -> Result<Self> {
        if k <= 0.0 {
            return Err(Error::NonPositiveWavenumber(k));
        }
        if r <= 0.0 {
            return Err(Error::NonPositiveSeparation(r));
        }
        if t < 0.0 {
            return Err(Error::NegativeTime(t));
        }
        Ok(Self { k, r, t, traj })
    }

    /// Angular frequency omega = c k.
    pub fn omega(&self) -> f64 {
        self.traj.c * self.k
    }

    /// Dimensionless phase omega * t.
    pub fn omega_t(&self) -> f64 {
        self.omega() * self.t
    }
}

/// 3x3 coupling tensor in units of cm^-3.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialTensor {
    pub entries: Mat3,
}

/// Acceleration-only part of the closed-form time average. Every
/// entry carries at least one power of the acceleration, and the
/// (1,1) entry is exactly zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZTensor {
    pub entries: Mat3,
}

/// The two oscillation products A = cos(wt) cos(w(t - R/c)) and
/// B = cos(wt) sin(w(t - R/c)) evaluated at the context time.
pub fn mode_functions(ctx: &ModeContext) -> (f64, f64) {
    mode_functions_at(ctx, ctx.t)
}

fn mode_functions_at(ctx: &ModeContext, t: f64) -> (f64, f64) {
    let w = ctx.omega();
    let retarded = w * (t - ctx.r / ctx.traj.c);
    let carrier = (w * t).cos();
    (carrier * retarded.cos(), carrier * retarded.sin())
}

/// Instantaneous co-moving potential tensor at the context time. It
/// carries the mode-exchange factor 2 and the nonrelativistic boost
/// factors beta = a t / c and gamma = 1 + (a t / c)^2 / 2.
pub fn v_tilde(ctx: &ModeContext) -> PotentialTensor {
    PotentialTensor {
        entries: v_tilde_at(ctx, ctx.t),
    }
}

fn v_tilde_at(ctx: &ModeContext, t: f64) -> Mat3 {
    let c = ctx.traj.c;
    let a = ctx.traj.a;
    let r = ctx.r;
    let w = ctx.omega();
    let beta = a * t / c;
    let gamma = 1.0 + 0.5 * beta * beta;
    let (fa, fb) = mode_functions_at(ctx, t);
    let pref = -2.0 * gamma / r;
    // shared two-term bracket, multiplied row-wise by the T diagonal
    let tbr = (1.0 / r) * (-fa / r + (w / c) * fb);
    let mut v = ZERO_MAT;
    // x row: T_11 = 1, S_11 = 1; the direction factor on the explicit
    // acceleration term is R_hat . z = 1 only through the (1,3) slot
    v[0][0] = pref * (tbr + (w * w / (c * c)) * fa);
    v[0][2] = pref
        * (a / (c * c))
        * ((1.0 / r + w * w * t / c) * fa + (w * t / r + 2.0 * w / c) * fb);
    // y row: T_22 = 1, S_22 = 1; the antisymmetric contraction picks
    // up T_33 = -2, giving the factor 2 on the velocity term
    let acc2 = (a / r) * (-(1.0 / c + t / r) * fa + (t * w / c) * fb);
    v[1][1] = pref * (tbr + (w * w / (c * c)) * fa - (beta / c) * 2.0 * acc2);
    // z row: T_33 = -2, S_33 = 0; the velocity terms come from the
    // j = 1 direction slot and the j = 3 tensor slots
    v[2][0] = pref * (beta / c) * w * ((w / c) * fa + fb / r);
    let acc3 = acc2 + (a * w / (c * c)) * (w * t * fa + 2.0 * fb);
    v[2][2] = pref * (-2.0 * tbr + (beta / c) * acc3);
    v
}

/// Acceleration-dependent part of the closed-form average.
pub fn z_tensor(ctx: &ModeContext) -> ZTensor {
    let c = ctx.traj.c;
    let a = ctx.traj.a;
    let r = ctx.r;
    let k = ctx.k;
    let t = ctx.t;
    let x = k * r;
    let (cx, sx) = (x.cos(), x.sin());
    let a2 = a * a;
    let c2 = c * c;
    let c3 = c2 * c;
    let p = (a2 * t / (2.0 * c3 * r * r)) * cx
        + (a2 * t * t / (3.0 * c2 * r * r * r)) * cx
        + (a2 * t * t / (3.0 * c2 * r * r)) * k * sx;
    let q = (a2 * t / (c3 * r)) * k * sx - (a2 * t * t / (3.0 * c2 * r)) * k * k * cx;
    let mut z = ZERO_MAT;
    z[1][1] = -2.0 * p;
    z[2][2] = p + q;
    // Secular first-order-in-a averages of the off-diagonal rows. The
    // diagonal entries alone miss these, and the numeric average does
    // not, so they are kept for the closed/numeric comparison.
    z[0][2] = -(a / (c2 * r * r)) * cx - (a * k * k * t / (2.0 * c * r)) * cx
        + (a * k * t / (2.0 * c * r * r)) * sx
        + (2.0 * a * k / (c2 * r)) * sx;
    z[2][0] = -(a * k * k * t / (2.0 * c * r)) * cx + (a * k * t / (2.0 * c * r * r)) * sx;
    ZTensor { entries: z }
}

/// Closed-form long-time average of [`v_tilde`], keeping the leading
/// secular terms: a common (1 + a^2 t^2 / 6 c^2) dressing of the
/// rest-atom tensor plus the acceleration tensor from [`z_tensor`].
pub fn time_average_closed(ctx: &ModeContext) -> PotentialTensor {
    let r = ctx.r;
    let x = ctx.k * r;
    let (cx, sx) = (x.cos(), x.sin());
    let beta_t = ctx.traj.a * ctx.t / ctx.traj.c;
    let dressing = 1.0 + beta_t * beta_t / 6.0;
    let r3 = r * r * r;
    let mut entries = z_tensor(ctx).entries;
    for j in 0..3 {
        entries[j][j] +=
            dressing / r3 * (T_DIAG[j] * (cx + x * sx) - S_DIAG[j] * x * x * cx);
    }
    PotentialTensor { entries }
}

/// Average of [`v_tilde`] over [0, t] by composite Simpson quadrature
/// on a uniform grid. `samples` counts grid intervals and must cover
/// at least 40 points per oscillation period.
pub fn time_average_numeric(
    ctx: &ModeContext,
    t: f64,
    samples: usize,
) -> Result<PotentialTensor> {
    if t <= 0.0 {
        return Err(Error::Unsupported(
            "time average needs a positive window".into(),
        ));
    }
    let periods = ctx.omega() * t / std::f64::consts::TAU;
    let needed = (40.0 * periods).ceil() as usize;
    if samples < needed {
        return Err(Error::InsufficientSampling {
            needed,
            got: samples,
        });
    }
    let n = samples + samples % 2;
    let h = t / n as f64;
    let mut entries = ZERO_MAT;
    for i in 0..3 {
        for j in 0..3 {
            entries[i][j] = neumaier_sum((0..=n).map(|s| {
                let weight = if s == 0 || s == n {
                    1.0
                } else if s % 2 == 1 {
                    4.0
                } else {
                    2.0
                };
                weight * v_tilde_at(ctx, s as f64 * h)[i][j]
            })) * h
                / (3.0 * t);
        }
    }
    Ok(PotentialTensor { entries })
}

//! Electric and magnetic fields of an oscillating point dipole in
//! uniform acceleration, split into polarization and Roentgen parts,
//! plus the Lorentz boost of a field sample to the co-moving frame.
//!
//! All formulas are written in Gaussian units. Callers supply the
//! retarded time; no retardation equation is solved here. The source
//! moves along the x axis, so the velocity, acceleration and jerk
//! inputs are scalars multiplying the unit vector [1, 0, 0].

use crate::error::{Error, Result};
use crate::linalg::{add, cross, dot, mat_vec, outer, scale, Mat3, Vec3, IDENTITY};

/// Reference frame a field sample is expressed in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Frame {
    Lab,
    Comoving,
}

/// Electric and magnetic field vectors at one spacetime point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldSample {
    /// Electric field in statV/cm.
    pub e: Vec3,
    /// Magnetic field in G.
    pub b: Vec3,
    pub frame: Frame,
}

/// Harmonically oscillating dipole moment, mu(t) = mu0 cos(omega t).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DipoleHistory {
    /// Amplitude in statC cm.
    pub mu0: Vec3,
    /// Angular frequency in rad/s.
    pub omega: f64,
}

impl DipoleHistory {
    pub fn new(mu0: Vec3, omega: f64) -> Result<Self> {
        if omega < 0.0 {
            return Err(Error::NegativeFrequency(omega));
        }
        Ok(Self { mu0, omega })
    }

    pub fn mu(&self, t: f64) -> Vec3 {
        scale(self.mu0, (self.omega * t).cos())
    }

    pub fn mu_dot(&self, t: f64) -> Vec3 {
        scale(self.mu0, -self.omega * (self.omega * t).sin())
    }

    pub fn mu_ddot(&self, t: f64) -> Vec3 {
        scale(self.mu0, -self.omega * self.omega * (self.omega * t).cos())
    }
}

/// Direction from the source dipole to the field point together with
/// the near-field tensor T = 1 - 3 rho rho^T and the transverse
/// projector S = 1 - rho rho^T.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeometryTensors {
    pub rho_hat: Vec3,
    pub t: Mat3,
    pub s: Mat3,
}

/// Builds the T and S tensors for a unit direction vector. The norm
/// must equal one within 1e-12.
pub fn geometry_tensors(rho_hat: Vec3) -> Result<GeometryTensors> {
    let n = crate::linalg::norm(rho_hat);
    if (n - 1.0).abs() > 1e-12 {
        return Err(Error::NonUnitVector(n));
    }
    let rr = outer(rho_hat, rho_hat);
    let mut t = IDENTITY;
    let mut s = IDENTITY;
    for i in 0..3 {
        for j in 0..3 {
            t[i][j] -= 3.0 * rr[i][j];
            s[i][j] -= rr[i][j];
        }
    }
    Ok(GeometryTensors { rho_hat, t, s })
}

fn check_distance(rho: f64) -> Result<()> {
    if rho <= 0.0 {
        return Err(Error::NonPositiveSeparation(rho));
    }
    Ok(())
}

/// Polarization part of the electric field,
/// E = -(T mu / rho^3 + T mudot / (c rho^2) + S muddot / (c^3 rho)).
///
/// The radiation term carries 1/c^3 here; see
/// [`e_polarization_standard`] for the 1/c^2 textbook variant.
pub fn e_polarization(
    dip: &DipoleHistory,
    geom: &GeometryTensors,
    rho: f64,
    t_r: f64,
    c: f64,
) -> Result<Vec3> {
    check_distance(rho)?;
    let near = scale(mat_vec(&geom.t, dip.mu(t_r)), 1.0 / (rho * rho * rho));
    let mid = scale(mat_vec(&geom.t, dip.mu_dot(t_r)), 1.0 / (c * rho * rho));
    let far = scale(mat_vec(&geom.s, dip.mu_ddot(t_r)), 1.0 / (c * c * c * rho));
    Ok(scale(add(add(near, mid), far), -1.0))
}

/// Textbook oscillating-dipole field with the 1/(c^2 rho) radiation
/// term, kept alongside [`e_polarization`] for comparison.
pub fn e_polarization_standard(
    dip: &DipoleHistory,
    geom: &GeometryTensors,
    rho: f64,
    t_r: f64,
    c: f64,
) -> Result<Vec3> {
    check_distance(rho)?;
    let near = scale(mat_vec(&geom.t, dip.mu(t_r)), 1.0 / (rho * rho * rho));
    let mid = scale(mat_vec(&geom.t, dip.mu_dot(t_r)), 1.0 / (c * rho * rho));
    let far = scale(mat_vec(&geom.s, dip.mu_ddot(t_r)), 1.0 / (c * c * rho));
    Ok(scale(add(add(near, mid), far), -1.0))
}

/// Roentgen part of the electric field for a source moving along x
/// with velocity `xdot`, acceleration `xddot` and jerk `xdddot`, all
/// evaluated at the retarded time.
pub fn e_roentgen(
    dip: &DipoleHistory,
    geom: &GeometryTensors,
    rho: f64,
    t_r: f64,
    xdot: f64,
    xddot: f64,
    xdddot: f64,
    c: f64,
) -> Result<Vec3> {
    check_distance(rho)?;
    let rh = geom.rho_hat;
    let p_mu = dot(rh, dip.mu(t_r));
    let p_mud = dot(rh, dip.mu_dot(t_r));
    let p_mudd = dot(rh, dip.mu_ddot(t_r));
    let c2r2 = c * c * rho * rho;
    let c3r = c * c * c * rho;
    let coeff = xdot * p_mud / c2r2
        + xddot * p_mu / c2r2
        + xdot * p_mudd / c3r
        + xdddot * p_mu / c3r
        + 2.0 * xddot * p_mud / c3r;
    Ok([-coeff, 0.0, 0.0])
}

/// Polarization part of the magnetic field,
/// B = -(rho x mudot) / (c rho^2) - (rho x muddot) / (c^2 rho).
pub fn b_polarization(
    dip: &DipoleHistory,
    geom: &GeometryTensors,
    rho: f64,
    t_r: f64,
    c: f64,
) -> Result<Vec3> {
    check_distance(rho)?;
    let mid = scale(cross(geom.rho_hat, dip.mu_dot(t_r)), 1.0 / (c * rho * rho));
    let far = scale(cross(geom.rho_hat, dip.mu_ddot(t_r)), 1.0 / (c * c * rho));
    Ok(scale(add(mid, far), -1.0))
}

/// Roentgen part of the magnetic field,
/// B = -(T w1) / (c rho^2) - (S w2) / (c^3 rho) with
/// w1 = mu x v / rho + mu x a / c + mudot x v / c and
/// w2 = mu x j + 2 mudot x a + muddot x v.
pub fn b_roentgen(
    dip: &DipoleHistory,
    geom: &GeometryTensors,
    rho: f64,
    t_r: f64,
    xdot: f64,
    xddot: f64,
    xdddot: f64,
    c: f64,
) -> Result<Vec3> {
    check_distance(rho)?;
    let v = [xdot, 0.0, 0.0];
    let acc = [xddot, 0.0, 0.0];
    let jerk = [xdddot, 0.0, 0.0];
    let mu = dip.mu(t_r);
    let mud = dip.mu_dot(t_r);
    let mudd = dip.mu_ddot(t_r);
    let w1 = add(
        scale(cross(mu, v), 1.0 / rho),
        scale(add(cross(mu, acc), cross(mud, v)), 1.0 / c),
    );
    let w2 = add(add(cross(mu, jerk), scale(cross(mud, acc), 2.0)), cross(mudd, v));
    let first = scale(mat_vec(&geom.t, w1), 1.0 / (c * rho * rho));
    let second = scale(mat_vec(&geom.s, w2), 1.0 / (c * c * c * rho));
    Ok(scale(add(first, second), -1.0))
}

/// Boosts a lab-frame field sample along x into the frame moving with
/// velocity beta*c, using the supplied Lorentz factor.
pub fn lorentz_to_comoving(sample: &FieldSample, beta: f64, gamma: f64) -> Result<FieldSample> {
    if beta.abs() >= 1.0 {
        return Err(Error::SuperluminalBoost(beta));
    }
    if sample.frame != Frame::Lab {
        return Err(Error::NotLabFrame);
    }
    let [ex, ey, ez] = sample.e;
    let [bx, by, bz] = sample.b;
    Ok(FieldSample {
        e: [ex, gamma * (ey - beta * bz), gamma * (ez + beta * by)],
        b: [bx, gamma * (by + beta * ez), gamma * (bz - beta * ey)],
        frame: Frame::Comoving,
    })
}

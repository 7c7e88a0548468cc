//! Worldline of a uniformly accelerated atom and derived kinematic
//! quantities.
//!
//! The trajectory is the hyperbolic worldline of constant proper acceleration
//! `a` along x, at rest at the origin at t = 0:
//!
//! ```text
//! x(t) = (c²/a)(√(1 + a²t²/c²) − 1)
//! x(τ) = (c²/a)(cosh(aτ/c) − 1),   t = (c/a) sinh(aτ/c)
//! ```
//!
//! The a = 0 limits are implemented as explicit branches, never as 0/0.

use crate::error::{Error, Result};

/// Uniform-acceleration worldline parameters.
///
/// Invariants: `a ≥ 0`, `c > 0`; position and velocity vanish at t = 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Trajectory {
    /// Proper acceleration (cm/s²).
    pub a: f64,
    /// Speed of light (cm/s).
    pub c: f64,
}

/// Which velocity-factor approximation to use.
///
/// `Nonrelativistic` keeps β = at/c and γ = 1 + a²t²/2c², the truncation the
/// energy pipeline is built on. `Exact` evaluates the hyperbolic worldline's
/// true factors and feeds validity diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KinematicMode {
    Exact,
    Nonrelativistic,
}

impl Trajectory {
    pub fn new(a: f64, c: f64) -> Result<Self> {
        if !(a >= 0.0) {
            return Err(Error::NegativeAcceleration(a));
        }
        if !(c > 0.0) {
            return Err(Error::NonPositiveSpeedOfLight(c));
        }
        Ok(Self { a, c })
    }

    /// Lab-frame position at lab time t. Even in t; exactly 0 for a = 0.
    pub fn position_lab(&self, t: f64) -> f64 {
        if self.a == 0.0 {
            return 0.0;
        }
        let y = self.a * t / self.c;
        // √(1+y²) − 1 written as y²/(√(1+y²)+1) to avoid cancellation.
        (self.c * self.c / self.a) * y * y / ((1.0 + y * y).sqrt() + 1.0)
    }

    /// Position as a function of proper time τ. Needs a > 0.
    pub fn position_proper(&self, tau: f64) -> Result<f64> {
        if self.a == 0.0 {
            return Err(Error::DegenerateAcceleration);
        }
        let z = self.a * tau / self.c;
        // cosh z − 1 = 2 sinh²(z/2)
        let s = (0.5 * z).sinh();
        Ok((self.c * self.c / self.a) * 2.0 * s * s)
    }

    /// Lab time t(τ) = (c/a) sinh(aτ/c). Strictly increasing. Needs a > 0.
    pub fn lab_time_from_proper(&self, tau: f64) -> Result<f64> {
        if self.a == 0.0 {
            return Err(Error::DegenerateAcceleration);
        }
        Ok((self.c / self.a) * (self.a * tau / self.c).sinh())
    }

    /// Inverse of [`lab_time_from_proper`]: τ(t) = (c/a) asinh(at/c).
    ///
    /// [`lab_time_from_proper`]: Trajectory::lab_time_from_proper
    pub fn proper_from_lab_time(&self, t: f64) -> Result<f64> {
        if self.a == 0.0 {
            return Err(Error::DegenerateAcceleration);
        }
        Ok((self.c / self.a) * (self.a * t / self.c).asinh())
    }

    /// Velocity in units of c. Odd in t; the exact form stays inside (−1, 1).
    pub fn beta(&self, t: f64, mode: KinematicMode) -> f64 {
        let y = self.a * t / self.c;
        match mode {
            KinematicMode::Nonrelativistic => y,
            KinematicMode::Exact => y / (1.0 + y * y).sqrt(),
        }
    }

    /// Time-dilation factor. Even in t; ≥ 1 in both modes.
    pub fn gamma(&self, t: f64, mode: KinematicMode) -> f64 {
        let y = self.a * t / self.c;
        match mode {
            KinematicMode::Nonrelativistic => 1.0 + 0.5 * y * y,
            KinematicMode::Exact => (1.0 + y * y).sqrt(),
        }
    }

    /// Effective interaction distance: the path length a light signal covers
    /// between emission by one atom and absorption by the other when both
    /// follow this trajectory at constant separation ρ,
    ///
    /// ```text
    /// ρ(t) = ρ + c·(t − (c/a)·arctan(at/c))
    /// ```
    ///
    /// Returns ρ for a = 0; non-decreasing in t and never below ρ.
    pub fn effective_distance(&self, rho: f64, t: f64) -> Result<f64> {
        if !(rho > 0.0) {
            return Err(Error::NonPositiveSeparation(rho));
        }
        if t < 0.0 {
            return Err(Error::NegativeTime(t));
        }
        if self.a == 0.0 {
            return Ok(rho);
        }
        let x = self.a * t / self.c;
        Ok(rho + (self.c * self.c / self.a) * x_minus_atan(x))
    }
}

/// x − arctan x, stable for small x where the direct difference cancels.
///
/// Series: x³/3 − x⁵/5 + x⁷/7 − …, alternating, so |truncation| is bounded by
/// the first dropped term.
fn x_minus_atan(x: f64) -> f64 {
    if x.abs() >= 0.5 {
        return x - x.atan();
    }
    let x2 = x * x;
    let mut term = x * x2 / 3.0;
    let mut sum = term;
    let mut n = 1;
    while term.abs() > f64::EPSILON * sum.abs() && n < 40 {
        term *= -x2;
        n += 1;
        // rescale the denominator from (2n−1) to (2n+1)
        term *= (2 * n - 1) as f64 / (2 * n + 1) as f64;
        sum += term;
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn traj(a: f64) -> Trajectory {
        Trajectory::new(a, 1.0).unwrap()
    }

    #[test]
    fn constructor_validates() {
        assert!(Trajectory::new(-1.0, 1.0).is_err());
        assert!(Trajectory::new(1.0, 0.0).is_err());
        assert!(Trajectory::new(0.0, 1.0).is_ok());
    }

    #[test]
    fn position_lab_zero_acceleration() {
        assert_eq!(traj(0.0).position_lab(1.0), 0.0);
    }

    #[test]
    fn position_lab_initial_condition() {
        assert_eq!(traj(1.0).position_lab(0.0), 0.0);
    }

    #[test]
    fn position_lab_small_speed_matches_parabola() {
        let a = 2.0;
        let tr = Trajectory::new(a, 1.0).unwrap();
        let t = 0.1 / a; // at/c = 0.1
        let x = tr.position_lab(t);
        let parabola = 0.5 * a * t * t;
        assert!((x - parabola).abs() / parabola <= 0.004);
    }

    #[test]
    fn position_proper_origin_and_small_argument() {
        let tr = traj(1.0);
        assert_eq!(tr.position_proper(0.0).unwrap(), 0.0);
        let x = tr.position_proper(0.1).unwrap();
        assert!((x - (0.1f64.cosh() - 1.0)).abs() < 1e-15);
        assert!((x - 0.005004168055860e0).abs() < 1e-12);
    }

    #[test]
    fn position_proper_needs_acceleration() {
        assert!(matches!(
            traj(0.0).position_proper(1.0),
            Err(Error::DegenerateAcceleration)
        ));
        assert!(matches!(
            traj(0.0).lab_time_from_proper(1.0),
            Err(Error::DegenerateAcceleration)
        ));
    }

    #[test]
    fn proper_and_lab_positions_agree_along_the_worldline() {
        let tr = Trajectory::new(0.7, 1.0).unwrap();
        for i in 0..40 {
            let tau = 0.05 * i as f64;
            let t = tr.lab_time_from_proper(tau).unwrap();
            let xp = tr.position_proper(tau).unwrap();
            let xl = tr.position_lab(t);
            let scale = xp.abs().max(1e-300);
            assert!((xp - xl).abs() / scale < 1e-12, "tau={tau}: {xp} vs {xl}");
        }
    }

    #[test]
    fn lab_time_round_trip() {
        let tr = Trajectory::new(1.3, 1.0).unwrap();
        for i in 1..30 {
            let tau = 0.1 * i as f64;
            let t = tr.lab_time_from_proper(tau).unwrap();
            let back = tr.proper_from_lab_time(t).unwrap();
            assert!((back - tau).abs() <= 4.0 * f64::EPSILON * tau);
        }
    }

    #[test]
    fn lab_time_small_argument_bound() {
        let tr = traj(1.0);
        let tau = 0.05;
        let t = tr.lab_time_from_proper(tau).unwrap();
        let rel = (t - tau) / tau;
        assert!(rel >= 0.0 && rel <= 0.05f64.powi(2) / 6.0 * 1.01);
    }

    #[test]
    fn beta_examples() {
        let tr = traj(1.0);
        assert_eq!(tr.beta(0.0, KinematicMode::Exact), 0.0);
        assert_eq!(tr.beta(0.2, KinematicMode::Nonrelativistic), 0.2);
        let exact = tr.beta(0.2, KinematicMode::Exact);
        assert!((exact - 0.2 / 1.04f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn gamma_examples() {
        let tr = traj(1.0);
        assert_eq!(tr.gamma(0.0, KinematicMode::Exact), 1.0);
        assert_eq!(tr.gamma(0.2, KinematicMode::Nonrelativistic), 1.02);
        for i in 0..=30 {
            let t = 0.01 * i as f64;
            let d = (tr.gamma(t, KinematicMode::Exact)
                - tr.gamma(t, KinematicMode::Nonrelativistic))
            .abs();
            assert!(d <= 3.0 * t.powi(4) / 8.0 + 1e-15);
        }
    }

    #[test]
    fn effective_distance_limits() {
        let tr = traj(1.0);
        assert_eq!(tr.effective_distance(2.0, 0.0).unwrap(), 2.0);
        assert_eq!(traj(0.0).effective_distance(2.0, 5.0).unwrap(), 2.0);
        assert!(tr.effective_distance(0.0, 1.0).is_err());
        assert!(tr.effective_distance(-1.0, 1.0).is_err());
    }

    #[test]
    fn effective_distance_small_time_series() {
        let a = 0.3;
        let tr = Trajectory::new(a, 1.0).unwrap();
        let rho = 1.0;
        for at in [0.01, 0.02, 0.05] {
            let t = at / a;
            let d = tr.effective_distance(rho, t).unwrap();
            let lead = a * a * t * t * t / 3.0;
            assert!(
                ((d - rho) - lead).abs() <= 0.01 * lead,
                "at/c = {at}: growth {} vs leading term {lead}",
                d - rho
            );
        }
    }

    #[test]
    fn effective_distance_monotone_in_time_and_acceleration() {
        let rho = 3.0;
        let mut last = 0.0;
        let tr = traj(0.8);
        for i in 0..100 {
            let t = 0.05 * i as f64;
            let d = tr.effective_distance(rho, t).unwrap();
            assert!(d >= last);
            assert!(d >= rho);
            last = d;
        }
        let mut last = 0.0;
        for i in 0..100 {
            let a = 0.01 * i as f64;
            let d = traj(a).effective_distance(rho, 2.0).unwrap();
            assert!(d >= last, "a={a}");
            last = d;
        }
    }

    #[test]
    fn x_minus_atan_matches_direct_at_crossover() {
        // the direct form loses ~x/(x - atan x) ~ 13 digits-worth of
        // cancellation near the branch switch, so bound by that
        for x in [0.3, 0.45, 0.499] {
            let a = x_minus_atan(x);
            let b = x - x.atan();
            assert!((a - b).abs() <= 32.0 * f64::EPSILON * b);
        }
    }

    proptest! {
        #[test]
        fn exact_beta_subluminal(a in 0.0f64..10.0, t in -50.0f64..50.0) {
            let tr = Trajectory::new(a, 1.0).unwrap();
            let b = tr.beta(t, KinematicMode::Exact);
            prop_assert!(b > -1.0 && b < 1.0);
            prop_assert!(tr.gamma(t, KinematicMode::Exact) >= 1.0);
            prop_assert!(tr.gamma(t, KinematicMode::Nonrelativistic) >= 1.0);
        }

        #[test]
        fn position_lab_even_in_time(a in 0.0f64..5.0, t in 0.0f64..20.0) {
            let tr = Trajectory::new(a, 1.0).unwrap();
            prop_assert_eq!(tr.position_lab(t), tr.position_lab(-t));
        }

        #[test]
        fn beta_odd_in_time(a in 0.0f64..5.0, t in 0.0f64..20.0) {
            let tr = Trajectory::new(a, 1.0).unwrap();
            prop_assert_eq!(tr.beta(t, KinematicMode::Exact), -tr.beta(-t, KinematicMode::Exact));
            prop_assert_eq!(
                tr.beta(t, KinematicMode::Nonrelativistic),
                -tr.beta(-t, KinematicMode::Nonrelativistic)
            );
        }

        #[test]
        fn effective_distance_never_shrinks(a in 0.0f64..3.0, rho in 0.1f64..10.0, t in 0.0f64..10.0) {
            let tr = Trajectory::new(a, 1.0).unwrap();
            prop_assert!(tr.effective_distance(rho, t).unwrap() >= rho);
        }
    }
}

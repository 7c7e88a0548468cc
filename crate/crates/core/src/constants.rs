//! Physical constants bundled per unit system.

/// The constants every energy formula needs, fixed at construction so a
/// computation cannot mix unit systems halfway through.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    /// Speed of light. cm/s in Gaussian mode, 1 in natural mode.
    pub c: f64,
    /// Reduced Planck constant. erg·s in Gaussian mode, 1 in natural mode.
    pub hbar: f64,
    /// Boltzmann constant. erg/K in Gaussian mode, 1 in natural mode.
    pub k_b: f64,
}

impl PhysicalConstants {
    /// Gaussian CGS values (CODATA 2018; c and k_B exact by definition).
    pub const fn gaussian() -> Self {
        Self {
            c: 2.99792458e10,
            hbar: 1.054571817e-27,
            k_b: 1.380649e-16,
        }
    }

    /// Natural units: ħ = c = k_B = 1. Lengths, times, wavenumbers and
    /// accelerations must then be supplied in mutually consistent units.
    pub const fn natural() -> Self {
        Self {
            c: 1.0,
            hbar: 1.0,
            k_b: 1.0,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_values() {
        let g = PhysicalConstants::gaussian();
        assert_eq!(g.c, 2.99792458e10);
        assert_eq!(g.hbar, 1.054571817e-27);
        assert_eq!(g.k_b, 1.380649e-16);
    }

    #[test]
    fn natural_is_unity() {
        let n = PhysicalConstants::natural();
        assert_eq!((n.c, n.hbar, n.k_b), (1.0, 1.0, 1.0));
    }
}

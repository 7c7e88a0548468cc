//! Numerics for the van der Waals dispersion energy between two ground-state
//! atoms sharing a uniform acceleration.
//!
//! The induced-dipole model behind this crate correlates the dipole moments
//! two atoms acquire from the same vacuum field mode. For atoms dragged along
//! a hyperbolic worldline the interaction energy picks up corrections linear
//! and quadratic in the elapsed time, scaled by `a²/c³` and `a²/c²`. The crate
//! computes the rest-frame energy, those corrections, their near- and
//! far-zone asymptotic forms, and cross-checks between the two integral
//! representations (imaginary-axis damped integrals vs. Abel-regularized
//! real-axis integrals).
//!
//! Layout:
//! - [`kinematics`]: hyperbolic worldline, velocity factors, effective
//!   interaction distance.
//! - [`polarizability`]: dynamic polarizability models on the real and
//!   imaginary frequency axes.
//! - [`dipole_fields`]: lab-frame fields of an accelerating oscillating
//!   dipole and their boost to the co-moving frame.
//! - [`potential_tensor`]: the per-mode 3×3 interaction tensor, its numeric
//!   time average, and the closed-form average.
//! - [`quadrature`]: semi-infinite integration engines (exponentially damped
//!   and Abel-regularized oscillatory).
//! - [`energy`]: assembled dispersion energies, asymptotics, and the
//!   consistency report between the two integral routes.

pub mod constants;
pub mod dipole_fields;
pub mod energy;
pub mod error;
pub mod kinematics;
pub mod linalg;
pub mod polarizability;
pub mod potential_tensor;
pub mod quadrature;

pub use constants::PhysicalConstants;
pub use error::{Error, Result};

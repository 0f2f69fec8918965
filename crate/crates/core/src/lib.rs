//! Empirical angular measures of lattice points on circles, their Fourier
//! projections, and a membership oracle for the set of attainable
//! `(nu^(1), nu^(2))` pairs.
//!
//! - [`arithmetic`]: factorization, sums of two squares, split-prime angles.
//! - [`measures`]: symmetric atomic measures, convolution, the kernels `G_A`.
//! - [`region`]: max curve, spike boundaries, attainability oracles.
//! - [`verify`]: grid and sampling checks of the supporting inequalities.

pub mod arithmetic;
pub mod measures;
pub mod region;
pub mod verify;

pub use arithmetic::{factorize, lattice_points, r2, split_prime_angle, Factorization, GaussianPoint};
pub use measures::{g_kernel, gamma_curve, nu_from_lattice, upsilon, AtomicMeasure, FourierVector};
pub use region::{is_attainable, is_squarefree_attainable, max_curve, PlanePoint, RegionVerdict};

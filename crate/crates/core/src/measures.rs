//! Symmetric atomic measures on the de-symmetrized circle `R / 2 pi Z`.
//!
//! A symmetric measure on the unit circle (invariant under multiplication by
//! `i` and under conjugation) is recorded through the substitution
//! `theta -> 4 theta`, which leaves a measure invariant under `theta -> -theta`
//! whose m-th cosine coefficient is the original 4m-th Fourier coefficient.
//! Everything in this module lives on that de-symmetrized circle.

use std::f64::consts::PI;

use thiserror::Error;

use crate::arithmetic::{self, GaussianPoint};

/// Atoms closer than this (in radians, circularly) are merged.
pub const MERGE_TOLERANCE: f64 = 1e-9;

/// Allowed slack on the total mass.
pub const MASS_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MeasureError {
    #[error("{0} is not a sum of two squares")]
    NotInS(u64),
    #[error("weights sum to {0}, expected 1")]
    BadMass(f64),
    #[error("weight {0} is not in (0, 1]")]
    BadWeight(f64),
    #[error("non-finite angle {0}")]
    BadAngle(f64),
    #[error("measure is not invariant under angle negation")]
    NotSymmetric,
    #[error("half-width {0} outside (0, pi]")]
    BadHalfWidth(f64),
    #[error("a Fourier projection needs at least one coefficient")]
    EmptyProjection,
}

/// Reduce an angle to `(-pi, pi]`.
pub fn canonical_angle(theta: f64) -> f64 {
    let mut r = theta.rem_euclid(2.0 * PI);
    if r > PI {
        r -= 2.0 * PI;
    }
    // rem_euclid can return exactly 2 pi after rounding, and -pi maps to pi.
    if r <= -PI || r >= PI {
        r = PI;
    }
    r
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Atom {
    pub angle: f64,
    pub weight: f64,
}

/// A finite probability measure, symmetric under `theta -> -theta`.
///
/// Atoms are sorted by angle in `(-pi, pi]`, with no two closer than
/// [`MERGE_TOLERANCE`].
#[derive(Debug, Clone, PartialEq)]
pub struct AtomicMeasure {
    atoms: Vec<Atom>,
}

impl AtomicMeasure {
    /// Builds a measure from `(angle, weight)` pairs, merging near-duplicates.
    /// Fails unless the result is a symmetric probability measure.
    pub fn new<I>(atoms: I) -> Result<Self, MeasureError>
    where
        I: IntoIterator<Item = (f64, f64)>,
    {
        let merged = merge_atoms(atoms)?;
        let mass: f64 = merged.iter().map(|a| a.weight).sum();
        if (mass - 1.0).abs() > MASS_TOLERANCE {
            return Err(MeasureError::BadMass(mass));
        }
        let measure = Self { atoms: merged };
        if !measure.is_symmetric(MERGE_TOLERANCE, MASS_TOLERANCE) {
            return Err(MeasureError::NotSymmetric);
        }
        Ok(measure)
    }

    /// Average of the given probability measure with its reflection.
    pub fn symmetrized<I>(atoms: I) -> Result<Self, MeasureError>
    where
        I: IntoIterator<Item = (f64, f64)>,
    {
        let doubled: Vec<(f64, f64)> = atoms
            .into_iter()
            .flat_map(|(t, w)| [(t, w / 2.0), (-t, w / 2.0)])
            .collect();
        Self::new(doubled)
    }

    /// The point mass at 0, unit of convolution.
    pub fn identity() -> Self {
        Self {
            atoms: vec![Atom {
                angle: 0.0,
                weight: 1.0,
            }],
        }
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    fn is_symmetric(&self, angle_tol: f64, weight_tol: f64) -> bool {
        self.atoms.iter().all(|atom| {
            let mirror = canonical_angle(-atom.angle);
            self.atoms.iter().any(|other| {
                circular_distance(other.angle, mirror) <= angle_tol && (other.weight - atom.weight).abs() <= weight_tol
            })
        })
    }

    /// Atom-by-atom comparison.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.atoms.len() == other.atoms.len()
            && self
                .atoms
                .iter()
                .zip(&other.atoms)
                .all(|(a, b)| circular_distance(a.angle, b.angle) <= tol && (a.weight - b.weight).abs() <= tol)
    }

    /// `(nu^(1), ..., nu^(k))` with `nu^(m) = sum w cos(m theta)`.
    pub fn fourier(&self, k: usize) -> FourierVector {
        let coefficients = (1..=k)
            .map(|m| {
                let m = m as f64;
                self.atoms
                    .iter()
                    .map(|a| a.weight * (m * a.angle).cos())
                    .sum::<f64>()
                    .clamp(-1.0, 1.0)
            })
            .collect();
        FourierVector { coefficients }
    }

    /// Convolution on the circle: pairwise angle sums, product weights.
    pub fn convolve(&self, other: &Self) -> Self {
        let pairs = self.atoms.iter().flat_map(|a| {
            other
                .atoms
                .iter()
                .map(move |b| (a.angle + b.angle, a.weight * b.weight))
        });
        let atoms = merge_atoms(pairs).expect("convolution of valid measures is valid");
        Self { atoms }
    }
}

fn circular_distance(a: f64, b: f64) -> f64 {
    let d = (a - b).abs().rem_euclid(2.0 * PI);
    d.min(2.0 * PI - d)
}

fn merge_atoms<I>(atoms: I) -> Result<Vec<Atom>, MeasureError>
where
    I: IntoIterator<Item = (f64, f64)>,
{
    let mut sorted = Vec::new();
    for (angle, weight) in atoms {
        if !angle.is_finite() {
            return Err(MeasureError::BadAngle(angle));
        }
        if !(0.0..=1.0 + MASS_TOLERANCE).contains(&weight) {
            return Err(MeasureError::BadWeight(weight));
        }
        if weight > 0.0 {
            sorted.push(Atom {
                angle: canonical_angle(angle),
                weight,
            });
        }
    }
    sorted.sort_by(|a, b| a.angle.total_cmp(&b.angle));

    let mut merged: Vec<Atom> = Vec::with_capacity(sorted.len());
    for atom in sorted {
        match merged.last_mut() {
            Some(last) if atom.angle - last.angle <= MERGE_TOLERANCE => last.weight += atom.weight,
            _ => merged.push(atom),
        }
    }
    // Close the circle: a cluster straddling +-pi is kept at the top end.
    if merged.len() > 1 {
        let first = merged[0];
        let last = merged[merged.len() - 1];
        if first.angle + 2.0 * PI - last.angle <= MERGE_TOLERANCE {
            merged.remove(0);
            merged.last_mut().unwrap().weight += first.weight;
        }
    }
    Ok(merged)
}

/// First `k` cosine coefficients of a measure; entry `m` is `nu^(m)`.
///
/// For `k >= 2` the pair `(x, y) = (nu^(1), nu^(2))` is the point studied by
/// the region module.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierVector {
    coefficients: Vec<f64>,
}

impl FourierVector {
    pub fn new(coefficients: Vec<f64>) -> Result<Self, MeasureError> {
        if coefficients.is_empty() {
            return Err(MeasureError::EmptyProjection);
        }
        Ok(Self { coefficients })
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    /// The coefficient `nu^(m)`, 1-based.
    pub fn get(&self, m: usize) -> f64 {
        self.coefficients[m - 1]
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn x(&self) -> f64 {
        self.coefficients[0]
    }

    pub fn y(&self) -> f64 {
        self.coefficients[1]
    }

    /// Componentwise product; the Fourier image of a convolution.
    pub fn product(&self, other: &Self) -> Self {
        Self {
            coefficients: self
                .coefficients
                .iter()
                .zip(&other.coefficients)
                .map(|(a, b)| a * b)
                .collect(),
        }
    }

    /// Entries in `[-1, 1]` and, when present, `nu^(2) >= 2 nu^(1)^2 - 1`.
    pub fn is_valid(&self, tol: f64) -> bool {
        let bounded = self.coefficients.iter().all(|c| c.abs() <= 1.0 + tol);
        let riesz = self.coefficients.len() < 2 || self.y() >= 2.0 * self.x() * self.x() - 1.0 - tol;
        bounded && riesz
    }
}

pub fn fourier(measure: &AtomicMeasure, k: usize) -> FourierVector {
    measure.fourier(k)
}

pub fn convolve(m1: &AtomicMeasure, m2: &AtomicMeasure) -> AtomicMeasure {
    m1.convolve(m2)
}

/// `4 arg(lambda)` computed as the argument of `lambda^4`.
fn desymmetrized_angle(p: GaussianPoint) -> f64 {
    let (a, b) = (i128::from(p.a), i128::from(p.b));
    let (a2, b2) = (a * a, b * b);
    let re = a2 * a2 - 6 * a2 * b2 + b2 * b2;
    let im = 4 * a * b * (a2 - b2);
    (im as f64).atan2(re as f64)
}

/// The de-symmetrized empirical measure `nu_n` of the lattice points on the
/// circle of radius `sqrt(n)`.
pub fn nu_from_lattice(n: u64) -> Result<AtomicMeasure, MeasureError> {
    let points = arithmetic::lattice_points(n);
    if points.is_empty() {
        return Err(MeasureError::NotInS(n));
    }
    let w = 1.0 / points.len() as f64;
    AtomicMeasure::new(points.into_iter().map(|p| (desymmetrized_angle(p), w)))
}

/// `upsilon_{theta; M} = (M+1)^-1 sum_{k=0..M} delta_{(M-2k) theta}`.
///
/// Its m-th coefficient is `G_{M+1}(m theta)`; `nu_{p^e} = upsilon_{theta_p; e}`.
pub fn upsilon(theta: f64, m: u32) -> AtomicMeasure {
    let w = 1.0 / f64::from(m + 1);
    let mf = f64::from(m);
    AtomicMeasure::new((0..=m).map(|k| ((mf - 2.0 * f64::from(k)) * theta, w)))
        .expect("upsilon is a symmetric probability measure")
}

/// Lattice-side `theta` in `[0, pi/4]` spread over the four quarter turns,
/// i.e. `upsilon_{4 theta}` after de-symmetrization.
pub fn tilde_delta(lattice_theta: f64) -> AtomicMeasure {
    upsilon(4.0 * lattice_theta, 1)
}

/// Multi-atom variant with `m + 1` atoms at `(m - 2j) theta`, `j = 0..=m`.
pub fn tilde_delta_m(lattice_theta: f64, m: u32) -> AtomicMeasure {
    upsilon(4.0 * lattice_theta, m)
}

/// `eta_a = a delta_0 + (1 - a) delta_pi`, the de-symmetrized two-point family.
pub fn eta_measure(a: f64) -> Result<AtomicMeasure, MeasureError> {
    if !(0.0..=1.0).contains(&a) {
        return Err(MeasureError::BadWeight(a));
    }
    AtomicMeasure::new([(0.0, a), (PI, 1.0 - a)])
}

const PI_LO: f64 = 1.224_646_799_147_353_2e-16;

/// `G_A(theta) = sin(A theta) / (A sin theta)`, extended continuously to
/// `theta in pi Z`.
///
/// `theta` is reduced to `j pi + eps` with `|eps| <= pi/2` using a two-part
/// pi, so the value is accurate near the removable singularities; there a
/// short series is used.
pub fn g_kernel(a: u32, theta: f64) -> f64 {
    debug_assert!(a >= 1);
    if a == 1 {
        return 1.0;
    }
    let j = (theta / PI).round();
    let eps = (-j).mul_add(PI, theta) - j * PI_LO;
    let af = f64::from(a);
    // sin(A (j pi + eps)) / sin(j pi + eps) picks up (-1)^((A-1) j).
    let odd_shift = (j.abs() % 2.0 == 1.0) && a % 2 == 0;
    let sign = if odd_shift { -1.0 } else { 1.0 };
    if eps == 0.0 {
        return sign;
    }
    if eps.abs() < 1e-8 && af * eps.abs() < 1e-4 {
        let a2m1 = af * af - 1.0;
        let e2 = eps * eps;
        return sign * (1.0 - a2m1 * e2 / 6.0 + a2m1 * (3.0 * af * af - 7.0) * e2 * e2 / 360.0);
    }
    sign * (af * eps).sin() / (af * eps.sin())
}

/// `gamma_A(theta) = (G_A(theta), G_A(2 theta))`.
pub fn gamma_curve(a: u32, theta: f64) -> (f64, f64) {
    (g_kernel(a, theta), g_kernel(a, 2.0 * theta))
}

/// `sin(x) / x` with the value 1 at 0.
pub fn sinc(x: f64) -> f64 {
    if x == 0.0 {
        1.0
    } else {
        x.sin() / x
    }
}

/// Coefficients of the uniform measure on `[-half_width, half_width]`.
///
/// `half_width` is the de-symmetrized half-width (four times the lattice-side
/// arc half-width); `pi` gives the Haar measure.
pub fn arc_measure_fourier(half_width: f64, k: usize) -> Result<FourierVector, MeasureError> {
    if !(half_width > 0.0 && half_width <= PI) {
        return Err(MeasureError::BadHalfWidth(half_width));
    }
    FourierVector::new((1..=k).map(|m| sinc(m as f64 * half_width)).collect())
}

/// Coefficients of the uniform measure on the level-`level` middle-thirds
/// approximant of the Cantor set built on `[-theta, theta]`.
///
/// Each level replaces an interval by its two outer thirds, so the measure is
/// the uniform measure on `[-theta/3^L, theta/3^L]` convolved with the
/// two-point measures at `+-2 theta / 3^j`, `j = 1..=L`.
pub fn cantor_measure_fourier(theta: f64, level: u32, k: usize) -> Result<FourierVector, MeasureError> {
    if !(theta > 0.0 && theta <= PI) {
        return Err(MeasureError::BadHalfWidth(theta));
    }
    let shrink = 3f64.powi(level as i32);
    let coefficients = (1..=k)
        .map(|m| {
            let m = m as f64;
            let base = sinc(m * theta / shrink);
            (1..=level).fold(base, |acc, j| acc * (2.0 * m * theta / 3f64.powi(j as i32)).cos())
        })
        .collect();
    FourierVector::new(coefficients)
}

//! Geometry of the attainable region in the `(x, y) = (nu^(1), nu^(2))` plane.
//!
//! For `|x| >= 1/3` the region is bounded by `y = 2x^2 - 1` below and by the
//! max curve `M(x) = max(x^4, (2|x| - 1)^2)` above. For `|x| < 1/3` it
//! additionally contains a spike for every `k >= 1`: the cornered domain
//! between `f1(k, .)` and `f2(k, .)` on `[0, 1/(2k+1)]`, touching `y = 1` at
//! `x = 1/(2k+1)`.
//!
//! `f2(k, x)` is a maximum over the odd divisors `A > 1` of `2k + 1` of a
//! single-parameter curve: writing `t = pi/2 - u` with `u in [0, pi/(2A)]`,
//! the candidate is `G_A(2t)` where `|G_A(t)| = x (2k+1) / A`. Along that
//! corner interval `|G_A(t)| = cos(Au) / (A cos u)` is strictly monotone, so
//! the root is found by bisection.

use std::f64::consts::{FRAC_PI_2, PI};

use thiserror::Error;

use crate::measures::g_kernel;

/// Slack applied to every membership inequality unless the caller overrides it.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

const BISECTION_WIDTH: f64 = 1e-13;
const BISECTION_MAX_ITER: usize = 200;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RegionError {
    #[error("point ({0}, {1}) is outside [-1, 1]^2")]
    OutOfSquare(f64, f64),
    #[error("x = {x} is outside the spike domain [0, {x_k}] for k = {k}")]
    OutsideSpike { k: u64, x: f64, x_k: f64 },
    #[error("{a} is not an odd divisor > 1 of {n}")]
    InvalidDivisor { a: u64, n: u64 },
    #[error("corner target {target} is outside [0, 1/{a}]")]
    TargetOutOfRange { a: u64, target: f64 },
    #[error("k must be at least 1")]
    ZeroK,
    #[error("parameter {name} = {value} is out of range")]
    Parameter { name: &'static str, value: f64 },
}

/// A candidate point `(nu^(1), nu^(2))` in `[-1, 1]^2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlanePoint {
    pub x: f64,
    pub y: f64,
}

impl PlanePoint {
    pub fn new(x: f64, y: f64) -> Result<Self, RegionError> {
        if x.abs() <= 1.0 && y.abs() <= 1.0 {
            Ok(Self { x, y })
        } else {
            Err(RegionError::OutOfSquare(x, y))
        }
    }

    /// Componentwise product: the image of convolving the two measures.
    pub fn product(self, other: Self) -> Self {
        Self {
            x: self.x * other.x,
            y: self.y * other.y,
        }
    }
}

/// `M(x) = max(x^4, (2|x| - 1)^2)`.
pub fn max_curve(x: f64) -> f64 {
    let ax = x.abs();
    let mix = 2.0 * ax - 1.0;
    (ax * ax * ax * ax).max(mix * mix)
}

/// Fourier image of all symmetric measures: `2x^2 - 1 <= y <= 1`.
pub fn in_p2(p: PlanePoint) -> bool {
    const TOL: f64 = 1e-12;
    p.x.abs() <= 1.0 + TOL && p.y <= 1.0 + TOL && p.y >= 2.0 * p.x * p.x - 1.0 - TOL
}

/// `x_k = 1/(2k+1)`.
pub fn spike_corner(k: u64) -> f64 {
    1.0 / (2 * k + 1) as f64
}

fn check_spike_domain(k: u64, x: f64) -> Result<f64, RegionError> {
    if k == 0 {
        return Err(RegionError::ZeroK);
    }
    let x_k = spike_corner(k);
    if !(0.0..=x_k).contains(&x) {
        return Err(RegionError::OutsideSpike { k, x, x_k });
    }
    Ok(x_k)
}

/// Lower spike boundary `f1(k, x) = 2 (2k+1)^2 x^2 - 1`.
pub fn f1(k: u64, x: f64) -> Result<f64, RegionError> {
    check_spike_domain(k, x)?;
    let n = (2 * k + 1) as f64;
    Ok(2.0 * n * n * x * x - 1.0)
}

/// Odd divisors `A > 1` of `n`, ascending.
pub fn odd_divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small
        .into_iter()
        .chain(large.into_iter().rev())
        .filter(|&d| d > 1 && d % 2 == 1)
        .collect()
}

/// `|G_A(pi/2 - u)|` for odd `A` and `u in [0, pi/(2A)]`.
fn corner_profile(a: u64, u: f64) -> f64 {
    let af = a as f64;
    (af * u).cos() / (af * u.cos())
}

/// Offset `u = pi/2 - t` of the corner root, bisected on `[0, pi/(2A)]`.
fn corner_offset(a: u64, target: f64) -> f64 {
    let af = a as f64;
    let mut lo = 0.0;
    let mut hi = PI / (2.0 * af);
    if target >= 1.0 / af {
        return lo;
    }
    if target <= 0.0 {
        return hi;
    }
    for _ in 0..BISECTION_MAX_ITER {
        if hi - lo < BISECTION_WIDTH {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if corner_profile(a, mid) >= target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

fn check_corner_args(a: u64, target: f64) -> Result<(), RegionError> {
    if a < 3 || a % 2 == 0 {
        return Err(RegionError::InvalidDivisor { a, n: a });
    }
    if !(0.0..=1.0 / a as f64).contains(&target) {
        return Err(RegionError::TargetOutOfRange { a, target });
    }
    Ok(())
}

/// The unique `t in [pi/2 - pi/(2A), pi/2]` with `|G_A(t)| = target`.
pub fn solve_g_on_corner(a: u64, target: f64) -> Result<f64, RegionError> {
    check_corner_args(a, target)?;
    Ok(FRAC_PI_2 - corner_offset(a, target))
}

/// Candidate upper value from a single divisor `A`, with the corner root `t`.
fn divisor_candidate(n: u64, a: u64, x: f64) -> (f64, f64) {
    if x == 0.0 {
        return (0.0, FRAC_PI_2 - PI / (2.0 * a as f64));
    }
    let target = (x * n as f64 / a as f64).min(1.0 / a as f64);
    let u = corner_offset(a, target);
    // For odd A, G_A(2t) = G_A(pi - 2u) = G_A(2u).
    (g_kernel(a as u32, 2.0 * u), FRAC_PI_2 - u)
}

/// Single-divisor spike curve for the odd divisor `A > 1` of `2k + 1`.
///
/// `g_spike(k, A, 0) = 0`: both coordinates of the corner curve vanish at
/// `t = pi/2 - pi/(2A)`.
pub fn g_spike(k: u64, a: u64, x: f64) -> Result<f64, RegionError> {
    check_spike_domain(k, x)?;
    let n = 2 * k + 1;
    if a < 3 || n % a != 0 {
        return Err(RegionError::InvalidDivisor { a, n });
    }
    Ok(divisor_candidate(n, a, x).0)
}

/// Upper spike boundary: the maximum of [`g_spike`] over the odd divisors of `2k+1`.
pub fn f2(k: u64, x: f64) -> Result<f64, RegionError> {
    check_spike_domain(k, x)?;
    Ok(SpikeBoundary::new(k)?.upper(x).value)
}

/// Which divisor realizes `f2` at a given `x`, and where its corner root sits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpikeUpper {
    pub value: f64,
    pub divisor: u64,
    pub t: f64,
}

/// Both boundaries of the k-th spike, with the divisor table built once.
#[derive(Debug, Clone)]
pub struct SpikeBoundary {
    pub k: u64,
    pub x_k: f64,
    pub divisors: Vec<u64>,
}

impl SpikeBoundary {
    pub fn new(k: u64) -> Result<Self, RegionError> {
        if k == 0 {
            return Err(RegionError::ZeroK);
        }
        Ok(Self {
            k,
            x_k: spike_corner(k),
            divisors: odd_divisors(2 * k + 1),
        })
    }

    pub fn n(&self) -> u64 {
        2 * self.k + 1
    }

    /// `f1` without the domain check; callers clamp `x` into `[0, x_k]`.
    pub fn lower(&self, x: f64) -> f64 {
        let n = self.n() as f64;
        2.0 * n * n * x * x - 1.0
    }

    /// `f2` without the domain check.
    pub fn upper(&self, x: f64) -> SpikeUpper {
        let n = self.n();
        self.divisors
            .iter()
            .map(|&a| {
                let (value, t) = divisor_candidate(n, a, x);
                SpikeUpper { value, divisor: a, t }
            })
            .fold(None, |best: Option<SpikeUpper>, c| match best {
                Some(b) if b.value >= c.value => Some(b),
                _ => Some(c),
            })
            .expect("2k+1 >= 3 has an odd divisor > 1")
    }
}

/// Which inequality rules a point out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolatedBound {
    /// `y < 2x^2 - 1`: not the image of any measure.
    BelowRiesz,
    /// `|x| >= 1/3` and `y > M(x)`.
    AboveMaxCurve,
    /// `|x| < 1/3`, `y > M(x)` and no spike contains the point.
    OutsideSpikes,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Certificate {
    /// `2x^2 - 1 <= y <= M(x)`.
    BelowMaxCurve,
    /// Inside the spike of index `k`; `divisor` and `t` realize the upper bound there.
    Spike {
        k: u64,
        divisor: u64,
        t: f64,
    },
    /// One of `(0, 1)`, `(+-1, 1)`.
    BoundaryY1Point,
    Outside(ViolatedBound),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegionVerdict {
    pub attainable: bool,
    pub certificate: Certificate,
    pub tolerance: f64,
}

impl RegionVerdict {
    fn inside(certificate: Certificate, tolerance: f64) -> Self {
        Self {
            attainable: true,
            certificate,
            tolerance,
        }
    }

    fn outside(bound: ViolatedBound, tolerance: f64) -> Self {
        Self {
            attainable: false,
            certificate: Certificate::Outside(bound),
            tolerance,
        }
    }
}

/// Shared part of both oracles: the Riesz lower bound and the max curve.
fn classify_by_max_curve(p: PlanePoint, tol: f64) -> Result<RegionVerdict, ViolatedBound> {
    let ax = p.x.abs();
    if p.y < 2.0 * ax * ax - 1.0 - tol {
        return Err(ViolatedBound::BelowRiesz);
    }
    if p.y <= max_curve(ax) + tol {
        let on_top = p.y >= 1.0 - tol && (ax <= tol || ax >= 1.0 - tol);
        let cert = if on_top {
            Certificate::BoundaryY1Point
        } else {
            Certificate::BelowMaxCurve
        };
        return Ok(RegionVerdict::inside(cert, tol));
    }
    Err(if ax >= 1.0 / 3.0 {
        ViolatedBound::AboveMaxCurve
    } else {
        ViolatedBound::OutsideSpikes
    })
}

/// Membership in the attainable region.
///
/// The spike search is finite: a spike of index `k` can only contain
/// `(x, y)` if `x <= x_k` (up to `tol`) and `y <= f2(k, x) <= (2k+1) x`,
/// which pins `2k + 1` between `(y - tol)/x` and `1/(x - tol)`.
pub fn is_attainable(p: PlanePoint, tol: f64) -> RegionVerdict {
    let bound = match classify_by_max_curve(p, tol) {
        Ok(v) => return v,
        Err(b) => b,
    };
    if bound == ViolatedBound::BelowRiesz || p.x.abs() > 1.0 / 3.0 + tol {
        return RegionVerdict::outside(bound, tol);
    }
    let ax = p.x.abs();
    // ax > tol / 4 here, otherwise the max-curve branch accepted the point.
    let n_hi = if ax > tol {
        (1.0 / (ax - tol)).floor()
    } else {
        f64::INFINITY
    };
    let n_lo = ((p.y - tol) / ax).ceil().max(3.0);
    let n_hi = n_hi.min(n_lo + 1e7);
    let mut n = n_lo as u64;
    if n % 2 == 0 {
        n += 1;
    }
    while (n as f64) <= n_hi {
        let spike = SpikeBoundary::new((n - 1) / 2).expect("n >= 3");
        let x = ax.min(spike.x_k);
        if spike.lower(x) - tol <= p.y {
            let upper = spike.upper(x);
            if p.y <= upper.value + tol {
                return RegionVerdict::inside(
                    Certificate::Spike {
                        k: spike.k,
                        divisor: upper.divisor,
                        t: upper.t,
                    },
                    tol,
                );
            }
        }
        n += 2;
    }
    RegionVerdict::outside(bound, tol)
}

/// Membership in the square-free attainable region: no spikes.
pub fn is_squarefree_attainable(p: PlanePoint, tol: f64) -> RegionVerdict {
    classify_by_max_curve(p, tol).unwrap_or_else(|bound| RegionVerdict::outside(bound, tol))
}

/// Snap `v` to `0`, `+-1` or `+-1/(2k+1)` when it is within `1e-12` of one.
fn snap_odd_reciprocal(v: f64) -> Option<f64> {
    const SNAP: f64 = 1e-12;
    let av = v.abs();
    if av <= SNAP {
        return Some(0.0);
    }
    if (1.0 - av).abs() <= SNAP {
        return Some(v.signum());
    }
    let n = (1.0 / av).round();
    if n >= 3.0 && n % 2.0 == 1.0 && (av - 1.0 / n).abs() <= SNAP {
        return Some(v.signum() / n);
    }
    None
}

/// Attainability of `eta_a = a delta_0 + (1 - a) delta_pi`, whose Fourier
/// point is `(2a - 1, 1)`.
///
/// The x-coordinate is snapped to the nearest candidate `0, +-1, +-1/(2k+1)`
/// and the snapped point is passed to [`is_attainable`]; anything that does
/// not snap lies on `y = 1` away from every attainable point.
pub fn classify_eta(a: f64) -> bool {
    if !(0.0..=1.0).contains(&a) {
        return false;
    }
    match snap_odd_reciprocal(2.0 * a - 1.0) {
        Some(x) => is_attainable(PlanePoint { x, y: 1.0 }, DEFAULT_TOLERANCE).attainable,
        None => false,
    }
}

/// Exact form of [`classify_eta`] for `a = num / den`.
pub fn classify_eta_exact(num: u64, den: u64) -> bool {
    if den == 0 || num > den {
        return false;
    }
    // 2a - 1 = (2 num - den) / den
    let diff = (2 * num).abs_diff(den);
    if diff == 0 || diff == den {
        return true;
    }
    den % diff == 0 && (den / diff) % 2 == 1
}

/// The product `(s, f2(k, s)) * (t, 2t^2 - 1)`.
///
/// With `s = x_k` fixed this traces `(x, f1(k, x))`; in general it fills the
/// spike between the two boundaries.
pub fn spike_sample(k: u64, s: f64, t: f64) -> Result<PlanePoint, RegionError> {
    let x_k = check_spike_domain(k, s)?;
    if s <= 0.0 || s > x_k {
        return Err(RegionError::Parameter { name: "s", value: s });
    }
    if !(t > 0.0 && t <= 1.0) {
        return Err(RegionError::Parameter { name: "t", value: t });
    }
    let upper = f2(k, s)?;
    PlanePoint::new(s * t, upper * (2.0 * t * t - 1.0))
}

//! Numeric checks of the inequalities behind the region classification.
//!
//! Each check sweeps a grid or draws seeded random samples and records the
//! largest amount by which any inequality fails. Strict inequalities are
//! tested as non-strict with a small tolerance; "strictly decreasing" is
//! tested as non-increasing plus a bound on the longest flat run.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_4, PI};
use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::measures::{g_kernel, sinc};

/// Tolerance for inequalities evaluated in plain double precision.
pub const STRICT_TOLERANCE: f64 = 1e-12;

/// Longest tolerated run of equal consecutive values, as a fraction of the grid.
const FLAT_RUN_FRACTION: f64 = 0.01;

/// Points with `log(A |G_A(t)|)` below this are skipped in the convexity sweep.
pub const LOG_CLIP: f64 = -30.0;

#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub name: String,
    pub grid_points: usize,
    pub max_violation: f64,
    pub passed: bool,
    pub tolerance: f64,
    pub seed: Option<u64>,
    /// The sample realizing `max_violation`, when it is positive.
    pub worst_sample: Option<String>,
    pub note: Option<String>,
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} points={} max_violation={:e} tol={:e}",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.grid_points,
            self.max_violation,
            self.tolerance
        )?;
        if let Some(seed) = self.seed {
            write!(f, " seed={seed}")?;
        }
        if !self.passed {
            if let Some(sample) = &self.worst_sample {
                write!(f, " worst: {sample}")?;
            }
        }
        if let Some(note) = &self.note {
            write!(f, " ({note})")?;
        }
        Ok(())
    }
}

/// Accumulates violations. Constraints with their own tolerance are rescaled
/// to the report tolerance, so `passed` stays `max_violation <= tolerance`.
struct Tracker {
    name: &'static str,
    tolerance: f64,
    seed: Option<u64>,
    points: usize,
    worst: f64,
    worst_sample: Option<String>,
}

impl Tracker {
    fn new(name: &'static str, tolerance: f64, seed: Option<u64>) -> Self {
        Self {
            name,
            tolerance,
            seed,
            points: 0,
            worst: 0.0,
            worst_sample: None,
        }
    }

    fn point(&mut self) {
        self.points += 1;
    }

    fn observe(&mut self, violation: f64, sample: impl FnOnce() -> String) {
        self.observe_with(violation, self.tolerance, sample);
    }

    fn observe_with(&mut self, violation: f64, tol: f64, sample: impl FnOnce() -> String) {
        let scaled = if violation.is_nan() {
            f64::INFINITY
        } else {
            violation * (self.tolerance / tol)
        };
        if scaled > self.worst {
            self.worst = scaled;
            self.worst_sample = Some(sample());
        }
    }

    fn finish(self, note: Option<String>) -> CheckReport {
        CheckReport {
            name: self.name.to_string(),
            grid_points: self.points,
            max_violation: self.worst,
            passed: self.worst <= self.tolerance,
            tolerance: self.tolerance,
            seed: self.seed,
            worst_sample: self.worst_sample,
            note,
        }
    }
}

/// Checks that `values` is non-increasing along `grid` and has no long flat run.
fn observe_decreasing(tracker: &mut Tracker, grid: &[f64], values: &[f64], label: &str) {
    let max_run = ((values.len() as f64 * FLAT_RUN_FRACTION) as usize).max(2);
    let mut run = 0;
    for i in 1..values.len() {
        tracker.point();
        let rise = values[i] - values[i - 1];
        tracker.observe(rise, || format!("{label} rises by {rise:e} at t={}", grid[i]));
        if rise == 0.0 {
            run += 1;
            if run > max_run {
                tracker.observe(f64::INFINITY, || {
                    format!("{label} flat for {run} points ending at t={}", grid[i])
                });
            }
        } else {
            run = 0;
        }
    }
}

fn uniform_grid(lo: f64, hi: f64, points: usize) -> Vec<f64> {
    (0..points)
        .map(|i| lo + (hi - lo) * i as f64 / (points - 1) as f64)
        .collect()
}

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// `sin(t)/t` is non-negative and decreasing on `[0, pi]`.
pub fn check_sinc_decreasing(grid: usize) -> CheckReport {
    let mut tracker = Tracker::new("sinc-decreasing", STRICT_TOLERANCE, None);
    let ts = uniform_grid(0.0, PI, grid.max(10));
    let values: Vec<f64> = ts.iter().map(|&t| sinc(t)).collect();
    observe_decreasing(&mut tracker, &ts, &values, "sinc");
    for (&t, &v) in ts.iter().zip(&values) {
        tracker.observe(-v, || format!("sinc({t}) = {v:e} < 0"));
    }
    tracker.finish(None)
}

/// `h(t) = t^3 cos t / sin^3 t`, with `h(0) = 1`.
///
/// Below `t = 0.01` the Taylor form `1 - t^4/15 - 4 t^6/189` is used; the
/// direct quotient loses the `t^4` decrement to rounding there.
pub fn h_function(t: f64) -> f64 {
    if t < 0.01 {
        let t2 = t * t;
        1.0 - t2 * t2 / 15.0 - 4.0 * t2 * t2 * t2 / 189.0
    } else {
        let s = t.sin();
        t * t * t * t.cos() / (s * s * s)
    }
}

/// `h` is decreasing on `[0, pi/2]`.
pub fn check_h_decreasing(grid: usize) -> CheckReport {
    let mut tracker = Tracker::new("h-decreasing", STRICT_TOLERANCE, None);
    let ts = uniform_grid(0.0, FRAC_PI_2, grid.max(10));
    let values: Vec<f64> = ts.iter().map(|&t| h_function(t)).collect();
    observe_decreasing(&mut tracker, &ts, &values, "h");
    tracker.finish(None)
}

/// The auxiliary function `q(s)` whose sign controls the convexity of the
/// log-corner curves.
pub fn q_function(s: f64) -> f64 {
    let (sn, c) = s.sin_cos();
    let s2 = s * s;
    let c2 = c * c;
    let c3 = c2 * c;
    2.0 * c3 * sn * s2 - c3 * sn + c * sn * s2 - 4.0 * c2 * sn * sn * s - s2 * s + sn * c + s * sn * sn
}

fn rational_sin_cos(s: &BigRational, terms: u32) -> (BigRational, BigRational) {
    let s2 = s * s;
    let mut sin = BigRational::zero();
    let mut cos = BigRational::zero();
    let mut sin_term = s.clone();
    let mut cos_term = BigRational::one();
    for k in 0..terms {
        sin += &sin_term;
        cos += &cos_term;
        let (a, b) = (BigInt::from(2 * k + 2), BigInt::from(2 * k + 3));
        sin_term = -(sin_term * &s2) / BigRational::from_integer(&a * &b);
        let (c, d) = (BigInt::from(2 * k + 1), BigInt::from(2 * k + 2));
        cos_term = -(cos_term * &s2) / BigRational::from_integer(&c * &d);
    }
    (sin, cos)
}

/// `q(s) / s^9` at `s = 1/100`, evaluated in exact rational arithmetic from
/// truncated sine and cosine series (error far below `1e-60`).
///
/// In double precision `q(0.01) ~ 1e-19` is lost under the `O(s)` terms that
/// cancel, so the leading coefficient is only visible at higher precision.
pub fn q_leading_coefficient_estimate() -> f64 {
    let s = BigRational::new(BigInt::from(1), BigInt::from(100));
    let (sn, c) = rational_sin_cos(&s, 20);
    let s2 = &s * &s;
    let c2 = &c * &c;
    let c3 = &c2 * &c;
    let two = BigRational::from_integer(BigInt::from(2));
    let four = BigRational::from_integer(BigInt::from(4));
    let q = &two * &c3 * &sn * &s2 - &c3 * &sn + &c * &sn * &s2 - &four * &c2 * &sn * &sn * &s - &s2 * &s
        + &sn * &c
        + &s * &sn * &sn;
    let s9 = (0..9).fold(BigRational::one(), |acc, _| acc * &s);
    (q / s9).to_f64().expect("finite ratio")
}

/// `q(s) <= 0` on `[0, pi/2]`, and its Taylor expansion starts `-16/135 s^9`.
pub fn check_q_nonpositive(grid: usize) -> CheckReport {
    const LEADING: f64 = -16.0 / 135.0;
    const LEADING_REL_TOL: f64 = 0.01;
    let mut tracker = Tracker::new("q-nonpositive", STRICT_TOLERANCE, None);
    for s in uniform_grid(0.0, FRAC_PI_2, grid.max(10)) {
        tracker.point();
        let q = q_function(s);
        tracker.observe(q, || format!("q({s}) = {q:e}"));
    }
    let estimate = q_leading_coefficient_estimate();
    let rel = (estimate / LEADING - 1.0).abs();
    tracker.point();
    tracker.observe_with(rel - LEADING_REL_TOL, STRICT_TOLERANCE, || {
        format!("q(s)/s^9 at s=0.01 is {estimate}, expected {LEADING}")
    });
    tracker.finish(Some(format!("q(0.01)/0.01^9 = {estimate:.6}")))
}

/// For `A >= 4`, `|G_A(t)| < 1/3` on `(pi/A, pi/2]`; for `A = 3` the only
/// point of `(pi/3, pi/2]` reaching `1/3` is `t = pi/2`.
pub fn check_one_third_lemma(a_max: u32, grid: usize) -> CheckReport {
    let mut tracker = Tracker::new("one-third", STRICT_TOLERANCE, None);
    let grid = grid.max(10);
    for a in 3..=a_max.max(4) {
        let lo = PI / f64::from(a);
        for i in 1..=grid {
            let t = lo + (FRAC_PI_2 - lo) * i as f64 / grid as f64;
            if a == 3 && i == grid {
                continue;
            }
            tracker.point();
            let v = g_kernel(a, t).abs() - 1.0 / 3.0;
            tracker.observe(v, || format!("|G_{a}({t})| - 1/3 = {v:e}"));
        }
    }
    let corner = g_kernel(3, FRAC_PI_2);
    tracker.point();
    tracker.observe((corner.abs() - 1.0 / 3.0).abs(), || format!("G_3(pi/2) = {corner}"));
    tracker.finish(Some(format!("A=3 exception at t=pi/2: G_3 = {corner:.17}")))
}

/// Along `gamma_A`, `|G_A(theta)| > 1/3` forces `G_A(2 theta) <= G_A(theta)^4`.
pub fn check_prime_curve_below_x4(a_max: u32, grid: usize) -> CheckReport {
    let mut tracker = Tracker::new("prime-curve-below-x4", STRICT_TOLERANCE, None);
    let ts = uniform_grid(0.0, PI, grid.max(10));
    for a in 2..=a_max.max(2) {
        for &t in &ts {
            tracker.point();
            let x = g_kernel(a, t);
            if x.abs() <= 1.0 / 3.0 {
                continue;
            }
            let y = g_kernel(a, 2.0 * t);
            let v = y - x.powi(4);
            tracker.observe(v, || format!("A={a} theta={t}: y - x^4 = {v:e}"));
        }
    }
    tracker.finish(None)
}

fn b1_violation(x: f64, y: f64) -> f64 {
    let mix = 2.0 * x.abs() - 1.0;
    (x.abs() - 0.5).max(-y).max(y - mix * mix)
}

fn sample_b2(rng: &mut ChaCha8Rng) -> (f64, f64) {
    let x = rng.gen_range(-FRAC_1_SQRT_2..=FRAC_1_SQRT_2);
    let y = rng.gen_range((2.0 * x * x - 1.0)..=0.0);
    (x, y)
}

/// `B2 * B2` lies in `B1`, where
/// `B1 = {|x| <= 1/2, 0 <= y <= (2|x|-1)^2}` and
/// `B2 = {|x| <= 1/sqrt 2, 2x^2 - 1 <= y <= 0}`.
pub fn check_b2_product(samples: usize, seed: u64) -> CheckReport {
    let mut tracker = Tracker::new("b2-product", STRICT_TOLERANCE, Some(seed));
    let mut rng = rng_for(seed, 1);
    let fixed = [
        ((0.5, -0.5), (0.5, -0.5)),
        ((0.0, -1.0), (0.0, -1.0)),
        ((FRAC_1_SQRT_2, 0.0), (FRAC_1_SQRT_2, 0.0)),
    ];
    for (p, q) in fixed {
        tracker.point();
        let v = b1_violation(p.0 * q.0, p.1 * q.1);
        tracker.observe(v, || format!("{p:?} * {q:?}"));
    }
    for _ in 0..samples {
        let p = sample_b2(&mut rng);
        let q = sample_b2(&mut rng);
        tracker.point();
        let v = b1_violation(p.0 * q.0, p.1 * q.1);
        tracker.observe(v, || format!("{p:?} * {q:?}"));
    }
    tracker.finish(None)
}

/// `(log(A |G_A(pi/2 - u)|), log(G_A(pi - 2u)))` for odd `A` and
/// `u in [0, pi/(2A))`, evaluated without cancellation near `u = 0`.
///
/// The first coordinate is `log(cos(Au)/cos u)`, written through
/// `cos(Au) - cos u = -2 sin((A+1)u/2) sin((A-1)u/2)`; the second adds
/// `log G_A(u) = sum_j log(1 - sin^2 u / sin^2(j pi / A))`, `j = 1..(A-1)/2`.
pub fn log_corner_curve(a: u32, u: f64) -> (f64, f64) {
    debug_assert!(a % 2 == 1 && a >= 3);
    let af = f64::from(a);
    let diff = -2.0 * ((af + 1.0) * u / 2.0).sin() * ((af - 1.0) * u / 2.0).sin();
    let z = (diff / u.cos()).ln_1p();
    let su = u.sin();
    let log_g: f64 = (1..=(a - 1) / 2)
        .map(|j| {
            let sj = (f64::from(j) * PI / af).sin();
            (-(su * su) / (sj * sj)).ln_1p()
        })
        .sum();
    (z, z + log_g)
}

/// In log coordinates the corner curve of odd `A` is the graph of a convex
/// increasing `h_A` with `h_A(0) = 0` and slope at most `4/3`, reached at 0.
pub fn check_eta_convexity(a_max: u32, grid: usize) -> CheckReport {
    const CONVEXITY_TOL: f64 = 1e-8;
    const SLOPE_TOL: f64 = 1e-6;
    const ENDPOINT_TOL: f64 = 1e-3;
    let mut tracker = Tracker::new("eta-convexity", CONVEXITY_TOL, None);
    let grid = grid.max(10);
    let mut endpoint_slopes = Vec::new();
    for a in (3..=a_max.max(3)).step_by(2) {
        let u_max = PI / (2.0 * f64::from(a));
        // z increasing towards 0 as u decreases to 0.
        let mut pts: Vec<(f64, f64)> = (0..grid)
            .map(|i| u_max * i as f64 / grid as f64)
            .map(|u| log_corner_curve(a, u))
            .filter(|&(z, _)| z >= LOG_CLIP)
            .collect();
        pts.reverse();
        let (z0, w0) = *pts.last().expect("u = 0 is on the grid");
        tracker.point();
        tracker.observe(z0.abs().max(w0.abs()), || format!("A={a}: h(0) = {w0} at z = {z0}"));

        let slopes: Vec<(f64, f64)> = pts
            .windows(2)
            .map(|w| ((w[1].1 - w[0].1) / (w[1].0 - w[0].0), w[1].0 - w[0].0))
            .collect();
        for (i, &(s, _)) in slopes.iter().enumerate() {
            tracker.point();
            let z = pts[i].0;
            tracker.observe_with(-s, CONVEXITY_TOL, || format!("A={a} z={z}: slope {s} <= 0"));
            tracker.observe_with(s - 4.0 / 3.0, SLOPE_TOL, || format!("A={a} z={z}: slope {s} > 4/3"));
        }
        for i in 0..slopes.len().saturating_sub(1) {
            let d2 = 2.0 * (slopes[i + 1].0 - slopes[i].0) / (pts[i + 2].0 - pts[i].0);
            let z = pts[i + 1].0;
            tracker.observe(-d2, || format!("A={a} z={z}: second difference {d2:e}"));
        }
        let last = slopes.last().expect("grid has at least two points").0;
        endpoint_slopes.push((a, last));
        tracker.observe_with((last - 4.0 / 3.0).abs(), ENDPOINT_TOL, || {
            format!("A={a}: slope next to z=0 is {last}, expected 4/3")
        });
    }
    let worst_end = endpoint_slopes
        .iter()
        .map(|&(_, s)| (s - 4.0 / 3.0).abs())
        .fold(0.0, f64::max);
    tracker.finish(Some(format!("max |slope(0-) - 4/3| = {worst_end:.2e}")))
}

/// Product point of `gamma_{A_i}(t_i)` over a list of factors.
fn product_point(factors: &[(u32, f64)]) -> (f64, f64) {
    factors.iter().fold((1.0, 1.0), |(x, y), &(a, t)| {
        (x * g_kernel(a, t), y * g_kernel(a, 2.0 * t))
    })
}

fn random_odd_corner_factors(rng: &mut ChaCha8Rng) -> Vec<(u32, f64)> {
    loop {
        let k = rng.gen_range(1..=4);
        let a: Vec<u32> = (0..k).map(|_| 2 * rng.gen_range(1..=49) + 1).collect();
        if a.iter().map(|&a| u64::from(a)).product::<u64>() > 100_000 {
            continue;
        }
        return a
            .into_iter()
            .map(|a| {
                let lo = FRAC_PI_2 - PI / (2.0 * f64::from(a));
                (a, rng.gen_range(lo..=FRAC_PI_2))
            })
            .collect();
    }
}

/// Products of corner points of odd curves satisfy `y >= (A |x|)^(4/3)`,
/// `A` the product of the `A_i`.
pub fn check_corner_lower_bound(samples: usize, seed: u64) -> CheckReport {
    const TOL: f64 = 1e-9;
    let mut tracker = Tracker::new("corner-lower-bound", TOL, Some(seed));
    let mut rng = rng_for(seed, 2);
    let fixed = [
        vec![(3, FRAC_PI_2)],
        vec![(3, 5.0 * PI / 12.0)],
        vec![(3, FRAC_PI_2), (5, 1.4)],
    ];
    let random = (0..samples).map(|_| random_odd_corner_factors(&mut rng));
    for factors in fixed.into_iter().chain(random) {
        tracker.point();
        let a: f64 = factors.iter().map(|&(a, _)| f64::from(a)).product();
        let (x, y) = product_point(&factors);
        let v = (a * x.abs()).powf(4.0 / 3.0) - y;
        tracker.observe(v, || format!("{factors:?}: (x, y) = ({x}, {y})"));
    }
    tracker.finish(None)
}

/// `(2x1^2 - 1)(2x2^2 - 1) >= 2(x1 x2)^2 - 1` via the identity
/// `LHS - RHS = 2(x1^2 - 1)(x2^2 - 1)`.
pub fn check_convexity_identity(samples: usize, seed: u64) -> CheckReport {
    let mut tracker = Tracker::new("convexity-identity", STRICT_TOLERANCE, Some(seed));
    let mut rng = rng_for(seed, 3);
    let fixed = [(1.0, 1.0), (0.0, 0.0), (0.6, 0.8)];
    let random: Vec<(f64, f64)> = (0..samples)
        .map(|_| (rng.gen_range(0.0..=1.0), rng.gen_range(0.0..=1.0)))
        .collect();
    for (x1, x2) in fixed.into_iter().chain(random) {
        tracker.point();
        let lhs = (2.0 * x1 * x1 - 1.0) * (2.0 * x2 * x2 - 1.0);
        let rhs = 2.0 * (x1 * x2) * (x1 * x2) - 1.0;
        let identity = 2.0 * (x1 * x1 - 1.0) * (x2 * x2 - 1.0);
        tracker.observe(rhs - lhs, || format!("x1={x1} x2={x2}: inequality"));
        let gap = (lhs - rhs - identity).abs();
        tracker.observe(gap, || format!("x1={x1} x2={x2}: identity off by {gap:e}"));
    }
    tracker.finish(None)
}

/// Trigger interval for the mixed-sign bound: odd `A` needs
/// `t in [pi/(2A), pi/2 - pi/(2A)]`, even `A` needs `t in [pi/(2A), pi/2]`.
fn trigger_interval(a: u32) -> (f64, f64) {
    let lo = PI / (2.0 * f64::from(a));
    if a % 2 == 1 {
        (lo, FRAC_PI_2 - lo)
    } else {
        (lo, FRAC_PI_2)
    }
}

/// Single-curve dichotomy for a triggered factor: `A = 2` gives `y <= 0`;
/// `A >= 3` gives `y <= 0`, or `y <= (2|x|-1)^2` with `|x| < 1/3`.
fn single_curve_violation(a: u32, t: f64) -> f64 {
    let (x, y) = (g_kernel(a, t), g_kernel(a, 2.0 * t));
    if a == 2 || y <= STRICT_TOLERANCE {
        return if a == 2 { y } else { 0.0 };
    }
    let mix = 2.0 * x.abs() - 1.0;
    (y - mix * mix).max(x.abs() - 1.0 / 3.0)
}

/// Finite products of curve points with at least one triggered factor lie
/// under `y = (2|x| - 1)^2`.
///
/// The bound is checked in this form. The note reports how many samples
/// would violate the variant `y <= 2|x|^2 - 1`, which is not a valid bound.
pub fn check_mixed_sign_region(samples: usize, seed: u64) -> CheckReport {
    const TOL: f64 = 1e-9;
    let mut tracker = Tracker::new("mixed-sign-region", TOL, Some(seed));
    let mut rng = rng_for(seed, 4);
    let mut variant_failures = 0usize;
    let fixed = [vec![(2, PI / 3.0)], vec![(5, FRAC_PI_4)], vec![(3, PI / 4.0), (2, 0.3)]];
    let random = (0..samples).map(|_| {
        let k = rng.gen_range(1..=4);
        let a0 = rng.gen_range(2..=50);
        let (lo, hi) = trigger_interval(a0);
        let mut factors = vec![(a0, rng.gen_range(lo..=hi))];
        for _ in 1..k {
            factors.push((rng.gen_range(2..=50), rng.gen_range(0.0..=FRAC_PI_2)));
        }
        factors
    });
    let all: Vec<Vec<(u32, f64)>> = fixed.into_iter().chain(random).collect();
    for factors in &all {
        tracker.point();
        let (x, y) = product_point(factors);
        let mix = 2.0 * x.abs() - 1.0;
        tracker.observe(y - mix * mix, || format!("{factors:?}: (x, y) = ({x}, {y})"));
        if y > 2.0 * x * x - 1.0 + TOL {
            variant_failures += 1;
        }
        let (a0, t0) = factors[0];
        let single = single_curve_violation(a0, t0);
        tracker.observe(single, || format!("single factor A={a0} t={t0}"));
    }
    tracker.finish(Some(format!(
        "{variant_failures} of {} samples exceed 2|x|^2-1; bound tested as (2|x|-1)^2",
        all.len()
    )))
}

/// Names accepted by [`run_check`], in suite order.
pub const SUITE: &[&str] = &[
    "sinc-decreasing",
    "h-decreasing",
    "q-nonpositive",
    "one-third",
    "prime-curve-below-x4",
    "b2-product",
    "eta-convexity",
    "corner-lower-bound",
    "convexity-identity",
    "mixed-sign-region",
];

/// Runs one named check at its default size, or `None` for an unknown name.
pub fn run_check(name: &str, seed: u64) -> Option<CheckReport> {
    let report = match name {
        "sinc-decreasing" => check_sinc_decreasing(10_000),
        "h-decreasing" => check_h_decreasing(100_000),
        "q-nonpositive" => check_q_nonpositive(100_000),
        "one-third" => check_one_third_lemma(100, 10_000),
        "prime-curve-below-x4" => check_prime_curve_below_x4(50, 10_000),
        "b2-product" => check_b2_product(100_000, seed),
        "eta-convexity" => check_eta_convexity(21, 10_000),
        "corner-lower-bound" => check_corner_lower_bound(10_000, seed),
        "convexity-identity" => check_convexity_identity(100_000, seed),
        "mixed-sign-region" => check_mixed_sign_region(10_000, seed),
        _ => return None,
    };
    Some(report)
}

/// The full suite, checks run in parallel, reports in [`SUITE`] order.
pub fn run_suite(seed: u64) -> Vec<CheckReport> {
    SUITE
        .par_iter()
        .map(|name| run_check(name, seed).expect("suite names are known"))
        .collect()
}

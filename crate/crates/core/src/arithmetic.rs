//! Integer arithmetic for sums of two squares.
//!
//! Factorization is deterministic trial division with a mod-30 wheel; the
//! intended range is "desk scale" (the CLI caps scans at 10^9). Lattice
//! points on the circle of radius sqrt(n) are enumerated directly, which also
//! serves as an independent check of the closed-form count [`r2`].

use std::f64::consts::FRAC_PI_4;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithmeticError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} is not congruent to 1 mod 4")]
    NotSplit(u64),
    #[error("expected a positive integer, got 0")]
    Zero,
}

/// Prime factorization `n = prod p^e`, primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub n: u64,
    pub factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    pub fn is_prime(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    /// True iff every prime `q = 3 mod 4` appears to an even power.
    pub fn is_sum_of_two_squares(&self) -> bool {
        self.factors.iter().all(|&(p, e)| p % 4 != 3 || e % 2 == 0)
    }

    /// Closed form `r2(n) = 4 prod_{p = 1 mod 4} (e + 1)`, zero outside S.
    pub fn r2(&self) -> u64 {
        if !self.is_sum_of_two_squares() {
            return 0;
        }
        4 * self
            .factors
            .iter()
            .filter(|&&(p, _)| p % 4 == 1)
            .map(|&(_, e)| u64::from(e) + 1)
            .product::<u64>()
    }

    /// The split part: `(p, e)` with `p = 1 mod 4`.
    pub fn split_primes(&self) -> impl Iterator<Item = (u64, u32)> + '_ {
        self.factors.iter().copied().filter(|&(p, _)| p % 4 == 1)
    }
}

// Gaps of the mod-30 wheel starting from 7.
const WHEEL: [u64; 8] = [4, 2, 4, 2, 4, 6, 2, 6];

/// Trial-division factorization. `factorize(1)` has no factors.
///
/// Panics on `n == 0`.
pub fn factorize(n: u64) -> Factorization {
    assert!(n > 0, "factorize(0) is undefined");
    let mut factors = Vec::new();
    let mut rest = n;
    for p in [2u64, 3, 5] {
        let mut e = 0;
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    }
    let mut d = 7u64;
    let mut w = 0;
    while d <= rest / d {
        if rest % d == 0 {
            let mut e = 0;
            while rest % d == 0 {
                rest /= d;
                e += 1;
            }
            factors.push((d, e));
        }
        d += WHEEL[w];
        w = (w + 1) % WHEEL.len();
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Factorization { n, factors }
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n).is_prime()
}

/// Membership in S: `n` is a (nonzero) sum of two integer squares.
pub fn is_in_s(n: u64) -> bool {
    n >= 1 && factorize(n).is_sum_of_two_squares()
}

pub fn r2(n: u64) -> u64 {
    factorize(n).r2()
}

/// A lattice point `a + bi` on the circle `a^2 + b^2 = n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GaussianPoint {
    pub a: i64,
    pub b: i64,
}

impl GaussianPoint {
    pub fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }

    pub fn norm(&self) -> u64 {
        (self.a * self.a + self.b * self.b) as u64
    }

    pub fn arg(&self) -> f64 {
        (self.b as f64).atan2(self.a as f64)
    }
}

/// Largest `r` with `r * r <= n`.
pub fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

fn exact_sqrt(n: u64) -> Option<u64> {
    let r = isqrt(n);
    (r * r == n).then_some(r)
}

/// All of `Lambda_n`, sorted.
///
/// Scans `a` in `[0, isqrt(n)]` with a perfect-square test and closes the
/// result under sign changes. The cardinality is `r2(n)`.
pub fn lattice_points(n: u64) -> Vec<GaussianPoint> {
    let mut points = Vec::new();
    if n == 0 {
        return points;
    }
    for a in 0..=isqrt(n) {
        let Some(b) = exact_sqrt(n - a * a) else {
            continue;
        };
        let (a, b) = (a as i64, b as i64);
        for sa in [1, -1] {
            for sb in [1, -1] {
                points.push(GaussianPoint::new(sa * a, sb * b));
            }
        }
    }
    points.sort_unstable();
    points.dedup();
    points
}

/// The canonical angle attached to a split prime.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SplitPrimeAngle {
    pub p: u64,
    /// `atan2(min(|a|,|b|), max(|a|,|b|))` for `a^2 + b^2 = p`, in `[0, pi/4]`.
    pub lattice_angle: f64,
    /// `4 * lattice_angle`, in `[0, pi]`.
    pub desym_angle: f64,
}

pub fn split_prime_angle(p: u64) -> Result<SplitPrimeAngle, ArithmeticError> {
    if p == 0 {
        return Err(ArithmeticError::Zero);
    }
    if !is_prime(p) {
        return Err(ArithmeticError::NotPrime(p));
    }
    if p % 4 != 1 {
        return Err(ArithmeticError::NotSplit(p));
    }
    // a >= b >= 0; for a prime the representation is unique up to symmetry.
    let (a, b) = (0..=isqrt(p))
        .rev()
        .find_map(|a| exact_sqrt(p - a * a).map(|b| (a, b)))
        .map(|(a, b)| (a.max(b), a.min(b)))
        .expect("split prime has a representation");
    let lattice_angle = (b as f64).atan2(a as f64);
    debug_assert!(lattice_angle <= FRAC_PI_4 + 1e-15);
    Ok(SplitPrimeAngle {
        p,
        lattice_angle,
        desym_angle: 4.0 * lattice_angle,
    })
}

/// Outcome of a bounded prime search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrimeSearch {
    /// Found the requested number of primes.
    Complete(Vec<u64>),
    /// The search limit was reached first; whatever was found is kept.
    Exhausted(Vec<u64>),
}

impl PrimeSearch {
    pub fn primes(&self) -> &[u64] {
        match self {
            PrimeSearch::Complete(p) | PrimeSearch::Exhausted(p) => p,
        }
    }

    pub fn is_complete(&self) -> bool {
        matches!(self, PrimeSearch::Complete(_))
    }
}

/// Split primes whose lattice angle is below `epsilon`, in increasing order.
///
/// Products of such primes have all their lattice points within `epsilon` of
/// the axes, which is how Cilleruelo-type sequences concentrate on `pi/2 Z`.
pub fn cilleruelo_primes(epsilon: f64, count: usize, search_limit: u64) -> PrimeSearch {
    let mut found = Vec::with_capacity(count);
    if count == 0 {
        return PrimeSearch::Complete(found);
    }
    let mut p = 5;
    while p <= search_limit {
        if let Ok(angle) = split_prime_angle(p) {
            if angle.lattice_angle < epsilon {
                found.push(p);
                if found.len() == count {
                    return PrimeSearch::Complete(found);
                }
            }
        }
        p += 4;
    }
    PrimeSearch::Exhausted(found)
}

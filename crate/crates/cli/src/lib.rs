//! Command implementations behind the `attainable` binary.
//!
//! Every command writes to a caller-supplied [`Output`] so the binary can point
//! it at stdout or a file and tests can capture it.

use std::fmt::Write as _;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use attainable_core::arithmetic::{factorize, is_prime, split_prime_angle, Factorization};
use attainable_core::measures::{cantor_measure_fourier, g_kernel, MeasureError};
use attainable_core::region::{
    f1, f2, is_attainable, is_squarefree_attainable, spike_corner, spike_sample, Certificate, PlanePoint, RegionError,
    RegionVerdict, ViolatedBound,
};
use attainable_core::verify::{self, CheckReport};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Largest `max_n` accepted by [`cmd_scan`].
pub const SCAN_CAP: u64 = 1_000_000_000;

/// Numbers handed to the worker pool per write.
const SCAN_BLOCK: u64 = 1 << 18;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error(transparent)]
    Region(#[from] RegionError),
    #[error(transparent)]
    Measure(#[from] MeasureError),
}

impl CliError {
    fn io(path: &str) -> impl FnOnce(io::Error) -> CliError + '_ {
        move |source| CliError::Io {
            path: path.to_string(),
            source,
        }
    }
}

/// Buffered output target; `path = None` means stdout.
pub struct Output {
    label: String,
    inner: BufWriter<Box<dyn Write>>,
}

impl Output {
    pub fn open(path: Option<&Path>) -> Result<Self, CliError> {
        let (label, sink): (String, Box<dyn Write>) = match path {
            Some(p) => {
                let label = p.display().to_string();
                let file = File::create(p).map_err(CliError::io(&label))?;
                (label, Box::new(file))
            }
            None => ("<stdout>".to_string(), Box::new(io::stdout())),
        };
        Ok(Self {
            label,
            inner: BufWriter::new(sink),
        })
    }

    pub fn from_writer(label: &str, writer: Box<dyn Write>) -> Self {
        Self {
            label: label.to_string(),
            inner: BufWriter::new(writer),
        }
    }

    pub fn line(&mut self, line: &str) -> Result<(), CliError> {
        self.inner
            .write_all(line.as_bytes())
            .and_then(|_| self.inner.write_all(b"\n"))
            .map_err(CliError::io(&self.label))
    }

    pub fn finish(mut self) -> Result<(), CliError> {
        self.inner.flush().map_err(CliError::io(&self.label))
    }
}

/// `%.17g`: 17 significant digits, trailing zeros dropped. Round-trips every
/// finite double.
pub fn format_float(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return if v.is_nan() {
            "nan".to_string()
        } else if v > 0.0 {
            "inf".to_string()
        } else {
            "-inf".to_string()
        };
    }
    let sci = format!("{v:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-4..17).contains(&exp) {
        let fixed = format!("{:.*}", (16 - exp) as usize, v);
        trim_zeros(&fixed).to_string()
    } else {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim_zeros(mantissa), exp.abs())
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanRow {
    pub n: u64,
    pub r2: u64,
    pub x: f64,
    pub y: f64,
}

impl ScanRow {
    pub const HEADER: &'static str = "n,r2,x,y";

    /// The row for `n`, or `None` when `n` is not a sum of two squares.
    ///
    /// `nu_n` is the convolution of `delta_pi` once per factor 2, `delta_0`
    /// for primes `3 mod 4`, and `upsilon(theta_p; e)` for each split `p^e`,
    /// so the coefficients are products of `G_{e+1}` values.
    pub fn for_n(n: u64) -> Option<Self> {
        Self::from_factorization(&factorize(n))
    }

    pub fn from_factorization(f: &Factorization) -> Option<Self> {
        if !f.is_sum_of_two_squares() {
            return None;
        }
        let mut x = 1.0;
        let mut y = 1.0;
        for &(p, e) in &f.factors {
            if p == 2 && e % 2 == 1 {
                x = -x;
            } else if p % 4 == 1 {
                let theta = split_prime_angle(p).expect("p = 1 mod 4 is split").desym_angle;
                x *= g_kernel(e + 1, theta);
                y *= g_kernel(e + 1, 2.0 * theta);
            }
        }
        Some(Self {
            n: f.n,
            r2: f.r2(),
            x,
            y,
        })
    }

    pub fn csv(&self) -> String {
        format!(
            "{},{},{},{}",
            self.n,
            self.r2,
            format_float(self.x),
            format_float(self.y)
        )
    }
}

/// Rows for `n in S`, `n <= max_n`, ascending. Blocks are computed in
/// parallel and written in order, so the output does not depend on the
/// worker count.
pub fn cmd_scan(max_n: u64, squarefree_only: bool, out: &mut Output) -> Result<usize, CliError> {
    if max_n == 0 || max_n > SCAN_CAP {
        return Err(CliError::Invalid(format!(
            "max-n must be in 1..={SCAN_CAP}, got {max_n}"
        )));
    }
    out.line(ScanRow::HEADER)?;
    let mut written = 0;
    let mut lo = 1;
    while lo <= max_n {
        let hi = max_n.min(lo + SCAN_BLOCK - 1);
        let rows: Vec<ScanRow> = (lo..=hi)
            .into_par_iter()
            .filter_map(|n| {
                let f = factorize(n);
                if squarefree_only && !f.is_squarefree() {
                    return None;
                }
                ScanRow::from_factorization(&f)
            })
            .collect();
        for row in &rows {
            out.line(&row.csv())?;
        }
        written += rows.len();
        lo = hi + 1;
    }
    Ok(written)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
    All,
}

impl Parity {
    pub fn admits(self, m: u32) -> bool {
        match self {
            Parity::Even => m % 2 == 0,
            Parity::Odd => m % 2 == 1,
            Parity::All => true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrimePowerRow {
    pub p: u64,
    pub m: u32,
    pub x: f64,
    pub y: f64,
}

impl PrimePowerRow {
    pub const HEADER: &'static str = "p,M,x,y";

    pub fn csv(&self) -> String {
        format!(
            "{},{},{},{}",
            self.p,
            self.m,
            format_float(self.x),
            format_float(self.y)
        )
    }
}

/// Points `gamma_{M+1}(theta_p)` for split primes `p <= max_prime`.
pub fn prime_power_rows(max_exp: u32, max_prime: u64, parity: Parity) -> Result<Vec<PrimePowerRow>, CliError> {
    if max_exp == 0 {
        return Err(CliError::Invalid("max-exp must be at least 1".into()));
    }
    let primes: Vec<u64> = (5..=max_prime).step_by(4).filter(|&p| is_prime(p)).collect();
    let rows = primes
        .par_iter()
        .map(|&p| {
            let theta = split_prime_angle(p).expect("p = 1 mod 4 is split").desym_angle;
            (1..=max_exp)
                .filter(|&m| parity.admits(m))
                .map(|m| PrimePowerRow {
                    p,
                    m,
                    x: g_kernel(m + 1, theta),
                    y: g_kernel(m + 1, 2.0 * theta),
                })
                .collect::<Vec<_>>()
        })
        .collect::<Vec<_>>()
        .concat();
    Ok(rows)
}

pub fn cmd_prime_powers(max_exp: u32, max_prime: u64, parity: Parity, out: &mut Output) -> Result<usize, CliError> {
    let rows = prime_power_rows(max_exp, max_prime, parity)?;
    out.line(PrimePowerRow::HEADER)?;
    for row in &rows {
        out.line(&row.csv())?;
    }
    Ok(rows.len())
}

/// Human-readable verdict line.
pub fn describe_verdict(p: PlanePoint, verdict: &RegionVerdict) -> String {
    let head = format!(
        "({}, {}) is {}",
        format_float(p.x),
        format_float(p.y),
        if verdict.attainable {
            "attainable"
        } else {
            "not attainable"
        }
    );
    let why = match verdict.certificate {
        Certificate::BelowMaxCurve => "between 2x^2-1 and the max curve".to_string(),
        Certificate::BoundaryY1Point => "corner point on y=1".to_string(),
        Certificate::Spike { k, divisor, t } => {
            format!(
                "spike k={k}, upper bound from divisor A={divisor} at t={}",
                format_float(t)
            )
        }
        Certificate::Outside(ViolatedBound::BelowRiesz) => "below y=2x^2-1".to_string(),
        Certificate::Outside(ViolatedBound::AboveMaxCurve) => "above the max curve with |x|>=1/3".to_string(),
        Certificate::Outside(ViolatedBound::OutsideSpikes) => "above the max curve and outside every spike".to_string(),
    };
    let mut s = head;
    let _ = write!(s, ": {why} (tol {})", format_float(verdict.tolerance));
    s
}

/// Region query. Returns the exit code: 0 attainable, 1 not, 2 invalid.
pub fn cmd_check(x: f64, y: f64, squarefree: bool, tol: f64, out: &mut Output) -> Result<i32, CliError> {
    if !(tol >= 0.0 && tol.is_finite()) {
        return Err(CliError::Invalid(format!(
            "tolerance must be finite and >= 0, got {tol}"
        )));
    }
    let p = PlanePoint::new(x, y)?;
    let verdict = if squarefree {
        is_squarefree_attainable(p, tol)
    } else {
        is_attainable(p, tol)
    };
    out.line(&describe_verdict(p, &verdict))?;
    Ok(if verdict.attainable { EXIT_OK } else { EXIT_FAIL })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpikeRow {
    pub x: f64,
    pub f1: f64,
    pub f2: f64,
    pub interior: PlanePoint,
}

impl SpikeRow {
    pub const HEADER: &'static str = "x,f1,f2,interior_x,interior_y";

    pub fn csv(&self) -> String {
        format!(
            "{},{},{},{},{}",
            format_float(self.x),
            format_float(self.f1),
            format_float(self.f2),
            format_float(self.interior.x),
            format_float(self.interior.y)
        )
    }
}

/// Boundary values on `x_i = x_k i / samples`, `i = 1..=samples`, each with
/// one interior point `spike_sample(k, x_i, t)` for a seeded `t in (0, 1]`.
pub fn spike_rows(k: u64, samples: usize, seed: u64) -> Result<Vec<SpikeRow>, CliError> {
    if k == 0 || samples == 0 {
        return Err(CliError::Invalid("k and samples must be at least 1".into()));
    }
    let x_k = spike_corner(k);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ts: Vec<f64> = (0..samples).map(|_| 1.0 - rng.gen::<f64>()).collect();
    (1..=samples)
        .into_par_iter()
        .map(|i| {
            let x = if i == samples {
                x_k
            } else {
                x_k * i as f64 / samples as f64
            };
            Ok(SpikeRow {
                x,
                f1: f1(k, x)?,
                f2: f2(k, x)?,
                interior: spike_sample(k, x, ts[i - 1])?,
            })
        })
        .collect()
}

pub fn cmd_spike(k: u64, samples: usize, seed: u64, out: &mut Output) -> Result<usize, CliError> {
    let rows = spike_rows(k, samples, seed)?;
    out.line(SpikeRow::HEADER)?;
    for row in &rows {
        out.line(&row.csv())?;
    }
    Ok(rows.len())
}

/// Runs `all` or one named check. Returns the reports, or `None` for an
/// unknown name.
pub fn verify_reports(suite: &str, seed: u64) -> Option<Vec<CheckReport>> {
    if suite == "all" {
        Some(verify::run_suite(seed))
    } else {
        verify::run_check(suite, seed).map(|r| vec![r])
    }
}

/// Exit code 0 iff every report passes, 2 for an unknown suite.
pub fn cmd_verify(suite: &str, seed: u64, out: &mut Output) -> Result<i32, CliError> {
    let Some(reports) = verify_reports(suite, seed) else {
        return Err(CliError::Invalid(format!(
            "unknown suite {suite:?}; expected all or one of {}",
            verify::SUITE.join(", ")
        )));
    };
    for report in &reports {
        out.line(&report.to_string())?;
    }
    Ok(if reports.iter().all(|r| r.passed) {
        EXIT_OK
    } else {
        EXIT_FAIL
    })
}

pub fn cmd_cantor(theta: f64, level: u32, k: usize, out: &mut Output) -> Result<usize, CliError> {
    if !(theta > 0.0 && theta <= std::f64::consts::PI) {
        return Err(CliError::Invalid(format!("theta must be in (0, pi], got {theta}")));
    }
    if level > 60 {
        return Err(CliError::Invalid(format!("level must be at most 60, got {level}")));
    }
    if !(1..=64).contains(&k) {
        return Err(CliError::Invalid(format!("k must be in 1..=64, got {k}")));
    }
    let coefficients = cantor_measure_fourier(theta, level, k)?;
    out.line("m,coefficient")?;
    for (m, c) in coefficients.coefficients().iter().enumerate() {
        out.line(&format!("{},{}", m + 1, format_float(*c)))?;
    }
    Ok(k)
}

/// Maps an error to its exit code.
pub fn exit_code(err: &CliError) -> i32 {
    match err {
        CliError::Io { .. } => EXIT_FAIL,
        _ => EXIT_INVALID,
    }
}

/// Output path as given on the command line.
pub fn output_path(arg: &Option<PathBuf>) -> Option<&Path> {
    arg.as_deref().filter(|p| p.as_os_str() != "-")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_format_round_trips() {
        for v in [
            0.28,
            -0.8432,
            1.0,
            -1.0,
            1e-300,
            6.02e23,
            1.0 / 3.0,
            -2.5e-5,
            123456789.0,
        ] {
            let s = format_float(v);
            assert_eq!(s.parse::<f64>().unwrap(), v, "{s}");
        }
        assert_eq!(format_float(1.0), "1");
        assert_eq!(format_float(-0.28), "-0.28000000000000003");
        assert_eq!(format_float(0.0), "0");
        assert_eq!(format_float(1e-7), "9.9999999999999995e-08");
        assert_eq!(format_float(1e20), "1e+20");
    }

    #[test]
    fn scan_row_examples() {
        let r = ScanRow::for_n(5).unwrap();
        assert_eq!(r.r2, 8);
        assert!((r.x + 0.28).abs() < 1e-15 && (r.y + 0.8432).abs() < 1e-15);
        assert_eq!(
            ScanRow::for_n(1).unwrap(),
            ScanRow {
                n: 1,
                r2: 4,
                x: 1.0,
                y: 1.0
            }
        );
        assert!(ScanRow::for_n(3).is_none());
        let two = ScanRow::for_n(2).unwrap();
        assert_eq!((two.x, two.y), (-1.0, 1.0));
    }

    #[test]
    fn parity_filter() {
        assert!(Parity::Even.admits(2) && !Parity::Even.admits(1));
        assert!(Parity::Odd.admits(19) && !Parity::Odd.admits(4));
        assert!(Parity::All.admits(7));
    }

    #[test]
    fn dash_means_stdout() {
        assert!(output_path(&Some(PathBuf::from("-"))).is_none());
        assert!(output_path(&Some(PathBuf::from("a.csv"))).is_some());
    }
}

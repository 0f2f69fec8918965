//! Acceptance criteria, one line each. Exits non-zero if any criterion fails.

use std::f64::consts::{FRAC_PI_2, PI};
use std::io;
use std::path::Path;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use attainable_cli::{cmd_check, cmd_scan, prime_power_rows, Output, Parity, EXIT_FAIL, EXIT_OK};
use attainable_core::arithmetic::r2;
use attainable_core::measures::{
    arc_measure_fourier, cantor_measure_fourier, g_kernel, nu_from_lattice, AtomicMeasure,
};
use attainable_core::region::{
    classify_eta, classify_eta_exact, f1, f2, is_attainable, is_squarefree_attainable, max_curve, solve_g_on_corner,
    spike_corner, PlanePoint,
};
use attainable_core::verify;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn FnOnce() -> Outcome + 'a>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within_budget(elapsed: Duration, budget: Duration) -> Result<(), String> {
    ensure(elapsed <= budget, || format!("took {elapsed:?}, budget {budget:?}"))
}

/// `(x, y)` of `nu_n` from integer sums of `Re (a+bi)^4` and `Re (a+bi)^8`.
fn brute_force_point(n: i64) -> (f64, f64, usize) {
    let (mut sx, mut sy, mut count) = (0i128, 0i128, 0usize);
    let r = (n as f64).sqrt() as i64 + 1;
    for a in -r..=r {
        for b in -r..=r {
            if a * a + b * b != n {
                continue;
            }
            let (a, b) = (i128::from(a), i128::from(b));
            let re4 = a.pow(4) - 6 * a * a * b * b + b.pow(4);
            let im4 = 4 * a * b * (a * a - b * b);
            sx += re4;
            sy += re4 * re4 - im4 * im4;
            count += 1;
        }
    }
    let n2 = (n * n) as f64;
    (
        sx as f64 / (count as f64 * n2),
        sy as f64 / (count as f64 * n2 * n2),
        count,
    )
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let f5 = nu_from_lattice(5).map_err(|e| e.to_string())?.fourier(2);
    let f25 = nu_from_lattice(25).map_err(|e| e.to_string())?.fourier(2);
    let elapsed = start.elapsed();
    let (bx, by, _) = brute_force_point(5);
    let (bx25, _, _) = brute_force_point(25);
    let expected = [
        (f5.x(), -7.0 / 25.0),
        (f5.y(), -527.0 / 625.0),
        (f25.x(), -143.0 / 625.0),
        (f5.x(), bx),
        (f5.y(), by),
        (f25.x(), bx25),
    ];
    let worst = expected.iter().map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    ensure(worst <= 1e-14, || format!("max error {worst:e}"))?;
    within_budget(elapsed, Duration::from_millis(1))?;
    Ok(format!("max error {worst:.1e}, {elapsed:?}"))
}

fn criterion_2() -> Outcome {
    const N: usize = 100_000;
    let start = Instant::now();
    let mut counts = vec![0u64; N + 1];
    let r = (N as f64).sqrt() as i64 + 1;
    for a in -r..=r {
        for b in -r..=r {
            let n = (a * a + b * b) as usize;
            if (1..=N).contains(&n) {
                counts[n] += 1;
            }
        }
    }
    let mismatches = (1..=N).filter(|&n| r2(n as u64) != counts[n]).count();
    let elapsed = start.elapsed();
    ensure(mismatches == 0, || format!("{mismatches} mismatches"))?;
    within_budget(elapsed, Duration::from_secs(30))?;
    Ok(format!("n <= {N}, 0 mismatches, {elapsed:?}"))
}

fn scan_to_file(max_n: u64, squarefree: bool, path: &Path) -> Result<Vec<(u64, f64, f64)>, String> {
    let mut out = Output::open(Some(path)).map_err(|e| e.to_string())?;
    cmd_scan(max_n, squarefree, &mut out).map_err(|e| e.to_string())?;
    out.finish().map_err(|e| e.to_string())?;
    let text = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
    text.lines()
        .skip(1)
        .map(|line| {
            let f: Vec<&str> = line.split(',').collect();
            let parse = |s: &str| s.parse::<f64>().map_err(|e| format!("{line}: {e}"));
            Ok((
                f[0].parse().map_err(|e| format!("{line}: {e}"))?,
                parse(f[2])?,
                parse(f[3])?,
            ))
        })
        .collect()
}

fn criterion_3(dir: &Path) -> Outcome {
    let start = Instant::now();
    let rows = scan_to_file(1_000_000, false, &dir.join("scan.csv"))?;
    let elapsed = start.elapsed();
    let below = rows.iter().filter(|&&(_, x, y)| y < 2.0 * x * x - 1.0 - 1e-9).count();
    let above = rows
        .iter()
        .filter(|&&(_, x, y)| x.abs() > 1.0 / 3.0 && y > max_curve(x.abs()) + 1e-9)
        .count();
    ensure(below == 0 && above == 0, || {
        format!("{below} rows below 2x^2-1, {above} above the max curve")
    })?;
    within_budget(elapsed, Duration::from_secs(300))?;
    Ok(format!("{} rows, 0 violations, {elapsed:?}", rows.len()))
}

fn criterion_4(dir: &Path) -> Outcome {
    let rows = scan_to_file(100_000, true, &dir.join("squarefree.csv"))?;
    let bad: Vec<u64> = rows
        .iter()
        .filter(|&&(_, x, y)| {
            let p = PlanePoint { x, y };
            !is_squarefree_attainable(p, 1e-9).attainable
        })
        .map(|r| r.0)
        .collect();
    ensure(bad.is_empty(), || {
        format!("violations at n = {:?}", &bad[..bad.len().min(5)])
    })?;
    Ok(format!("{} square-free rows, 0 violations", rows.len()))
}

fn criterion_5() -> Outcome {
    let rows = prime_power_rows(19, 10_000, Parity::All).map_err(|e| e.to_string())?;
    let spikes = rows
        .iter()
        .filter(|r| r.m % 2 == 0 && r.x.abs() <= 1.0 / 3.0 && r.y > max_curve(r.x.abs()) + 0.05)
        .count();
    let odd_bad = rows
        .iter()
        .filter(|r| r.m % 2 == 1 && r.x.abs() > 1.0 / 3.0 && r.y > r.x.powi(4) + 1e-9)
        .count();
    ensure(spikes > 0, || "no even-M row above the max curve".into())?;
    ensure(odd_bad == 0, || format!("{odd_bad} odd-M rows above x^4"))?;
    Ok(format!(
        "{} rows, {spikes} even-M rows above max curve + 0.05, 0 odd-M violations",
        rows.len()
    ))
}

fn criterion_6() -> Outcome {
    const H: f64 = 1e-7;
    let start = Instant::now();
    let mut worst = (0.0f64, 0.0f64, 0.0f64);
    for k in 1..=5u64 {
        let n = (2 * k + 1) as f64;
        let x_k = spike_corner(k);
        let (a, b) = (
            f1(k, x_k).map_err(|e| e.to_string())?,
            f2(k, x_k).map_err(|e| e.to_string())?,
        );
        worst.0 = worst.0.max((a - 1.0).abs()).max((b - 1.0).abs());
        let s1 = (a - f1(k, x_k - H).map_err(|e| e.to_string())?) / H;
        let s2 = (b - f2(k, x_k - H).map_err(|e| e.to_string())?) / H;
        worst.1 = worst.1.max((s1 / (4.0 * n) - 1.0).abs());
        worst.2 = worst.2.max((s2 / (4.0 * n / 3.0) - 1.0).abs());
    }
    let elapsed = start.elapsed();
    ensure(worst.0 <= 1e-10, || format!("corner value off by {:e}", worst.0))?;
    ensure(worst.1 <= 1e-3, || format!("f1 slope off by {:.3}%", 100.0 * worst.1))?;
    ensure(worst.2 <= 1e-2, || format!("f2 slope off by {:.3}%", 100.0 * worst.2))?;
    within_budget(elapsed, Duration::from_secs(1))?;
    Ok(format!(
        "corner error {:.1e}, slope errors {:.4}% / {:.4}%, {elapsed:?}",
        worst.0,
        100.0 * worst.1,
        100.0 * worst.2
    ))
}

/// Ordered factorizations of `n` into odd factors greater than 1.
fn odd_factorizations(n: u64) -> Vec<Vec<u64>> {
    if n == 1 {
        return vec![vec![]];
    }
    let mut all = Vec::new();
    for a in (3..=n).step_by(2).filter(|a| n % a == 0) {
        for mut rest in odd_factorizations(n / a) {
            rest.insert(0, a);
            all.push(rest);
        }
    }
    all
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut worst = f64::NEG_INFINITY;
    let mut trials = 0usize;
    for n in [3u64, 9, 25] {
        let k = (n - 1) / 2;
        let x_k = spike_corner(k);
        let factorizations = odd_factorizations(n);
        for _ in 0..100 {
            let x = x_k * (1.0 - rng.gen::<f64>());
            let bound = f2(k, x).map_err(|e| e.to_string())?;
            // Split the slack log(1/(nx)) among the factors.
            let slack = -(x * n as f64).ln();
            for _ in 0..100 {
                let factors = &factorizations[rng.gen_range(0..factorizations.len())];
                let weights: Vec<f64> = factors.iter().map(|_| rng.gen::<f64>() + 1e-12).collect();
                let total: f64 = weights.iter().sum();
                let mut y = 1.0;
                for (&a, &w) in factors.iter().zip(&weights) {
                    let target = (-(w / total) * slack).exp() / a as f64;
                    let t = solve_g_on_corner(a, target.min(1.0 / a as f64)).map_err(|e| e.to_string())?;
                    y *= g_kernel(a as u32, 2.0 * t);
                }
                worst = worst.max(y - bound);
                trials += 1;
            }
        }
    }
    ensure(worst <= 1e-9, || format!("corner product exceeds f2 by {worst:e}"))?;
    Ok(format!("{trials} assignments, max excess {worst:.2e}"))
}

fn check_code(x: f64, y: f64) -> Result<i32, String> {
    let mut out = Output::from_writer("sink", Box::new(io::sink()));
    cmd_check(x, y, false, 1e-9, &mut out).map_err(|e| e.to_string())
}

fn near_odd_reciprocal(x: f64, gap: f64) -> bool {
    let centre = (1.0 / x).round() as i64;
    (centre - 3..=centre + 3)
        .filter(|n| n % 2 != 0 && *n >= 3)
        .any(|n| (x - 1.0 / n as f64).abs() < gap)
}

fn criterion_8() -> Outcome {
    let mut inside = vec![(0.0, 1.0), (1.0, 1.0), (-1.0, 1.0)];
    inside.extend((1..=10).map(|k| (1.0 / (2 * k + 1) as f64, 1.0)));
    for &(x, y) in &inside {
        let code = check_code(x, y)?;
        ensure(code == EXIT_OK, || format!("({x}, {y}) reported {code}"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut outside = 0;
    while outside < 50 {
        let x = rng.gen_range(0.0..1.0 / 3.0);
        if x <= 0.0 || near_odd_reciprocal(x, 1e-4) {
            continue;
        }
        let code = check_code(x, 1.0)?;
        ensure(code == EXIT_FAIL, || format!("({x}, 1) reported {code}"))?;
        outside += 1;
    }
    Ok(format!(
        "{} attainable corners, {outside} rejected points",
        inside.len()
    ))
}

fn criterion_9() -> Outcome {
    const DEN: u64 = 1000;
    let mut members = 0;
    for j in 0..=DEN {
        // a = (N +- 1) / (2N) for odd N >= 1, or a = 1/2.
        let stated = 2 * j == DEN
            || (1..=2 * DEN + 1)
                .step_by(2)
                .any(|n| DEN * (n + 1) == 2 * n * j || DEN * (n - 1) == 2 * n * j);
        let exact = classify_eta_exact(j, DEN);
        let a = j as f64 / DEN as f64;
        let snapped = classify_eta(a);
        let direct = is_attainable(
            PlanePoint {
                x: 2.0 * a - 1.0,
                y: 1.0,
            },
            1e-9,
        )
        .attainable;
        ensure(stated == exact && exact == snapped && snapped == direct, || {
            format!("a = {j}/{DEN}: stated {stated}, exact {exact}, snapped {snapped}, direct {direct}")
        })?;
        members += usize::from(stated);
    }
    Ok(format!("{} values of a, {members} attainable, all agree", DEN + 1))
}

fn criterion_10() -> Outcome {
    let start = Instant::now();
    let reports = verify::run_suite(7);
    let elapsed = start.elapsed();
    for r in &reports {
        println!("      {r}");
    }
    let failed: Vec<&str> = reports.iter().filter(|r| !r.passed).map(|r| r.name.as_str()).collect();
    ensure(failed.is_empty(), || format!("failed: {}", failed.join(", ")))?;
    within_budget(elapsed, Duration::from_secs(120))?;
    Ok(format!("{} checks passed, {elapsed:?}", reports.len()))
}

fn random_measure(rng: &mut ChaCha8Rng) -> AtomicMeasure {
    let len = rng.gen_range(1..=6);
    let atoms: Vec<(f64, f64)> = (0..len)
        .map(|_| (rng.gen_range(-PI..PI), rng.gen_range(0.05..1.0)))
        .collect();
    let total: f64 = atoms.iter().map(|a| a.1).sum();
    AtomicMeasure::symmetrized(atoms.into_iter().map(|(t, w)| (t, w / total))).expect("valid measure")
}

fn criterion_11() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let (a, b) = (random_measure(&mut rng), random_measure(&mut rng));
        let (fa, fb, fc) = (a.fourier(10), b.fourier(10), a.convolve(&b).fourier(10));
        for m in 1..=10 {
            worst = worst.max((fc.get(m) - fa.get(m) * fb.get(m)).abs());
        }
    }
    ensure(worst <= 1e-12, || format!("max error {worst:e}"))?;
    Ok(format!("1000 pairs, max error {worst:.1e}"))
}

fn criterion_12() -> Outcome {
    let mut cauchy = 0.0f64;
    for theta in [PI, 2.0, 1.0, FRAC_PI_2, 0.1] {
        let a = cantor_measure_fourier(theta, 40, 16).map_err(|e| e.to_string())?;
        let b = cantor_measure_fourier(theta, 50, 16).map_err(|e| e.to_string())?;
        for m in 1..=16 {
            cauchy = cauchy.max((a.get(m) - b.get(m)).abs());
        }
        let base = cantor_measure_fourier(theta, 0, 16).map_err(|e| e.to_string())?;
        let arc = arc_measure_fourier(theta, 16).map_err(|e| e.to_string())?;
        ensure(base.coefficients() == arc.coefficients(), || {
            format!("level 0 differs from arc at theta={theta}")
        })?;
    }
    ensure(cauchy < 1e-9, || format!("levels 40/50 differ by {cauchy:e}"))?;
    Ok(format!(
        "max |level40 - level50| = {cauchy:.1e}, level 0 identical to arc"
    ))
}

fn main() -> ExitCode {
    let dir = tempfile::tempdir().expect("temp dir");
    let criteria: Vec<Criterion> = vec![
        ("exact small-case Fourier values", Box::new(criterion_1)),
        ("r2 formula vs brute force, n <= 1e5", Box::new(criterion_2)),
        (
            "scan to 1e6 within lower bound and max curve",
            Box::new(|| criterion_3(dir.path())),
        ),
        (
            "square-free scan to 1e5 below max curve",
            Box::new(|| criterion_4(dir.path())),
        ),
        ("prime-power rows: even spikes, odd below x^4", Box::new(criterion_5)),
        ("spike corner values and slopes", Box::new(criterion_6)),
        ("corner products never exceed f2", Box::new(criterion_7)),
        ("y = 1 intersection", Box::new(criterion_8)),
        ("eta_a classification", Box::new(criterion_9)),
        ("inequality suite", Box::new(criterion_10)),
        ("convolution multiplies coefficients", Box::new(criterion_11)),
        ("Cantor coefficients converge in level", Box::new(criterion_12)),
    ];
    let mut failures = 0;
    for (i, (title, run)) in criteria.into_iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {:>2} PASS {title}: {detail}", i + 1),
            Err(detail) => {
                failures += 1;
                println!("criterion {:>2} FAIL {title}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failures} failed", 12 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

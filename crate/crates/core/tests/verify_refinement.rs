use attainable_core::verify::{
    check_eta_convexity, check_h_decreasing, check_one_third_lemma, check_prime_curve_below_x4, check_q_nonpositive,
    check_sinc_decreasing, run_check, run_suite, CheckReport, SUITE,
};

fn assert_refines(name: &str, run: impl Fn(usize) -> CheckReport) {
    let mut grid = 1_000;
    for _ in 0..4 {
        let (coarse, fine) = (run(grid), run(2 * grid));
        assert!(coarse.passed && fine.passed, "{name} at grid {grid}: {coarse} / {fine}");
        assert!(fine.grid_points > coarse.grid_points);
        grid *= 2;
    }
}

#[test]
fn analytic_checks_stay_passing_under_refinement() {
    assert_refines("sinc", check_sinc_decreasing);
    assert_refines("h", check_h_decreasing);
    assert_refines("q", check_q_nonpositive);
    assert_refines("one-third", |g| check_one_third_lemma(30, g));
    assert_refines("prime-curve", |g| check_prime_curve_below_x4(20, g));
    assert_refines("eta", |g| check_eta_convexity(11, g));
}

#[test]
fn default_suite_passes_for_several_seeds() {
    for seed in [0, 1, 7, 12345] {
        let reports = run_suite(seed);
        assert_eq!(reports.len(), SUITE.len());
        for (report, name) in reports.iter().zip(SUITE) {
            assert_eq!(&report.name, name);
            assert!(report.passed, "{report}");
            assert_eq!(report.passed, report.max_violation <= report.tolerance);
        }
    }
}

#[test]
fn sampled_checks_are_reproducible() {
    for name in [
        "b2-product",
        "corner-lower-bound",
        "convexity-identity",
        "mixed-sign-region",
    ] {
        let a = run_check(name, 42).unwrap();
        let b = run_check(name, 42).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.seed, Some(42));
    }
}

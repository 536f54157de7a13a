//! Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Runs under `cargo test` with its own `main`.

use std::f64::consts::SQRT_2;
use std::process::ExitCode;
use std::time::Instant;

use mixfourier::cli::{run, Cli};
use mixfourier::counterexample::{
    blowup_sweep, delta_divergence_demo, delta_product_control, halving_sequence, necessity_sweep, DilationAxis,
    FLAT_SLOPE_TOLERANCE, ORACLE_TOLERANCE, RHS_INVARIANCE, SLOPE_TOLERANCE,
};
use mixfourier::inequalities::{
    check_hausdorff_young, check_restriction, check_same_order, check_variant, random_admissible_tuples, run_suite,
    tolerance, InequalityId, SuiteConfig,
};
use mixfourier::mixed_norms::{minkowski_compare, plain_norm};
use mixfourier::sampling::{
    gaussian_product, near_delta_family, random_ensemble, shear_product, DEFAULT_EXTENT, DEFAULT_POINTS,
};
use mixfourier::transform::{fourier, marginal_second, slice_second_zero};
use mixfourier::{
    beckner_constant, beckner_power, Axes, DimensionPair, Exponent, ExponentTuple, GridSpec,
    SampledFunction,
};
use ndarray::{ArrayD, IxDyn};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn e(s: &str) -> Exponent {
    s.parse().unwrap()
}

fn plane() -> GridSpec {
    GridSpec::new(DimensionPair::new(1, 1).unwrap(), DEFAULT_POINTS, DEFAULT_EXTENT).unwrap()
}

fn line() -> GridSpec {
    GridSpec::new(DimensionPair::new(1, 0).unwrap(), DEFAULT_POINTS, DEFAULT_EXTENT).unwrap()
}

fn check(cond: bool, detail: String) -> Outcome {
    if cond {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn constants() -> Outcome {
    let c1 = beckner_constant(Exponent::ONE).map_err(err)?;
    let c2 = beckner_constant(Exponent::TWO).map_err(err)?;
    let c43 = beckner_constant(e("4/3")).map_err(err)?;
    let oracle = (4.0f64 / 3.0).powf(3.0 / 8.0) * 4f64.powf(-1.0 / 8.0);
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let r = rng.random_range(1.0..2.0f64);
        if r == 1.0 {
            continue;
        }
        worst = worst.max(beckner_constant(Exponent::from_f64(r).map_err(err)?).map_err(err)?);
    }
    check(
        c1 == 1.0 && c2 == 1.0 && (c43 - oracle).abs() <= 1e-12 && worst < 1.0,
        format!("C_1={c1} C_2={c2} |C_4/3 - oracle|={:.1e} max C_r over 50 r={worst:.6}", (c43 - oracle).abs()),
    )
}

fn transform_fidelity() -> Outcome {
    let mut self_dual = 0.0f64;
    for grid in [line(), plane()] {
        let g = gaussian_product(&grid, &vec![1.0; grid.axis_count()]).map_err(err)?;
        let ghat = fourier(&g, Axes::All).map_err(err)?;
        let d: f64 = ghat
            .values()
            .iter()
            .zip(g.values().iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        self_dual = self_dual.max(d);
    }
    let mut plancherel = 0.0f64;
    let mut contraction = f64::MIN;
    for seed in 0..100 {
        let f = random_ensemble(&plane(), 4, seed).map_err(err)?;
        let fhat = fourier(&f, Axes::All).map_err(err)?;
        let a = plain_norm(&f, Exponent::TWO);
        plancherel = plancherel.max((plain_norm(&fhat, Exponent::TWO) / a - 1.0).abs());
        contraction = contraction.max(plain_norm(&fhat, Exponent::INFINITY) - plain_norm(&f, Exponent::ONE));
    }
    check(
        self_dual <= 1e-6 && plancherel <= 1e-6 && contraction <= 1e-8,
        format!(
            "self-duality {self_dual:.1e}, Plancherel {plancherel:.1e}, max(|f^|_inf - |f|_1) {contraction:.1e}"
        ),
    )
}

fn two_path_identity() -> Outcome {
    let grid = plane();
    let mut families: Vec<SampledFunction> = Vec::new();
    families.push(gaussian_product(&grid, &[1.0, 2.0]).map_err(err)?);
    for seed in 0..10 {
        families.push(random_ensemble(&grid, 4, seed).map_err(err)?);
    }
    let f = gaussian_product(&line(), &[1.0]).map_err(err)?;
    let g = gaussian_product(&line(), &[0.5]).map_err(err)?;
    families.push(shear_product(&f, &g, &grid).map_err(err)?);
    families.push(near_delta_family(&grid, &f, 0.5).map_err(err)?);
    let mut worst = 0.0f64;
    for family in &families {
        let sliced = slice_second_zero(&fourier(family, Axes::All).map_err(err)?).map_err(err)?;
        let marginal = fourier(&marginal_second(family).map_err(err)?, Axes::All).map_err(err)?;
        worst = worst.max(sliced.max_abs_diff(&marginal).map_err(err)?);
    }
    check(worst <= 1e-8, format!("{} families, max |slice - transform of marginal| {worst:.1e}", families.len()))
}

fn sharpness() -> Outcome {
    let set = [e("4/3"), e("3/2"), e("2")];
    let f = gaussian_product(&plane(), &[1.0, 1.0]).map_err(err)?;
    let f1 = gaussian_product(&line(), &[1.0]).map_err(err)?;
    let tol = tolerance::GAUSSIAN_SHARPNESS;
    let mut worst = 0.0f64;
    let mut count = 0;
    let mut note = |ratio: Option<f64>| {
        count += 1;
        worst = worst.max(ratio.map_or(f64::INFINITY, |r| (r - 1.0).abs()));
    };
    for &p in &set {
        note(check_hausdorff_young(&f1, p, tol).map_err(err)?.ratio);
        note(check_hausdorff_young(&f, p, tol).map_err(err)?.ratio);
        note(check_restriction(&f, p, tol).map_err(err)?.ratio);
        for &s in &set {
            note(check_variant(&f, p, s, tol).map_err(err)?.ratio);
            if p.value() <= s.value() {
                note(check_same_order(&f, p, s, tol).map_err(err)?.ratio);
            }
        }
    }
    check(worst <= tol, format!("{count} Gaussian ratios, max |ratio - 1| {worst:.1e}"))
}

fn suites() -> Outcome {
    let mut lines = Vec::new();
    let mut ok = true;
    for id in InequalityId::ALL {
        let config = SuiteConfig::new(id, plane(), 42);
        let summary = run_suite(&config).map_err(err)?;
        ok &= summary.all_pass() && summary.reports.len() == 100 * config.selections.len();
        lines.push(format!(
            "{id}: {} trials, {} failures, {} degenerate, max {:.4}",
            summary.reports.len(),
            summary.failures,
            summary.degenerate,
            summary.max_ratio
        ));
    }
    check(ok, lines.join("; "))
}

fn minkowski() -> Outcome {
    let grid = GridSpec::new(DimensionPair::new(1, 1).unwrap(), 2, 2.0).map_err(err)?;
    let eye = ArrayD::from_shape_fn(IxDyn(&[2, 2]), |i| Complex64::new(if i[0] == i[1] { 1.0 } else { 0.0 }, 0.0));
    let cmp = minkowski_compare(&SampledFunction::from_values(grid, eye).map_err(err)?, e("2"), e("1")).map_err(err)?;
    let oracle = (cmp.larger_outer - SQRT_2).abs() < 1e-15 && (cmp.smaller_outer - 2.0).abs() < 1e-15 && cmp.holds;

    let exps = [e("1"), e("4/3"), e("3/2"), e("2"), e("3"), e("4"), e("inf")];
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut worst = f64::MIN;
    for _ in 0..1000 {
        let n = 2 * rng.random_range(1..=6usize);
        let grid = GridSpec::new(DimensionPair::new(1, 1).unwrap(), n, rng.random_range(0.5..4.0)).map_err(err)?;
        let values = ArrayD::from_shape_fn(IxDyn(&[n, n]), |_| Complex64::new(rng.random_range(0.0..1.0), 0.0));
        let f = SampledFunction::from_values(grid, values).map_err(err)?;
        let a = exps[rng.random_range(0..exps.len())];
        let b = exps[rng.random_range(0..exps.len())];
        let c = minkowski_compare(&f, a, b).map_err(err)?;
        worst = worst.max((c.larger_outer - c.smaller_outer) / c.smaller_outer.max(1.0));
    }
    check(
        oracle && worst <= 1e-10,
        format!("identity oracle ({:.6}, {:.6}); worst violation over 1000 arrays {worst:.1e}", cmp.larger_outer, cmp.smaller_outer),
    )
}

fn blowup() -> Outcome {
    let ts = halving_sequence(1.0, 6);
    let r = blowup_sweep(e("2"), e("4/3"), &ts, None).map_err(err)?;
    let flat = blowup_sweep(e("2"), e("2"), &ts, None).map_err(err)?;
    let rhs = r.rhs_variation().unwrap_or(f64::INFINITY);
    check(
        r.slope_error() <= SLOPE_TOLERANCE
            && r.increasing_as_parameter_decreases()
            && rhs <= RHS_INVARIANCE
            && flat.fitted_slope.abs() <= FLAT_SLOPE_TOLERANCE,
        format!(
            "(2,4/3) slope {:.4} (expected {:.4}), increasing {}, rhs drift {rhs:.1e}; (2,2) slope {:.1e}",
            r.fitted_slope,
            r.expected_slope,
            r.increasing_as_parameter_decreases(),
            flat.fitted_slope
        ),
    )
}

fn oracle_agreement() -> Outcome {
    let ts = halving_sequence(1.0, 6);
    let mut worst = 0.0f64;
    let mut points = 0;
    for s in ["4/3", "3/2", "2"] {
        let r = blowup_sweep(e("2"), e(s), &ts, None).map_err(err)?;
        points += r.oracle_errors.len();
        worst = worst.max(r.max_oracle_error().unwrap_or(f64::INFINITY));
    }
    check(worst <= ORACLE_TOLERANCE, format!("{points} sweep points, max |DFT - closed form| {worst:.1e}"))
}

fn delta() -> Outcome {
    let eps = halving_sequence(2.0, 5);
    let demo = delta_divergence_demo(e("2"), &eps, None, None).map_err(err)?;
    let mut control_ok = true;
    let mut control_worst = 0.0f64;
    for p in ["4/3", "3/2", "2"] {
        let p = e(p);
        let c = delta_product_control(p, &eps, None, None).map_err(err)?;
        let bound = beckner_power(p, 1).map_err(err)? * (1.0 + 1e-2);
        control_ok &= c.observed.iter().all(|&v| v <= bound);
        control_worst = control_worst.max(c.observed.iter().map(|v| v / bound).fold(0.0, f64::max));
    }
    check(
        demo.divergence_milestone() && control_ok,
        format!(
            "p=2, eps 2..1/8 (span {}): growth {:.3}, increasing {}; control max ratio/bound {control_worst:.4}",
            demo.parameter_span(),
            demo.growth(),
            demo.increasing_as_parameter_decreases()
        ),
    )
}

fn necessity() -> Outcome {
    let lambdas = [0.5, 1.0 / SQRT_2, 1.0, SQRT_2, 2.0];
    let mut tuples = vec![ExponentTuple::new(e("4"), e("2"), e("4"), e("2"), e("2"))];
    tuples.extend(random_admissible_tuples(3, 9));
    let mut admissible_worst = 0.0f64;
    for tuple in &tuples {
        for axis in [DilationAxis::First, DilationAxis::Second] {
            let r = necessity_sweep(tuple, &lambdas, axis, None).map_err(err)?;
            admissible_worst = admissible_worst.max(r.fitted_slope.abs());
        }
    }
    // (tuple, axis, predicted slope from the change of variables)
    let violations = [
        (ExponentTuple::new(e("4"), e("2"), e("4"), e("2"), e("4")), DilationAxis::First, -0.25f64),
        (ExponentTuple::new(e("4"), e("4/3"), e("4"), e("2"), e("2")), DilationAxis::Second, 0.25),
        (ExponentTuple::new(e("4"), e("4/3"), e("4"), e("4/3"), e("2")), DilationAxis::Second, 0.5),
        (ExponentTuple::new(e("2"), e("2"), e("2"), e("2"), e("2")), DilationAxis::First, 0.5),
    ];
    let mut violation_worst = 0.0f64;
    let mut signs = true;
    for (tuple, axis, predicted) in &violations {
        let r = necessity_sweep(tuple, &lambdas, *axis, None).map_err(err)?;
        signs &= r.fitted_slope.signum() == predicted.signum() && r.expected_slope == *predicted;
        violation_worst = violation_worst.max((r.fitted_slope - predicted).abs());
    }
    check(
        admissible_worst <= FLAT_SLOPE_TOLERANCE && violation_worst <= SLOPE_TOLERANCE && signs,
        format!(
            "{} admissible tuples max |slope| {admissible_worst:.1e}; {} violations max slope error {violation_worst:.1e}",
            tuples.len(),
            violations.len()
        ),
    )
}

fn run_cli(args: &[&str]) -> (i32, Vec<u8>) {
    use clap::Parser;
    let cli = Cli::try_parse_from(std::iter::once("mixfourier").chain(args.iter().copied())).unwrap();
    let mut out = Vec::new();
    let code = run(cli, &mut out, &mut Vec::new());
    (code, out)
}

fn determinism() -> Outcome {
    let runs: [&[&str]; 3] = [
        &["verify", "restriction", "--p", "4/3", "--trials", "20", "--seed", "7"],
        &["verify", "bilinear", "--trials", "3"],
        &["sweep", "necessity", "--p", "4", "--s", "2", "--q", "4", "--t", "2", "--r", "2", "--format", "json"],
    ];
    let mut same = true;
    for args in runs {
        let (c1, a) = run_cli(args);
        let (c2, b) = run_cli(args);
        same &= c1 == 0 && c2 == 0 && a == b && !a.is_empty();
    }
    let mut small = SuiteConfig::new(InequalityId::Variant, plane(), 3);
    small.trials = 5;
    let a = serde_json::to_string(&run_suite(&small).map_err(err)?.reports).map_err(err)?;
    let b = serde_json::to_string(&run_suite(&small).map_err(err)?.reports).map_err(err)?;
    check(same && a == b, format!("{} CLI runs and one library suite byte-identical", runs.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("constants", constants),
        ("transform fidelity", transform_fidelity),
        ("two-path identity", two_path_identity),
        ("Gaussian sharpness", sharpness),
        ("inequality suites", suites),
        ("Minkowski orientation", minkowski),
        ("blowup reproduction", blowup),
        ("oracle agreement", oracle_agreement),
        ("delta divergence", delta),
        ("necessity sweep", necessity),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (status, detail) = match f() {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("{status} [{:>2}] {name}: {detail} ({:.1}s)", i + 1, start.elapsed().as_secs_f64());
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

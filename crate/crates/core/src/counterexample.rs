//! Quantitative counterexamples and scaling sweeps.
//!
//! - [`blowup_sweep`]: `F(x, y) = f_t(x) g(y - x)` with `f_t = t^{1/p} f(tx)`.
//!   The right side `||F||_{p,s}` is independent of `t` while the same-order
//!   left side `||F^||_{p',s'}` grows like `t^{1/s' - 1/p'}` as `t -> 0`
//!   whenever `s < p`.
//! - [`delta_divergence_demo`]: `F_eps(x, y) = f(x) d_eps(y + x)` with inner
//!   `L^1` mass fixed; `||F^||_{L^{p'} L^inf}` is unbounded as `eps -> 0`.
//! - [`necessity_sweep`]: dilating one coordinate group of the bilinear
//!   inequality exposes any mismatch in the exponent relations as a power law.
//!
//! All sweeps work on `R x R`. Grids are chosen per point so the space-side
//! dilation and the frequency-side concentration both stay resolved; the
//! grid used for each point is kept in the report.

use std::collections::BTreeMap;

use ndarray::{ArrayD, IxDyn};
use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exponents::{DimensionPair, Exponent, ExponentTuple};
use crate::inequalities::bilinear_ratio_raw;
use crate::mixed_norms::{mixed_norm, MixedNormSpec};
use crate::sampling::{
    check_radii, containment_radius, from_profile, shear_descriptor, Axes, FunctionDescriptor, FunctionKind,
    GaussianSum, GridSpec, SampledFunction, Side,
};
use crate::transform::fourier;

/// Slope tolerance for power laws with a nonzero exponent.
pub const SLOPE_TOLERANCE: f64 = 0.05;
/// Slope tolerance where the expected exponent is zero.
pub const FLAT_SLOPE_TOLERANCE: f64 = 0.02;
/// Allowed relative drift of a `t`-invariant right side.
pub const RHS_INVARIANCE: f64 = 1e-3;
/// DFT against closed-form transform, absolute.
pub const ORACLE_TOLERANCE: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepKind {
    Blowup,
    Delta,
    DeltaControl,
    /// Dilation of `x'`.
    NecessityFirst,
    /// Dilation of `x''`.
    NecessitySecond,
}

/// Fitted slope, expected slope and maximum log-log residual of a sweep.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepFit {
    pub fitted_slope: f64,
    pub expected_slope: f64,
    pub residual: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub kind: SweepKind,
    pub exponents: BTreeMap<String, Exponent>,
    pub parameter_values: Vec<f64>,
    pub observed: Vec<f64>,
    pub fitted_slope: f64,
    pub expected_slope: f64,
    pub residual: f64,
    /// Right-hand norm per point, where the sweep has one.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub rhs: Vec<f64>,
    /// Max absolute difference between DFT and closed-form transform per point.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub oracle_errors: Vec<f64>,
    pub grids: Vec<GridSpec>,
}

/// Least-squares line through `(ln x, ln y)`: returns `(slope, intercept, max residual)`.
pub fn fit_log_log(x: &[f64], y: &[f64]) -> Result<(f64, f64, f64)> {
    if x.len() != y.len() || x.len() < 2 || x.iter().chain(y).any(|v| !(*v > 0.0 && v.is_finite())) {
        return Err(Error::BadSweep);
    }
    let lx: Vec<f64> = x.iter().map(|v| v.ln()).collect();
    let ly: Vec<f64> = y.iter().map(|v| v.ln()).collect();
    let n = lx.len() as f64;
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let sxx: f64 = lx.iter().map(|a| (a - mx) * (a - mx)).sum();
    let sxy: f64 = lx.iter().zip(&ly).map(|(a, b)| (a - mx) * (b - my)).sum();
    if sxx == 0.0 {
        return Err(Error::BadSweep);
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let residual = lx
        .iter()
        .zip(&ly)
        .map(|(a, b)| (b - (intercept + slope * a)).abs())
        .fold(0.0, f64::max);
    Ok((slope, intercept, residual))
}

fn strictly_monotone(values: &[f64]) -> bool {
    values.windows(2).all(|w| w[0] < w[1]) || values.windows(2).all(|w| w[0] > w[1])
}

impl SweepReport {
    #[allow(clippy::too_many_arguments)]
    fn build(
        kind: SweepKind,
        exponents: BTreeMap<String, Exponent>,
        parameter_values: Vec<f64>,
        observed: Vec<f64>,
        expected_slope: f64,
        rhs: Vec<f64>,
        oracle_errors: Vec<f64>,
        grids: Vec<GridSpec>,
    ) -> Result<Self> {
        if !strictly_monotone(&parameter_values) {
            return Err(Error::BadSweep);
        }
        let (fitted_slope, _, residual) = fit_log_log(&parameter_values, &observed)?;
        Ok(SweepReport {
            kind,
            exponents,
            parameter_values,
            observed,
            fitted_slope,
            expected_slope,
            residual,
            rhs,
            oracle_errors,
            grids,
        })
    }

    pub fn fit(&self) -> SweepFit {
        SweepFit { fitted_slope: self.fitted_slope, expected_slope: self.expected_slope, residual: self.residual }
    }

    pub fn slope_error(&self) -> f64 {
        (self.fitted_slope - self.expected_slope).abs()
    }

    /// Slope within 0.02 of a zero expectation, otherwise within 0.05.
    pub fn slope_matches(&self) -> bool {
        let tol = if self.expected_slope == 0.0 { FLAT_SLOPE_TOLERANCE } else { SLOPE_TOLERANCE };
        self.slope_error() <= tol
    }

    /// Observations ordered by decreasing parameter.
    fn by_decreasing_parameter(&self) -> Vec<f64> {
        let mut pairs: Vec<(f64, f64)> =
            self.parameter_values.iter().copied().zip(self.observed.iter().copied()).collect();
        pairs.sort_by(|a, b| b.0.total_cmp(&a.0));
        pairs.into_iter().map(|p| p.1).collect()
    }

    pub fn increasing_as_parameter_decreases(&self) -> bool {
        self.by_decreasing_parameter().windows(2).all(|w| w[1] > w[0])
    }

    /// Observation at the smallest parameter over that at the largest.
    pub fn growth(&self) -> f64 {
        let obs = self.by_decreasing_parameter();
        obs[obs.len() - 1] / obs[0]
    }

    /// Largest over smallest parameter.
    pub fn parameter_span(&self) -> f64 {
        let max = self.parameter_values.iter().copied().fold(f64::MIN, f64::max);
        let min = self.parameter_values.iter().copied().fold(f64::MAX, f64::min);
        max / min
    }

    /// Divergence milestone: strictly increasing as the parameter shrinks and
    /// at least doubling across the sweep.
    pub fn divergence_milestone(&self) -> bool {
        self.increasing_as_parameter_decreases() && self.growth() >= 2.0
    }

    /// Maximum relative deviation of `rhs` from its first value.
    pub fn rhs_variation(&self) -> Option<f64> {
        let first = *self.rhs.first()?;
        Some(self.rhs.iter().map(|r| (r / first - 1.0).abs()).fold(0.0, f64::max))
    }

    pub fn max_oracle_error(&self) -> Option<f64> {
        self.oracle_errors.iter().copied().reduce(f64::max)
    }

    /// CSV body: `parameter,observed,log_parameter,log_observed`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("parameter,observed,log_parameter,log_observed\n");
        for (x, y) in self.parameter_values.iter().zip(&self.observed) {
            out.push_str(&format!("{x:e},{y:e},{:e},{:e}\n", x.ln(), y.ln()));
        }
        out
    }
}

/// Smallest grid containing `space_radius` in space and `frequency_radius`
/// in frequency; `N` is a power of two, at least 64.
pub fn fitted_grid(space_radius: f64, frequency_radius: f64) -> GridSpec {
    let extent = 2.0 * space_radius * 1.02;
    let needed = (2.0 * extent * frequency_radius * 1.02).ceil() as usize;
    let points = needed.next_power_of_two().max(64);
    GridSpec { dims: DimensionPair { d1: 1, d2: 1 }, points, extent }
}

fn plane_check(grid: &GridSpec) -> Result<()> {
    if grid.dims != (DimensionPair { d1: 1, d2: 1 }) {
        return Err(Error::InvalidParameter("sweeps run on R x R (d1 = d2 = 1)".into()));
    }
    Ok(())
}

/// `F^(xi, eta) = g^(eta) t^{-1/p'} f^((xi + eta)/t)`, the closed-form
/// transform of `f_t(x) g(y - x)`, evaluated on the frequency grid.
pub fn closed_form_transform(
    f: &GaussianSum,
    g: &GaussianSum,
    t: f64,
    p: Exponent,
    grid: &GridSpec,
) -> Result<SampledFunction> {
    plane_check(grid)?;
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::InvalidParameter(format!("dilation must be positive, got {t}")));
    }
    let f_t = f.dilate_axis0(t, p)?;
    // a frequency spacing 1/L too coarse for width t shows up as a space-side overflow
    check_radii(
        grid,
        f_t.space_radius() + g.space_radius(),
        f_t.frequency_radius() + g.frequency_radius(),
    )?;
    let n = grid.points;
    let gain = t.powf(-p.conjugate().reciprocal());
    let g_hat: Vec<Complex64> = (0..n).map(|k| g.fourier_eval(&[grid.frequency_coord(k)])).collect();
    // xi_i + eta_k = (i + k - n)/L
    let f_hat: Vec<Complex64> = (0..2 * n - 1)
        .map(|m| f.fourier_eval(&[(m as f64 - n as f64) / grid.extent / t]) * gain)
        .collect();
    let values = ArrayD::from_shape_fn(IxDyn(&[n, n]), |idx| g_hat[idx[1]] * f_hat[idx[0] + idx[1]]);
    SampledFunction::new(
        *grid,
        values,
        [Side::Frequency; 2],
        shear_descriptor(f.clone(), g.clone(), t, p),
    )
}

fn require_hy(e: Exponent) -> Result<()> {
    if !e.in_hausdorff_young_range() {
        return Err(Error::ExponentRange { exponent: e.to_string(), range: "[1, 2]" });
    }
    Ok(())
}

/// `t_0, t_0/2, ..., t_0/2^(count-1)`.
pub fn halving_sequence(start: f64, count: usize) -> Vec<f64> {
    (0..count).map(|k| start / 2f64.powi(k as i32)).collect()
}

struct BlowupPoint {
    ratio: f64,
    rhs: f64,
    oracle_error: f64,
    grid: GridSpec,
}

fn blowup_point(f: &GaussianSum, g: &GaussianSum, t: f64, p: Exponent, s: Exponent, grid: Option<GridSpec>) -> Result<BlowupPoint> {
    let f_t = f.dilate_axis0(t, p)?;
    let grid = grid.unwrap_or_else(|| {
        fitted_grid(
            f_t.space_radius() + g.space_radius(),
            f_t.frequency_radius() + g.frequency_radius(),
        )
    });
    let big_f = shear_descriptor(f.clone(), g.clone(), t, p).realize(&grid)?;
    let fhat = fourier(&big_f, Axes::All)?;
    let oracle_error = fhat.max_abs_diff(&closed_form_transform(f, g, t, p, &grid)?)?;
    let lhs = mixed_norm(&fhat, &MixedNormSpec::first_outer(p.conjugate(), s.conjugate()))?;
    let rhs = mixed_norm(&big_f, &MixedNormSpec::first_outer(p, s))?;
    if !(rhs > 0.0) {
        return Err(Error::Degenerate);
    }
    Ok(BlowupPoint { ratio: lhs / rhs, rhs, oracle_error, grid })
}

/// Same-order ratio `||F^||_{p',s'} / ||F||_{p,s}` along the dilation-shear
/// family with standard Gaussian profiles.
pub fn blowup_sweep(p: Exponent, s: Exponent, t_values: &[f64], grid: Option<GridSpec>) -> Result<SweepReport> {
    blowup_sweep_with(p, s, t_values, &GaussianSum::standard(1), &GaussianSum::standard(1), grid)
}

/// [`blowup_sweep`] with explicit profiles `f`, `g`. With `grid = None` each
/// point gets its own fitted grid.
pub fn blowup_sweep_with(
    p: Exponent,
    s: Exponent,
    t_values: &[f64],
    f: &GaussianSum,
    g: &GaussianSum,
    grid: Option<GridSpec>,
) -> Result<SweepReport> {
    require_hy(p)?;
    require_hy(s)?;
    if s.value() > p.value() {
        return Err(Error::InvalidParameter(format!("blow-up family needs s <= p (got p={p}, s={s})")));
    }
    if t_values.iter().any(|&t| !(t > 0.0 && t <= 1.0)) {
        return Err(Error::InvalidParameter("dilations must lie in (0, 1]".into()));
    }
    if let Some(grid) = &grid {
        plane_check(grid)?;
    }
    let points = t_values
        .par_iter()
        .map(|&t| blowup_point(f, g, t, p, s, grid))
        .collect::<Result<Vec<_>>>()?;
    SweepReport::build(
        SweepKind::Blowup,
        [("p".to_string(), p), ("s".to_string(), s)].into(),
        t_values.to_vec(),
        points.iter().map(|pt| pt.ratio).collect(),
        p.reciprocal() - s.reciprocal(),
        points.iter().map(|pt| pt.rhs).collect(),
        points.iter().map(|pt| pt.oracle_error).collect(),
        points.iter().map(|pt| pt.grid).collect(),
    )
}

fn delta_grid(f: &GaussianSum, eps_max: f64, eps_min: f64) -> GridSpec {
    let rho = containment_radius();
    fitted_grid(f.space_radius() + rho * eps_max, f.frequency_radius() + rho / eps_min)
}

fn delta_sweep(
    p: Exponent,
    epsilon_values: &[f64],
    f: &GaussianSum,
    grid: Option<GridSpec>,
    sheared: bool,
) -> Result<SweepReport> {
    require_hy(p)?;
    if p.is_one() {
        return Err(Error::ExponentRange { exponent: p.to_string(), range: "(1, 2]" });
    }
    if !epsilon_values.windows(2).all(|w| w[0] > w[1]) || epsilon_values.is_empty() || epsilon_values.iter().any(|e| !(*e > 0.0)) {
        return Err(Error::InvalidParameter("widths must be positive and strictly decreasing".into()));
    }
    let eps_max = epsilon_values[0];
    let eps_min = epsilon_values[epsilon_values.len() - 1];
    let grid = match grid {
        Some(g) => {
            plane_check(&g)?;
            g
        }
        None => delta_grid(f, eps_max, eps_min),
    };
    let kind = FunctionKind::NearDelta { first: f.clone(), epsilon: 0.0, sheared };
    let points = epsilon_values
        .par_iter()
        .map(|&epsilon| {
            let mut kind = kind.clone();
            if let FunctionKind::NearDelta { epsilon: e, .. } = &mut kind {
                *e = epsilon;
            }
            let big_f = FunctionDescriptor::new(kind).realize(&grid)?;
            let fhat = fourier(&big_f, Axes::All)?;
            let lhs = mixed_norm(&fhat, &MixedNormSpec::first_outer(p.conjugate(), Exponent::INFINITY))?;
            let rhs = mixed_norm(&big_f, &MixedNormSpec::first_outer(p, Exponent::ONE))?;
            if !(rhs > 0.0) {
                return Err(Error::Degenerate);
            }
            Ok((lhs / rhs, rhs))
        })
        .collect::<Result<Vec<_>>>()?;
    SweepReport::build(
        if sheared { SweepKind::Delta } else { SweepKind::DeltaControl },
        [("p".to_string(), p), ("s".to_string(), Exponent::ONE)].into(),
        epsilon_values.to_vec(),
        points.iter().map(|pt| pt.0).collect(),
        // eps -> 0 asymptotics of the sheared family; the control is flat
        if sheared { -p.conjugate().reciprocal() } else { 0.0 },
        points.iter().map(|pt| pt.1).collect(),
        Vec::new(),
        vec![grid; epsilon_values.len()],
    )
}

/// `||F_eps^||_{L^{p'}_{xi} L^inf_{eta}} / ||F_eps||_{L^p L^1}` for the sheared
/// near-delta family, `eps` strictly decreasing. Defaults to the standard
/// Gaussian profile and a grid fitted to the extreme widths.
pub fn delta_divergence_demo(
    p: Exponent,
    epsilon_values: &[f64],
    f: Option<&GaussianSum>,
    grid: Option<GridSpec>,
) -> Result<SweepReport> {
    let standard = GaussianSum::standard(1);
    delta_sweep(p, epsilon_values, f.unwrap_or(&standard), grid, true)
}

/// The unsheared control `f(x) d_eps(y)`; stays at `C_p` for a Gaussian `f`.
pub fn delta_product_control(
    p: Exponent,
    epsilon_values: &[f64],
    f: Option<&GaussianSum>,
    grid: Option<GridSpec>,
) -> Result<SweepReport> {
    let standard = GaussianSum::standard(1);
    delta_sweep(p, epsilon_values, f.unwrap_or(&standard), grid, false)
}

/// Which coordinate group a necessity sweep dilates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DilationAxis {
    First,
    Second,
}

fn dilate_group(sum: &GaussianSum, axis: usize, lambda: f64) -> GaussianSum {
    let atoms = sum
        .atoms
        .iter()
        .map(|a| {
            let mut a = a.clone();
            a.scale[axis] *= lambda * lambda;
            a.center[axis] /= lambda;
            a.modulation[axis] *= lambda;
            a
        })
        .collect();
    GaussianSum { dim: sum.dim, atoms }
}

/// Power of `lambda` that the bilinear ratio picks up under the dilation.
pub fn necessity_expected_slope(tuple: &ExponentTuple, axis: DilationAxis) -> f64 {
    match axis {
        DilationAxis::First => tuple.target_mismatch(),
        DilationAxis::Second => tuple.inner_mismatch(),
    }
}

/// Bilinear ratio under `F(x', x'') -> F(lambda x', x'')` (or the `x''`
/// analogue) applied to both factors. Admissible tuples are scale invariant;
/// each violated relation appears as the slope `1/r - (1 - 1/p - 1/q)`
/// (first group) or `1/s + 1/t - 1` (second group).
pub fn necessity_sweep(
    tuple: &ExponentTuple,
    lambda_values: &[f64],
    axis: DilationAxis,
    grid: Option<GridSpec>,
) -> Result<SweepReport> {
    if lambda_values.iter().any(|l| !(*l > 0.0 && l.is_finite())) {
        return Err(Error::InvalidParameter("dilations must be positive".into()));
    }
    if let Some(grid) = &grid {
        plane_check(grid)?;
    }
    let f0 = GaussianSum::gaussian(&[1.0, 1.0])?;
    let g0 = GaussianSum::gaussian(&[1.5, 0.75])?;
    let index = match axis {
        DilationAxis::First => 0,
        DilationAxis::Second => 1,
    };
    let points = lambda_values
        .par_iter()
        .map(|&lambda| {
            let f = dilate_group(&f0, index, lambda);
            let g = dilate_group(&g0, index, lambda);
            let grid = grid.unwrap_or_else(|| {
                fitted_grid(
                    f.space_radius().max(g.space_radius()),
                    f.frequency_radius() + g.frequency_radius(),
                )
            });
            let ratio = bilinear_ratio_raw(&from_profile(&grid, f)?, &from_profile(&grid, g)?, tuple)?;
            Ok((ratio, grid))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut exponents = BTreeMap::new();
    for (k, e) in [("p", tuple.p), ("s", tuple.s), ("q", tuple.q), ("t", tuple.t), ("r", tuple.r)] {
        exponents.insert(k.to_string(), e);
    }
    SweepReport::build(
        match axis {
            DilationAxis::First => SweepKind::NecessityFirst,
            DilationAxis::Second => SweepKind::NecessitySecond,
        },
        exponents,
        lambda_values.to_vec(),
        points.iter().map(|pt| pt.0).collect(),
        necessity_expected_slope(tuple, axis),
        Vec::new(),
        Vec::new(),
        points.iter().map(|pt| pt.1).collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(s: &str) -> Exponent {
        s.parse().unwrap()
    }

    #[test]
    fn fit_recovers_power_law() {
        let x = [1.0, 0.5, 0.25, 0.125];
        let y: Vec<f64> = x.iter().map(|v: &f64| 3.0 * v.powf(-0.7)).collect();
        let (slope, intercept, residual) = fit_log_log(&x, &y).unwrap();
        assert!((slope + 0.7).abs() < 1e-12);
        assert!((intercept - 3f64.ln()).abs() < 1e-12);
        assert!(residual < 1e-12);
        assert!(fit_log_log(&[1.0], &[1.0]).is_err());
        assert!(fit_log_log(&[1.0, 2.0], &[1.0, 0.0]).is_err());
    }

    #[test]
    fn closed_form_of_zero_is_zero() {
        let grid = fitted_grid(8.0, 8.0);
        let z = closed_form_transform(&GaussianSum::standard(1), &GaussianSum::zero(1), 0.5, e("2"), &grid).unwrap();
        assert!(z.values().iter().all(|v| v.norm() == 0.0));
    }

    #[test]
    fn closed_form_reports_unresolved_concentration() {
        let grid = GridSpec::default_for(DimensionPair { d1: 1, d2: 1 });
        let err = closed_form_transform(&GaussianSum::standard(1), &GaussianSum::standard(1), 1.0 / 32.0, e("2"), &grid)
            .unwrap_err();
        assert!(matches!(err, Error::SupportOutsideGrid { .. }), "{err}");
    }

    #[test]
    fn sweep_gates() {
        assert!(blowup_sweep(e("4/3"), e("2"), &[1.0, 0.5], None).is_err());
        assert!(blowup_sweep(e("2"), e("4/3"), &[2.0, 1.0], None).is_err());
        assert!(delta_divergence_demo(e("1"), &[1.0, 0.5], None, None).is_err());
        assert!(delta_divergence_demo(e("2"), &[0.5, 1.0], None, None).is_err());
    }

    #[test]
    fn delta_at_grid_floor_is_rejected() {
        let grid = GridSpec::default_for(DimensionPair { d1: 1, d2: 1 });
        let h = grid.spacing();
        let err = delta_divergence_demo(e("2"), &[4.0 * h, 1.5 * h], None, Some(grid)).unwrap_err();
        assert!(matches!(err, Error::Unresolvable { .. }), "{err}");
    }

    #[test]
    fn unit_dilation_sweep_is_constant() {
        let tuple = ExponentTuple::new(e("4"), e("2"), e("4"), e("2"), e("2"));
        let grid = fitted_grid(8.0, 8.0);
        let report = necessity_sweep(&tuple, &[1.0, 1.0, 1.0], DilationAxis::First, Some(grid));
        // a constant parameter list has no slope to fit
        assert!(matches!(report, Err(Error::BadSweep)));
        let ratios: Vec<f64> = (0..3)
            .map(|_| {
                let f = from_profile(&grid, GaussianSum::gaussian(&[1.0, 1.0]).unwrap()).unwrap();
                let g = from_profile(&grid, GaussianSum::gaussian(&[1.5, 0.75]).unwrap()).unwrap();
                bilinear_ratio_raw(&f, &g, &tuple).unwrap()
            })
            .collect();
        assert!(ratios.windows(2).all(|w| w[0] == w[1]));
    }

    #[test]
    fn csv_has_header_and_rows() {
        let r = SweepReport::build(
            SweepKind::Blowup,
            BTreeMap::new(),
            vec![1.0, 0.5],
            vec![1.0, 2.0],
            -1.0,
            vec![],
            vec![],
            vec![],
        )
        .unwrap();
        let csv = r.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "parameter,observed,log_parameter,log_observed");
        assert_eq!(lines.len(), 3);
        assert!((r.fitted_slope + 1.0).abs() < 1e-12);
        assert!((r.growth() - 2.0).abs() < 1e-12);
    }
}

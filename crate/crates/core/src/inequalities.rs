//! Ratio harnesses: each inequality is evaluated as `lhs / bound`, where the
//! bound is the sharp constant times the right-hand norms. A trial passes
//! when the ratio is at most `1 + tolerance`; a zero bound makes the trial
//! degenerate, which is reported and never counted as a pass.

use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exponents::{beckner_power, Admissibility, Exponent, ExponentTuple};
use crate::mixed_norms::{mixed_norm, plain_norm, MixedNormSpec};
use crate::sampling::{random_ensemble, Axes, FunctionDescriptor, GridSpec, SampledFunction};
use crate::transform::{fourier, slice_second_zero};

/// Tolerances matched to the discretisation error of each kind of trial.
pub mod tolerance {
    /// Random ensembles: quadrature error of non-Gaussian tails.
    pub const RANDOM_SUITE: f64 = 1e-2;
    /// Gaussian extremisers against the sharp constant.
    pub const GAUSSIAN_SHARPNESS: f64 = 1e-3;
    /// Pure Plancherel cases.
    pub const PLANCHEREL: f64 = 1e-6;
    /// `L^1 -> L^inf` contraction.
    pub const CONTRACTION: f64 = 1e-8;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InequalityId {
    /// `||F^(., 0)||_{p'} <= C_p^{d1} ||F||_{p,1}`
    Restriction,
    /// `||(FG)^(., 0)||_r <= C_{r'}^{d1} ||F||_{p,s} ||G||_{q,t}`
    Bilinear,
    /// `||F^||_{L^{s'}_{xi''} L^{p'}_{xi'}} <= C_p^{d1} C_s^{d2} ||F||_{p,s}`
    Variant,
    /// `||F^||_{p',s'} <= C_p^{d1} C_s^{d2} ||F||_{p,s}` for `p <= s`
    SameOrder,
    /// `||f^||_{p'} <= C_p^n ||f||_p`
    HausdorffYoung,
}

impl InequalityId {
    pub const ALL: [InequalityId; 5] = [
        InequalityId::Restriction,
        InequalityId::Bilinear,
        InequalityId::Variant,
        InequalityId::SameOrder,
        InequalityId::HausdorffYoung,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            InequalityId::Restriction => "restriction",
            InequalityId::Bilinear => "bilinear",
            InequalityId::Variant => "variant",
            InequalityId::SameOrder => "same_order",
            InequalityId::HausdorffYoung => "hausdorff_young",
        }
    }
}

impl fmt::Display for InequalityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One inequality trial.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RatioReport {
    pub inequality: InequalityId,
    pub lhs: f64,
    pub bound: f64,
    /// `lhs / bound`; absent for degenerate trials.
    pub ratio: Option<f64>,
    pub tolerance: f64,
    pub pass: bool,
    pub degenerate: bool,
    pub exponents: BTreeMap<String, Exponent>,
    pub descriptors: Vec<FunctionDescriptor>,
    /// Bilinear trials: `C_{r'}^{d1} ||FG||_{r',1}`, the bound reached after
    /// Hölder and before the restriction step.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub intermediate: Option<f64>,
}

impl RatioReport {
    fn new(
        inequality: InequalityId,
        lhs: f64,
        bound: f64,
        tolerance: f64,
        exponents: BTreeMap<String, Exponent>,
        descriptors: Vec<FunctionDescriptor>,
    ) -> Self {
        let degenerate = !(bound > 0.0 && bound.is_finite());
        let ratio = (!degenerate).then(|| lhs / bound);
        let pass = ratio.is_some_and(|r| r <= 1.0 + tolerance);
        RatioReport { inequality, lhs, bound, ratio, tolerance, pass, degenerate, exponents, descriptors, intermediate: None }
    }

    /// Compact exponent label, e.g. `p=4/3 s=2`.
    pub fn exponent_label(&self) -> String {
        let order = ["p", "s", "q", "t", "r"];
        order
            .iter()
            .filter_map(|k| self.exponents.get(*k).map(|e| format!("{k}={e}")))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn require_hy_range(e: Exponent) -> Result<()> {
    if !e.in_hausdorff_young_range() {
        return Err(Error::ExponentRange { exponent: e.to_string(), range: "[1, 2]" });
    }
    Ok(())
}

fn exps(pairs: &[(&str, Exponent)]) -> BTreeMap<String, Exponent> {
    pairs.iter().map(|(k, e)| (k.to_string(), *e)).collect()
}

/// Restriction of the transform to `xi'' = 0`, measured in `L^{p'}`,
/// against `C_p^{d1} ||F||_{L^p L^1}`.
pub fn check_restriction(f: &SampledFunction, p: Exponent, tol: f64) -> Result<RatioReport> {
    require_hy_range(p)?;
    let d1 = f.grid().dims.d1;
    let slice = slice_second_zero(&fourier(f, Axes::All)?)?;
    let lhs = plain_norm(&slice, p.conjugate());
    let bound = beckner_power(p, d1)? * mixed_norm(f, &MixedNormSpec::first_outer(p, Exponent::ONE))?;
    Ok(RatioReport::new(
        InequalityId::Restriction,
        lhs,
        bound,
        tol,
        exps(&[("p", p)]),
        vec![f.descriptor().clone()],
    ))
}

/// `lhs` and `C_{r'}^{d1} ||F||_{p,s} ||G||_{q,t}` for any tuple; the constant
/// is 1 when `r < 2`. Used directly by the scaling sweeps.
pub(crate) fn bilinear_sides(
    f: &SampledFunction,
    g: &SampledFunction,
    tuple: &ExponentTuple,
) -> Result<(f64, f64, f64)> {
    let d1 = f.grid().dims.d1;
    let fg = f.pointwise_product(g)?;
    let slice = slice_second_zero(&fourier(&fg, Axes::All)?)?;
    let lhs = plain_norm(&slice, tuple.r);
    let dual = tuple.r.conjugate();
    let constant = if dual.in_hausdorff_young_range() { beckner_power(dual, d1)? } else { 1.0 };
    let norms = mixed_norm(f, &MixedNormSpec::first_outer(tuple.p, tuple.s))?
        * mixed_norm(g, &MixedNormSpec::first_outer(tuple.q, tuple.t))?;
    let product_norm = if dual.in_hausdorff_young_range() {
        mixed_norm(&fg, &MixedNormSpec::first_outer(dual, Exponent::ONE))?
    } else {
        f64::NAN
    };
    Ok((lhs, constant * norms, constant * product_norm))
}

/// `lhs / bound` of the bilinear inequality without the admissibility gate.
pub fn bilinear_ratio_raw(f: &SampledFunction, g: &SampledFunction, tuple: &ExponentTuple) -> Result<f64> {
    let (lhs, bound, _) = bilinear_sides(f, g, tuple)?;
    if !(bound > 0.0) {
        return Err(Error::Degenerate);
    }
    Ok(lhs / bound)
}

/// Bilinear restriction estimate for an admissible tuple.
pub fn check_bilinear(
    f: &SampledFunction,
    g: &SampledFunction,
    tuple: &ExponentTuple,
    tol: f64,
) -> Result<RatioReport> {
    if let Admissibility::Violates(relation) = tuple.admissibility() {
        return Err(Error::Inadmissible(relation));
    }
    let (lhs, bound, intermediate) = bilinear_sides(f, g, tuple)?;
    let mut report = RatioReport::new(
        InequalityId::Bilinear,
        lhs,
        bound,
        tol,
        exps(&[("p", tuple.p), ("s", tuple.s), ("q", tuple.q), ("t", tuple.t), ("r", tuple.r)]),
        vec![f.descriptor().clone(), g.descriptor().clone()],
    );
    report.intermediate = Some(intermediate);
    Ok(report)
}

fn product_constant(f: &SampledFunction, p: Exponent, s: Exponent) -> Result<f64> {
    let dims = f.grid().dims;
    Ok(beckner_power(p, dims.d1)? * beckner_power(s, dims.d2)?)
}

/// Reversed-order estimate: `L^{s'}` over `xi''` taken last.
pub fn check_variant(f: &SampledFunction, p: Exponent, s: Exponent, tol: f64) -> Result<RatioReport> {
    require_hy_range(p)?;
    require_hy_range(s)?;
    let fhat = fourier(f, Axes::All)?;
    let lhs = mixed_norm(&fhat, &MixedNormSpec::second_outer(s.conjugate(), p.conjugate()))?;
    let bound = product_constant(f, p, s)? * mixed_norm(f, &MixedNormSpec::first_outer(p, s))?;
    Ok(RatioReport::new(
        InequalityId::Variant,
        lhs,
        bound,
        tol,
        exps(&[("p", p), ("s", s)]),
        vec![f.descriptor().clone()],
    ))
}

/// Same-order estimate, valid only for `p <= s`.
pub fn check_same_order(f: &SampledFunction, p: Exponent, s: Exponent, tol: f64) -> Result<RatioReport> {
    require_hy_range(p)?;
    require_hy_range(s)?;
    if p.value() > s.value() {
        return Err(Error::InvalidParameter(format!(
            "same-order estimate needs p <= s (got p={p}, s={s}); larger p is the unbounded regime"
        )));
    }
    let fhat = fourier(f, Axes::All)?;
    let lhs = mixed_norm(&fhat, &MixedNormSpec::first_outer(p.conjugate(), s.conjugate()))?;
    let bound = product_constant(f, p, s)? * mixed_norm(f, &MixedNormSpec::first_outer(p, s))?;
    Ok(RatioReport::new(
        InequalityId::SameOrder,
        lhs,
        bound,
        tol,
        exps(&[("p", p), ("s", s)]),
        vec![f.descriptor().clone()],
    ))
}

/// Sharp Hausdorff-Young on the whole grid, `n = d1 + d2`.
pub fn check_hausdorff_young(f: &SampledFunction, p: Exponent, tol: f64) -> Result<RatioReport> {
    require_hy_range(p)?;
    let n = f.grid().axis_count();
    let fhat = fourier(f, Axes::All)?;
    let lhs = plain_norm(&fhat, p.conjugate());
    let bound = beckner_power(p, n)? * plain_norm(f, p);
    Ok(RatioReport::new(
        InequalityId::HausdorffYoung,
        lhs,
        bound,
        tol,
        exps(&[("p", p)]),
        vec![f.descriptor().clone()],
    ))
}

/// Exponents of one suite selection.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TrialExponents {
    Single { p: Exponent },
    Pair { p: Exponent, s: Exponent },
    Tuple(ExponentTuple),
}

/// The fixed exponent set `{1, 4/3, 3/2, 2}` used by the suites.
pub fn suite_exponents() -> Vec<Exponent> {
    vec![Exponent::ONE, Exponent::ratio(4, 3).unwrap(), Exponent::ratio(3, 2).unwrap(), Exponent::TWO]
}

/// `count` distinct admissible tuples with reciprocals in twelfths.
pub fn random_admissible_tuples(count: usize, seed: u64) -> Vec<ExponentTuple> {
    const DEN: i64 = 12;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<ExponentTuple> = Vec::with_capacity(count);
    while out.len() < count {
        // 1/p + 1/q in [1/2, 1] makes r >= 2
        let a = rng.random_range(0..=DEN);
        let b = rng.random_range((DEN / 2 - a).max(0)..=(DEN - a));
        let c = rng.random_range(0..=DEN);
        let e = |n: i64| Exponent::from_reciprocal_ratio(n, DEN).unwrap();
        let tuple = ExponentTuple::new(e(a), e(c), e(b), e(DEN - c), e(DEN - a - b));
        debug_assert!(tuple.admissibility().is_admissible());
        if !out.contains(&tuple) {
            out.push(tuple);
        }
    }
    out
}

/// Exponent selections satisfying each inequality's hypotheses.
pub fn default_selections(id: InequalityId, seed: u64) -> Vec<TrialExponents> {
    let set = suite_exponents();
    match id {
        InequalityId::Restriction | InequalityId::HausdorffYoung => {
            set.into_iter().map(|p| TrialExponents::Single { p }).collect()
        }
        InequalityId::Variant => set
            .iter()
            .flat_map(|&p| set.iter().map(move |&s| TrialExponents::Pair { p, s }))
            .collect(),
        InequalityId::SameOrder => set
            .iter()
            .flat_map(|&p| set.iter().filter(move |s| p.value() <= s.value()).map(move |&s| TrialExponents::Pair { p, s }))
            .collect(),
        InequalityId::Bilinear => random_admissible_tuples(10, seed).into_iter().map(TrialExponents::Tuple).collect(),
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub inequality: InequalityId,
    pub grid: GridSpec,
    pub trials: usize,
    pub seed: u64,
    pub complexity: usize,
    pub tolerance: f64,
    pub selections: Vec<TrialExponents>,
}

impl SuiteConfig {
    /// Default selections, 100 trials, `K = 4` ensembles, 1e-2 tolerance.
    pub fn new(inequality: InequalityId, grid: GridSpec, seed: u64) -> Self {
        SuiteConfig {
            inequality,
            grid,
            trials: 100,
            seed,
            complexity: 4,
            tolerance: tolerance::RANDOM_SUITE,
            selections: default_selections(inequality, seed),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SuiteSummary {
    pub reports: Vec<RatioReport>,
    pub failures: usize,
    pub degenerate: usize,
    pub max_ratio: f64,
}

impl SuiteSummary {
    pub fn all_pass(&self) -> bool {
        self.failures == 0
    }
}

fn run_trial(config: &SuiteConfig, selection: &TrialExponents, seeds: (u64, u64)) -> Result<RatioReport> {
    let tol = config.tolerance;
    let k = config.complexity;
    match (config.inequality, selection) {
        (InequalityId::HausdorffYoung, TrialExponents::Single { p }) => {
            let f = random_ensemble(&config.grid.first_factor(), k, seeds.0)?;
            check_hausdorff_young(&f, *p, tol)
        }
        (InequalityId::Restriction, TrialExponents::Single { p }) => {
            check_restriction(&random_ensemble(&config.grid, k, seeds.0)?, *p, tol)
        }
        (InequalityId::Variant, TrialExponents::Pair { p, s }) => {
            check_variant(&random_ensemble(&config.grid, k, seeds.0)?, *p, *s, tol)
        }
        (InequalityId::SameOrder, TrialExponents::Pair { p, s }) => {
            check_same_order(&random_ensemble(&config.grid, k, seeds.0)?, *p, *s, tol)
        }
        (InequalityId::Bilinear, TrialExponents::Tuple(tuple)) => {
            let f = random_ensemble(&config.grid, k, seeds.0)?;
            let g = random_ensemble(&config.grid, k, seeds.1)?;
            check_bilinear(&f, &g, tuple, tol)
        }
        (id, sel) => Err(Error::InvalidParameter(format!("selection {sel:?} does not fit inequality {id}"))),
    }
}

/// Runs every selection for `config.trials` seeded trials. Trials run in
/// parallel; the report order depends only on the configuration.
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteSummary> {
    let mut jobs = Vec::with_capacity(config.selections.len() * config.trials);
    for (index, selection) in config.selections.iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        rng.set_stream(index as u64);
        for _ in 0..config.trials {
            jobs.push((selection, (rng.next_u64(), rng.next_u64())));
        }
    }
    let reports = jobs
        .par_iter()
        .map(|(selection, seeds)| run_trial(config, selection, *seeds))
        .collect::<Result<Vec<_>>>()?;
    let failures = reports.iter().filter(|r| !r.pass && !r.degenerate).count();
    let degenerate = reports.iter().filter(|r| r.degenerate).count();
    let max_ratio = reports.iter().filter_map(|r| r.ratio).fold(0.0, f64::max);
    Ok(SuiteSummary { reports, failures, degenerate, max_ratio })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exponents::DimensionPair;
    use crate::sampling::gaussian_product;
    use num_complex::Complex64;

    fn e(s: &str) -> Exponent {
        s.parse().unwrap()
    }

    fn plane() -> GridSpec {
        GridSpec::default_for(DimensionPair::new(1, 1).unwrap())
    }

    #[test]
    fn degenerate_trials_never_pass() {
        let z = SampledFunction::constant(plane(), Complex64::new(0.0, 0.0)).unwrap();
        let r = check_restriction(&z, e("4/3"), 1e-2).unwrap();
        assert!(r.degenerate);
        assert!(!r.pass);
        assert_eq!(r.ratio, None);
    }

    #[test]
    fn inadmissible_bilinear_names_relation() {
        let f = gaussian_product(&plane(), &[1.0, 1.0]).unwrap();
        let tuple = ExponentTuple::new(e("2"), e("2"), e("2"), e("2"), e("2"));
        let err = check_bilinear(&f, &f, &tuple, 1e-2).unwrap_err();
        assert!(err.to_string().contains("r-relation"), "{err}");
    }

    #[test]
    fn range_gates() {
        let f = gaussian_product(&plane(), &[1.0, 1.0]).unwrap();
        assert!(check_restriction(&f, e("3"), 1e-2).is_err());
        assert!(check_variant(&f, e("2"), e("3"), 1e-2).is_err());
        assert!(check_same_order(&f, e("2"), e("4/3"), 1e-2).is_err());
        assert!(check_hausdorff_young(&f, e("inf"), 1e-2).is_err());
    }

    #[test]
    fn orders_coincide_when_exponents_match() {
        let f = random_ensemble(&plane(), 4, 11).unwrap();
        let v = check_variant(&f, e("2"), e("2"), 1e-6).unwrap();
        let s = check_same_order(&f, e("2"), e("2"), 1e-6).unwrap();
        assert!((v.ratio.unwrap() - s.ratio.unwrap()).abs() < 1e-12);
        assert!(v.ratio.unwrap() <= 1.0 + 1e-6);
    }

    #[test]
    fn random_tuples_are_admissible_and_distinct() {
        let tuples = random_admissible_tuples(10, 5);
        assert_eq!(tuples.len(), 10);
        for (i, t) in tuples.iter().enumerate() {
            assert!(t.admissibility().is_admissible(), "{t}");
            assert!(tuples[i + 1..].iter().all(|u| u != t));
        }
        assert_eq!(tuples, random_admissible_tuples(10, 5));
    }

    #[test]
    fn selections_respect_hypotheses() {
        assert_eq!(default_selections(InequalityId::Variant, 0).len(), 16);
        assert_eq!(default_selections(InequalityId::SameOrder, 0).len(), 10);
        assert_eq!(default_selections(InequalityId::Restriction, 0).len(), 4);
    }

    #[test]
    fn report_serialises_as_json_line() {
        let f = gaussian_product(&plane(), &[1.0, 1.0]).unwrap();
        let r = check_restriction(&f, e("4/3"), 1e-3).unwrap();
        let line = serde_json::to_string(&r).unwrap();
        assert!(!line.contains('\n'));
        let v: serde_json::Value = serde_json::from_str(&line).unwrap();
        assert_eq!(v["inequality"], "restriction");
        assert_eq!(v["exponents"]["p"], "4/3");
        let back: RatioReport = serde_json::from_str(&line).unwrap();
        assert_eq!(back, r);
    }
}

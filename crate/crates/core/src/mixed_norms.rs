//! Mixed Lebesgue norms `L^a_{outer} L^b_{inner}` on sampled functions.
//!
//! The inner norm is taken first, over the inner group for each fixed point
//! of the outer group, then the outer norm of the resulting function.
//! Finite exponents use a Riemann sum weighted by the cell measure of the
//! side the group lives on; `inf` is a plain maximum of absolute values.

use ndarray::{ArrayD, Ix2};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exponents::{holder_exponents, Exponent};
use crate::sampling::{AxisGroup, SampledFunction};

/// Slack allowed in the order comparison.
pub const MINKOWSKI_SLACK: f64 = 1e-10;
/// Slack allowed in the Hölder comparison.
pub const HOLDER_SLACK: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MixedNormSpec {
    pub outer: AxisGroup,
    pub outer_exponent: Exponent,
    pub inner: AxisGroup,
    pub inner_exponent: Exponent,
}

impl MixedNormSpec {
    pub fn new(outer: AxisGroup, outer_exponent: Exponent, inner_exponent: Exponent) -> Self {
        MixedNormSpec { outer, outer_exponent, inner: outer.other(), inner_exponent }
    }

    /// `L^a_{x'} L^b_{x''}`, the natural order.
    pub fn first_outer(a: Exponent, b: Exponent) -> Self {
        Self::new(AxisGroup::First, a, b)
    }

    /// `L^a_{x''} L^b_{x'}`, the reversed order.
    pub fn second_outer(a: Exponent, b: Exponent) -> Self {
        Self::new(AxisGroup::Second, a, b)
    }
}

/// Weighted `L^e` norm of nonnegative samples.
pub(crate) fn lp_norm<'a>(values: impl Iterator<Item = &'a f64> + Clone, e: Exponent, weight: f64) -> f64 {
    let peak = values.clone().fold(0.0f64, |m, &v| m.max(v));
    if e.is_infinite() || peak == 0.0 {
        return peak;
    }
    if e.is_one() {
        return weight * values.sum::<f64>();
    }
    if e.is_two() {
        return (weight * values.map(|v| v * v).sum::<f64>()).sqrt();
    }
    let a = e.value();
    // normalise by the peak so large exponents do not overflow
    peak * (weight * values.map(|v| (v / peak).powf(a)).sum::<f64>()).powf(1.0 / a)
}

fn moduli(f: &SampledFunction) -> ArrayD<f64> {
    f.values().mapv(|v| v.norm())
}

/// Mixed norm of `|f|` with nonnegative samples given directly.
fn mixed_norm_of(abs: &ArrayD<f64>, f: &SampledFunction, spec: &MixedNormSpec) -> Result<f64> {
    let grid = f.grid();
    if spec.inner == spec.outer {
        return Err(Error::InvalidParameter("outer and inner groups must differ".into()));
    }
    let outer_axes = grid.group_axes(spec.outer);
    let inner_axes = grid.group_axes(spec.inner);
    if outer_axes.is_empty() || inner_axes.is_empty() {
        return Err(Error::InvalidParameter("mixed norm needs both coordinate groups".into()));
    }
    let perm: Vec<usize> = outer_axes.clone().chain(inner_axes.clone()).collect();
    let rows = grid.points.pow(outer_axes.len() as u32);
    let cols = grid.points.pow(inner_axes.len() as u32);
    let arranged = abs.view().permuted_axes(perm);
    let arranged = arranged.as_standard_layout();
    let matrix = arranged
        .into_shape_with_order((rows, cols))
        .map_err(|e| Error::InvalidGrid(e.to_string()))?
        .into_dimensionality::<Ix2>()
        .map_err(|e| Error::InvalidGrid(e.to_string()))?;
    let inner_weight = f.group_measure(spec.inner);
    let outer_weight = f.group_measure(spec.outer);
    let inner: Vec<f64> = matrix
        .rows()
        .into_iter()
        .map(|row| lp_norm(row.iter(), spec.inner_exponent, inner_weight))
        .collect();
    Ok(lp_norm(inner.iter(), spec.outer_exponent, outer_weight))
}

pub fn mixed_norm(f: &SampledFunction, spec: &MixedNormSpec) -> Result<f64> {
    mixed_norm_of(&moduli(f), f, spec)
}

/// Plain `L^a` norm over every axis of the grid.
pub fn plain_norm(f: &SampledFunction, a: Exponent) -> f64 {
    let weight = f.group_measure(AxisGroup::First) * f.group_measure(AxisGroup::Second);
    let abs = moduli(f);
    lp_norm(abs.iter(), a, weight)
}

/// Result of comparing the two orders of a mixed norm.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MinkowskiComparison {
    /// Mixed norm with the larger exponent taken last (outermost).
    pub larger_outer: f64,
    /// Mixed norm with the smaller exponent taken last.
    pub smaller_outer: f64,
    /// `larger_outer <= smaller_outer` up to [`MINKOWSKI_SLACK`].
    pub holds: bool,
}

/// Compares `L^a_{x'} L^b_{x''}` with `L^b_{x''} L^a_{x'}`: putting the larger
/// exponent outermost gives the smaller value.
pub fn minkowski_compare(f: &SampledFunction, a: Exponent, b: Exponent) -> Result<MinkowskiComparison> {
    if f.values().iter().any(|v| v.im == 0.0 && v.re < 0.0) {
        return Err(Error::NegativeValues);
    }
    let abs = moduli(f);
    let first_outer = mixed_norm_of(&abs, f, &MixedNormSpec::first_outer(a, b))?;
    let second_outer = mixed_norm_of(&abs, f, &MixedNormSpec::second_outer(b, a))?;
    let (larger_outer, smaller_outer) = if a.value() >= b.value() {
        (first_outer, second_outer)
    } else {
        (second_outer, first_outer)
    };
    let holds = larger_outer <= smaller_outer + MINKOWSKI_SLACK * smaller_outer.max(1.0);
    Ok(MinkowskiComparison { larger_outer, smaller_outer, holds })
}

/// `||F G||_{u,v} / (||F||_{p,s} ||G||_{q,t})` with `1/u = 1/p + 1/q`,
/// `1/v = 1/s + 1/t`; at most `1 + HOLDER_SLACK`.
pub fn holder_compare(
    f: &SampledFunction,
    g: &SampledFunction,
    p: Exponent,
    s: Exponent,
    q: Exponent,
    t: Exponent,
) -> Result<f64> {
    let (u, v) = holder_exponents(p, q, s, t)?;
    let fg = f.pointwise_product(g)?;
    let den = mixed_norm(f, &MixedNormSpec::first_outer(p, s))? * mixed_norm(g, &MixedNormSpec::first_outer(q, t))?;
    if den == 0.0 {
        return Err(Error::Degenerate);
    }
    Ok(mixed_norm(&fg, &MixedNormSpec::first_outer(u, v))? / den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exponents::DimensionPair;
    use crate::sampling::{gaussian_product, GridSpec};
    use ndarray::{arr2, IxDyn};
    use num_complex::Complex64;

    fn e(s: &str) -> Exponent {
        s.parse().unwrap()
    }

    fn identity_2x2() -> SampledFunction {
        // N = 2, L = 2: unit cell measure
        let grid = GridSpec::new(DimensionPair::new(1, 1).unwrap(), 2, 2.0).unwrap();
        let values = arr2(&[[1.0, 0.0], [0.0, 1.0]])
            .mapv(|x| Complex64::new(x, 0.0))
            .into_shape_with_order(IxDyn(&[2, 2]))
            .unwrap();
        SampledFunction::from_values(grid, values).unwrap()
    }

    #[test]
    fn identity_oracle() {
        let f = identity_2x2();
        let rows_outer = mixed_norm(&f, &MixedNormSpec::first_outer(e("1"), e("2"))).unwrap();
        assert!((rows_outer - 2.0).abs() < 1e-15);
        let reversed = mixed_norm(&f, &MixedNormSpec::second_outer(e("2"), e("1"))).unwrap();
        assert!((reversed - 2f64.sqrt()).abs() < 1e-15);

        let cmp = minkowski_compare(&f, e("2"), e("1")).unwrap();
        assert!((cmp.larger_outer - 2f64.sqrt()).abs() < 1e-15);
        assert!((cmp.smaller_outer - 2.0).abs() < 1e-15);
        assert!(cmp.holds);
    }

    #[test]
    fn ones_on_unit_measure() {
        let grid = GridSpec::new(DimensionPair::new(1, 1).unwrap(), 4, 1.0).unwrap();
        let f = SampledFunction::constant(grid, Complex64::new(1.0, 0.0)).unwrap();
        for (p, s) in [("1", "2"), ("3", "inf"), ("inf", "4/3")] {
            let n = mixed_norm(&f, &MixedNormSpec::first_outer(e(p), e(s))).unwrap();
            assert!((n - 1.0).abs() < 1e-14, "{p} {s} {n}");
        }
    }

    #[test]
    fn sup_norm_and_zero() {
        let grid = GridSpec::default_for(DimensionPair::new(1, 0).unwrap());
        let g = gaussian_product(&grid, &[1.0]).unwrap();
        assert_eq!(plain_norm(&g, Exponent::INFINITY), 1.0);
        let z = SampledFunction::constant(grid, Complex64::new(0.0, 0.0)).unwrap();
        assert_eq!(plain_norm(&z, e("3")), 0.0);
    }

    #[test]
    fn negative_values_rejected() {
        let f = identity_2x2().scaled(Complex64::new(-1.0, 0.0));
        assert!(matches!(minkowski_compare(&f, e("2"), e("1")), Err(Error::NegativeValues)));
    }

    #[test]
    fn holder_equality_cases() {
        let grid = GridSpec::new(DimensionPair::new(1, 1).unwrap(), 8, 1.0).unwrap();
        let f = SampledFunction::from_fn(grid, "ramp", |x| Complex64::new(1.0 + x[0] + 0.5 * x[1], 0.3)).unwrap();
        let one = SampledFunction::constant(grid, Complex64::new(1.0, 0.0)).unwrap();
        let r = holder_compare(&f, &one, e("2"), e("3"), e("inf"), e("inf")).unwrap();
        assert!((r - 1.0).abs() < 1e-12);

        let plane = GridSpec::default_for(DimensionPair::new(1, 1).unwrap());
        let g = gaussian_product(&plane, &[1.0, 1.0]).unwrap();
        let r = holder_compare(&g, &g, e("2"), e("2"), e("2"), e("2")).unwrap();
        assert!((r - 1.0).abs() < 1e-10);
    }

    #[test]
    fn holder_degenerate() {
        let grid = GridSpec::new(DimensionPair::new(1, 1).unwrap(), 4, 1.0).unwrap();
        let z = SampledFunction::constant(grid, Complex64::new(0.0, 0.0)).unwrap();
        assert!(matches!(holder_compare(&z, &z, e("2"), e("2"), e("2"), e("2")), Err(Error::Degenerate)));
    }
}

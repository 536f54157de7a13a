//! Continuum Fourier transform `F^(xi) = int exp(-2 pi i x.xi) F(x) dx`
//! approximated by the DFT on centered grids.
//!
//! With `x_j = (j - N/2) h` and `xi_k = (k - N/2)/L` the kernel factors as
//! `exp(-2 pi i jk/N) (-1)^j (-1)^k (-1)^{N/2}`, so each axis transform is a
//! plain FFT between two sign ramps, scaled by `h`. The ramps are exact
//! signs; no array shifting is involved.

use std::sync::Arc;

use ndarray::{ArrayD, Axis};
use num_complex::Complex64;
use rustfft::{Fft, FftDirection, FftPlanner};

use crate::error::{Error, Result};
use crate::exponents::DimensionPair;
use crate::sampling::{AxisGroup, Axes, GridSpec, SampledFunction, Side};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Inverse,
}

/// Immutable description of a transform over a subset of axis groups.
#[derive(Clone)]
pub struct TransformPlan {
    grid: GridSpec,
    axes: Axes,
    direction: Direction,
    fft: Arc<dyn Fft<f64>>,
}

impl std::fmt::Debug for TransformPlan {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TransformPlan")
            .field("grid", &self.grid)
            .field("axes", &self.axes)
            .field("direction", &self.direction)
            .finish()
    }
}

impl TransformPlan {
    pub fn new(grid: GridSpec, axes: Axes, direction: Direction) -> Self {
        let fft_direction = match direction {
            Direction::Forward => FftDirection::Forward,
            Direction::Inverse => FftDirection::Inverse,
        };
        let fft = FftPlanner::new().plan_fft(grid.points, fft_direction);
        TransformPlan { grid, axes, direction, fft }
    }

    pub fn grid(&self) -> &GridSpec {
        &self.grid
    }

    pub fn apply(&self, f: &SampledFunction) -> Result<SampledFunction> {
        if f.grid() != &self.grid {
            return Err(Error::GridMismatch);
        }
        let (from, to) = match self.direction {
            Direction::Forward => (Side::Space, Side::Frequency),
            Direction::Inverse => (Side::Frequency, Side::Space),
        };
        let mut sides = f.sides();
        let mut groups = Vec::new();
        for &group in self.axes.groups() {
            if self.grid.group_axes(group).is_empty() {
                continue;
            }
            if f.side(group) != from {
                return Err(Error::SideMismatch(match self.direction {
                    Direction::Forward => "forward transform of axes already on the frequency side",
                    Direction::Inverse => "inverse transform of axes already on the space side",
                }));
            }
            sides[match group {
                AxisGroup::First => 0,
                AxisGroup::Second => 1,
            }] = to;
            groups.push(group);
        }
        let mut values = f.values().clone();
        for group in groups {
            for axis in self.grid.group_axes(group) {
                self.transform_axis(&mut values, axis);
            }
        }
        Ok(f.derived(self.grid, values, sides))
    }

    fn transform_axis(&self, values: &mut ArrayD<Complex64>, axis: usize) {
        let n = self.grid.points;
        let scale = match self.direction {
            Direction::Forward => self.grid.spacing(),
            Direction::Inverse => self.grid.frequency_spacing(),
        };
        let post = if (n / 2).is_multiple_of(2) { scale } else { -scale };
        let sign = |i: usize| if i.is_multiple_of(2) { 1.0 } else { -1.0 };
        let mut buf = vec![Complex64::new(0.0, 0.0); n];
        let mut scratch = vec![Complex64::new(0.0, 0.0); self.fft.get_inplace_scratch_len()];
        for mut lane in values.lanes_mut(Axis(axis)) {
            for (j, (b, v)) in buf.iter_mut().zip(lane.iter()).enumerate() {
                *b = *v * sign(j);
            }
            self.fft.process_with_scratch(&mut buf, &mut scratch);
            for (k, (v, b)) in lane.iter_mut().zip(buf.iter()).enumerate() {
                *v = *b * (sign(k) * post);
            }
        }
    }
}

/// Forward transform over the selected axis groups.
pub fn fourier(f: &SampledFunction, axes: Axes) -> Result<SampledFunction> {
    TransformPlan::new(*f.grid(), axes, Direction::Forward).apply(f)
}

pub fn inverse_fourier(f: &SampledFunction, axes: Axes) -> Result<SampledFunction> {
    TransformPlan::new(*f.grid(), axes, Direction::Inverse).apply(f)
}

/// Restriction of a transform to the hyperplane `xi'' = 0`.
pub fn slice_second_zero(fhat: &SampledFunction) -> Result<SampledFunction> {
    let grid = fhat.grid();
    if grid.dims.d2 == 0 {
        return Err(Error::InvalidParameter("no second coordinate group to restrict".into()));
    }
    if fhat.side(AxisGroup::Second) != Side::Frequency {
        return Err(Error::SideMismatch("slice needs the second group on the frequency side"));
    }
    let zero = grid.zero_index();
    let mut view = fhat.values().view();
    for axis in grid.group_axes(AxisGroup::Second).rev() {
        view = view.index_axis_move(Axis(axis), zero);
    }
    let sub = grid.with_dims(DimensionPair { d1: grid.dims.d1, d2: 0 });
    let sides = [fhat.side(AxisGroup::First), Side::Frequency];
    Ok(fhat.derived(sub, view.to_owned(), sides))
}

/// `f(x') = int F(x', x'') dx''` as an `h`-weighted sum over the second group.
pub fn marginal_second(f: &SampledFunction) -> Result<SampledFunction> {
    let grid = f.grid();
    if grid.dims.d2 == 0 {
        return Err(Error::InvalidParameter("no second coordinate group to integrate".into()));
    }
    if f.side(AxisGroup::Second) != Side::Space {
        return Err(Error::SideMismatch("marginal needs the second group on the space side"));
    }
    let mut values = f.values().clone();
    for axis in grid.group_axes(AxisGroup::Second).rev() {
        values = values.sum_axis(Axis(axis));
    }
    let weight = f.group_measure(AxisGroup::Second);
    values.mapv_inplace(|v| v * weight);
    let sub = grid.with_dims(DimensionPair { d1: grid.dims.d1, d2: 0 });
    Ok(f.derived(sub, values, [f.side(AxisGroup::First), Side::Space]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::{gaussian_product, random_ensemble};

    fn plane() -> GridSpec {
        GridSpec::default_for(DimensionPair::new(1, 1).unwrap())
    }

    #[test]
    fn round_trip_is_identity() {
        let f = random_ensemble(&plane(), 5, 3).unwrap();
        let back = inverse_fourier(&fourier(&f, Axes::All).unwrap(), Axes::All).unwrap();
        let scale = f.values().iter().map(|v| v.norm()).fold(0.0, f64::max);
        assert!(back.max_abs_diff(&f).unwrap() <= 1e-10 * scale);
        assert_eq!(back.sides(), [Side::Space, Side::Space]);
    }

    #[test]
    fn odd_half_length_grid_round_trips() {
        // N/2 odd flips the constant sign of the post ramp
        let grid = GridSpec::new(DimensionPair::new(1, 0).unwrap(), 130, 16.0).unwrap();
        let f = gaussian_product(&grid, &[1.0]).unwrap();
        let fhat = fourier(&f, Axes::All).unwrap();
        // self-dual Gaussian
        let err = fhat
            .values()
            .iter()
            .enumerate()
            .map(|(k, v)| {
                let xi = grid.frequency_coord(k);
                (v - Complex64::new((-std::f64::consts::PI * xi * xi).exp(), 0.0)).norm()
            })
            .fold(0.0, f64::max);
        assert!(err < 1e-10, "{err}");
    }

    #[test]
    fn side_mismatch_rejected() {
        let f = gaussian_product(&plane(), &[1.0, 1.0]).unwrap();
        let fhat = fourier(&f, Axes::Second).unwrap();
        assert!(matches!(fourier(&fhat, Axes::All), Err(Error::SideMismatch(_))));
        assert!(matches!(inverse_fourier(&f, Axes::First), Err(Error::SideMismatch(_))));
        assert!(matches!(marginal_second(&fhat), Err(Error::SideMismatch(_))));
        assert!(matches!(slice_second_zero(&f), Err(Error::SideMismatch(_))));
    }

    #[test]
    fn odd_in_second_variable_has_zero_marginal_and_slice() {
        let f = SampledFunction::from_fn(plane(), "odd", |x| {
            Complex64::new(x[1] * (-std::f64::consts::PI * (x[0] * x[0] + x[1] * x[1])).exp(), 0.0)
        })
        .unwrap();
        let m = marginal_second(&f).unwrap();
        assert!(m.values().iter().all(|v| v.norm() < 1e-12));
        let s = slice_second_zero(&fourier(&f, Axes::All).unwrap()).unwrap();
        assert!(s.values().iter().all(|v| v.norm() < 1e-10));
    }
}

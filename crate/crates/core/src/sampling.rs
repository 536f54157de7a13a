//! Product grids and the analytic function families sampled on them.
//!
//! Every generated function is backed by a closed-form description (a sum of
//! modulated Gaussian atoms, possibly sheared or paired with a narrow bump),
//! so dilations and shears are re-evaluated exactly rather than interpolated.
//! A [`FunctionDescriptor`] together with a [`GridSpec`] reproduces the
//! sampled values bit for bit.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use ndarray::{ArrayD, IxDyn};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exponents::{DimensionPair, Exponent};

/// Relative amplitude below which a Gaussian tail counts as outside its
/// essential support.
pub const CONTAINMENT_TAIL: f64 = 1e-14;

/// Distance, in units of the Gaussian width `a^{-1/2}`, at which
/// `exp(-pi a x^2)` falls to [`CONTAINMENT_TAIL`].
pub fn containment_radius() -> f64 {
    ((1.0 / CONTAINMENT_TAIL).ln() / std::f64::consts::PI).sqrt()
}

pub const DEFAULT_POINTS: usize = 256;
pub const DEFAULT_EXTENT: f64 = 16.0;

const TWO_PI: f64 = 2.0 * std::f64::consts::PI;
const PI: f64 = std::f64::consts::PI;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Space,
    Frequency,
}

/// One of the two coordinate groups `x'` (first) and `x''` (second).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AxisGroup {
    First,
    Second,
}

impl AxisGroup {
    pub fn other(self) -> AxisGroup {
        match self {
            AxisGroup::First => AxisGroup::Second,
            AxisGroup::Second => AxisGroup::First,
        }
    }

    fn index(self) -> usize {
        match self {
            AxisGroup::First => 0,
            AxisGroup::Second => 1,
        }
    }
}

/// Axis selector for transforms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axes {
    First,
    Second,
    All,
}

impl Axes {
    pub fn groups(self) -> &'static [AxisGroup] {
        match self {
            Axes::First => &[AxisGroup::First],
            Axes::Second => &[AxisGroup::Second],
            Axes::All => &[AxisGroup::First, AxisGroup::Second],
        }
    }
}

/// Uniform discretisation of `R^{d1} x R^{d2}`: `N` points per axis on
/// `[-L/2, L/2)`, spacing `h = L/N`. The frequency grid is the centered dual
/// grid `(k - N/2)/L`, so with `N` even the origin is a sample on both sides.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub dims: DimensionPair,
    #[serde(rename = "points_per_axis")]
    pub points: usize,
    #[serde(rename = "extent_per_axis")]
    pub extent: f64,
}

impl GridSpec {
    pub fn new(dims: DimensionPair, points: usize, extent: f64) -> Result<Self> {
        if points < 2 || !points.is_multiple_of(2) {
            return Err(Error::InvalidGrid(format!("points per axis must be even and >= 2, got {points}")));
        }
        if !(extent > 0.0 && extent.is_finite()) {
            return Err(Error::InvalidGrid(format!("extent must be positive, got {extent}")));
        }
        Ok(GridSpec { dims, points, extent })
    }

    /// `N = 256`, `L = 16` per axis.
    pub fn default_for(dims: DimensionPair) -> Self {
        GridSpec { dims, points: DEFAULT_POINTS, extent: DEFAULT_EXTENT }
    }

    pub fn with_dims(&self, dims: DimensionPair) -> Self {
        GridSpec { dims, ..*self }
    }

    /// The grid of the first factor alone, `d2 = 0`.
    pub fn first_factor(&self) -> Self {
        self.with_dims(DimensionPair { d1: self.dims.d1, d2: 0 })
    }

    pub fn spacing(&self) -> f64 {
        self.extent / self.points as f64
    }

    pub fn frequency_spacing(&self) -> f64 {
        1.0 / self.extent
    }

    pub fn frequency_extent(&self) -> f64 {
        self.points as f64 / self.extent
    }

    /// Largest representable frequency magnitude, `N / 2L`.
    pub fn nyquist(&self) -> f64 {
        0.5 * self.frequency_extent()
    }

    pub fn axis_count(&self) -> usize {
        self.dims.total()
    }

    pub fn shape(&self) -> Vec<usize> {
        vec![self.points; self.axis_count()]
    }

    pub fn len(&self) -> usize {
        self.points.pow(self.axis_count() as u32)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Index of the origin on either side.
    pub fn zero_index(&self) -> usize {
        self.points / 2
    }

    pub fn space_coord(&self, j: usize) -> f64 {
        (j as f64 - (self.points / 2) as f64) * self.spacing()
    }

    pub fn frequency_coord(&self, k: usize) -> f64 {
        (k as f64 - (self.points / 2) as f64) / self.extent
    }

    pub fn coord(&self, side: Side, i: usize) -> f64 {
        match side {
            Side::Space => self.space_coord(i),
            Side::Frequency => self.frequency_coord(i),
        }
    }

    pub fn coords(&self, side: Side) -> Vec<f64> {
        (0..self.points).map(|i| self.coord(side, i)).collect()
    }

    /// Measure of one cell along one axis.
    pub fn measure(&self, side: Side) -> f64 {
        match side {
            Side::Space => self.spacing(),
            Side::Frequency => self.frequency_spacing(),
        }
    }

    pub fn group_axes(&self, group: AxisGroup) -> std::ops::Range<usize> {
        match group {
            AxisGroup::First => 0..self.dims.d1,
            AxisGroup::Second => self.dims.d1..self.dims.total(),
        }
    }

    pub fn group_of_axis(&self, axis: usize) -> AxisGroup {
        if axis < self.dims.d1 {
            AxisGroup::First
        } else {
            AxisGroup::Second
        }
    }
}

/// `A * prod_i exp(-pi a_i (x_i - c_i)^2) exp(2 pi i w_i x_i)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GaussianAtom {
    pub amplitude: Complex64,
    pub center: Vec<f64>,
    pub scale: Vec<f64>,
    pub modulation: Vec<f64>,
}

impl GaussianAtom {
    /// Centered, unmodulated atom with unit amplitude.
    pub fn centered(scale: Vec<f64>) -> Self {
        let d = scale.len();
        GaussianAtom {
            amplitude: Complex64::new(1.0, 0.0),
            center: vec![0.0; d],
            scale,
            modulation: vec![0.0; d],
        }
    }

    pub fn dim(&self) -> usize {
        self.scale.len()
    }

    fn validate(&self) -> Result<()> {
        let d = self.scale.len();
        if self.center.len() != d || self.modulation.len() != d {
            return Err(Error::InvalidParameter("atom vectors differ in length".into()));
        }
        if self.scale.iter().any(|&a| !(a > 0.0 && a.is_finite())) {
            return Err(Error::InvalidParameter("Gaussian scales must be positive".into()));
        }
        if !(self.amplitude.re.is_finite() && self.amplitude.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(())
    }

    pub fn eval_axis(&self, axis: usize, x: f64) -> Complex64 {
        let (a, c, w) = (self.scale[axis], self.center[axis], self.modulation[axis]);
        Complex64::from_polar((-PI * a * (x - c) * (x - c)).exp(), TWO_PI * w * x)
    }

    /// Closed-form transform of one axis factor:
    /// `a^{-1/2} exp(-pi (xi - w)^2 / a) exp(-2 pi i c (xi - w))`.
    pub fn fourier_axis(&self, axis: usize, xi: f64) -> Complex64 {
        let (a, c, w) = (self.scale[axis], self.center[axis], self.modulation[axis]);
        let d = xi - w;
        Complex64::from_polar(a.powf(-0.5) * (-PI * d * d / a).exp(), -TWO_PI * c * d)
    }
}

/// A finite sum of Gaussian atoms on `R^dim`, with closed-form transform.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GaussianSum {
    pub dim: usize,
    pub atoms: Vec<GaussianAtom>,
}

impl GaussianSum {
    pub fn new(dim: usize, atoms: Vec<GaussianAtom>) -> Result<Self> {
        for atom in &atoms {
            if atom.dim() != dim {
                return Err(Error::InvalidParameter(format!(
                    "atom of dimension {} in a sum of dimension {dim}",
                    atom.dim()
                )));
            }
            atom.validate()?;
        }
        Ok(GaussianSum { dim, atoms })
    }

    pub fn zero(dim: usize) -> Self {
        GaussianSum { dim, atoms: Vec::new() }
    }

    /// `prod_i exp(-pi a_i x_i^2)`.
    pub fn gaussian(scales: &[f64]) -> Result<Self> {
        GaussianSum::new(scales.len(), vec![GaussianAtom::centered(scales.to_vec())])
    }

    /// `exp(-pi |x|^2)`, its own Fourier transform.
    pub fn standard(dim: usize) -> Self {
        GaussianSum::gaussian(&vec![1.0; dim]).unwrap()
    }

    pub fn eval(&self, x: &[f64]) -> Complex64 {
        self.atoms
            .iter()
            .map(|atom| {
                (0..self.dim).fold(atom.amplitude, |acc, i| acc * atom.eval_axis(i, x[i]))
            })
            .sum()
    }

    pub fn fourier_eval(&self, xi: &[f64]) -> Complex64 {
        self.atoms
            .iter()
            .map(|atom| {
                (0..self.dim).fold(atom.amplitude, |acc, i| acc * atom.fourier_axis(i, xi[i]))
            })
            .sum()
    }

    /// `x -> t^{1/p} f(t x_0, x_1, ...)`: L^p-normalised dilation of axis 0.
    pub fn dilate_axis0(&self, t: f64, p: Exponent) -> Result<Self> {
        if !(t > 0.0 && t.is_finite()) {
            return Err(Error::InvalidParameter(format!("dilation must be positive, got {t}")));
        }
        let gain = t.powf(p.reciprocal());
        let atoms = self
            .atoms
            .iter()
            .map(|atom| {
                let mut a = atom.clone();
                a.amplitude *= gain;
                a.scale[0] *= t * t;
                a.center[0] /= t;
                a.modulation[0] *= t;
                a
            })
            .collect();
        Ok(GaussianSum { dim: self.dim, atoms })
    }

    /// Radius of the cube outside which every atom is below [`CONTAINMENT_TAIL`].
    pub fn space_radius(&self) -> f64 {
        let rho = containment_radius();
        self.atoms
            .iter()
            .flat_map(|a| (0..a.dim()).map(move |i| a.center[i].abs() + rho / a.scale[i].sqrt()))
            .fold(0.0, f64::max)
    }

    /// Same as [`space_radius`](Self::space_radius) for the transform.
    pub fn frequency_radius(&self) -> f64 {
        let rho = containment_radius();
        self.atoms
            .iter()
            .flat_map(|a| (0..a.dim()).map(move |i| a.modulation[i].abs() + rho * a.scale[i].sqrt()))
            .fold(0.0, f64::max)
    }

    /// Fails unless both the function and its transform are contained in the
    /// grid windows.
    pub fn check_contained(&self, grid: &GridSpec) -> Result<()> {
        check_radii(grid, self.space_radius(), self.frequency_radius())
    }

    /// Samples on `grid` with the given side per group. `dim` must equal the
    /// grid's axis count.
    pub fn sample(&self, grid: &GridSpec, sides: [Side; 2]) -> Result<ArrayD<Complex64>> {
        if self.dim != grid.axis_count() {
            return Err(Error::InvalidParameter(format!(
                "function of dimension {} on a grid with {} axes",
                self.dim,
                grid.axis_count()
            )));
        }
        let shape = grid.shape();
        let mut values = ArrayD::<Complex64>::zeros(IxDyn(&shape));
        for atom in &self.atoms {
            let tables: Vec<Vec<Complex64>> = (0..self.dim)
                .map(|axis| {
                    let side = sides[grid.group_of_axis(axis).index()];
                    (0..grid.points)
                        .map(|i| {
                            let x = grid.coord(side, i);
                            match side {
                                Side::Space => atom.eval_axis(axis, x),
                                Side::Frequency => atom.fourier_axis(axis, x),
                            }
                        })
                        .collect()
                })
                .collect();
            // row-major outer product, first axis outermost
            let mut acc = vec![atom.amplitude];
            for table in &tables {
                acc = acc.iter().flat_map(|a| table.iter().map(move |t| a * t)).collect();
            }
            for (v, a) in values.iter_mut().zip(&acc) {
                *v += a;
            }
        }
        Ok(values)
    }
}

pub(crate) fn check_radii(grid: &GridSpec, space_radius: f64, frequency_radius: f64) -> Result<()> {
    if space_radius > 0.5 * grid.extent {
        return Err(Error::SupportOutsideGrid { required_extent: 2.0 * space_radius });
    }
    if frequency_radius > grid.nyquist() {
        let needed = (2.0 * grid.extent * frequency_radius).ceil() as usize;
        return Err(Error::Unresolved { required_points: needed + needed % 2 });
    }
    Ok(())
}

/// Family name plus parameters; serialises as
/// `{"family": ..., "parameters": {...}, "seed": ...}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", content = "parameters", rename_all = "snake_case")]
pub enum FunctionKind {
    /// `prod_i exp(-pi a_i x_i^2)` over all grid axes.
    GaussianProduct { scales: Vec<f64> },
    /// Seeded sum of `complexity` random modulated Gaussians.
    RandomEnsemble { complexity: usize },
    /// `f_t(x) = t^{1/p} first(t x_0, ...)`, optionally sheared against
    /// `second` as `f_t(x) second(y - x)` on `R x R`.
    DilationShear {
        first: GaussianSum,
        second: Option<GaussianSum>,
        t: f64,
        p: Exponent,
    },
    /// `first(x) d_eps(y + x)` (sheared) or `first(x) d_eps(y)`, with `d_eps`
    /// the unit-mass Gaussian `eps^{-1} exp(-pi y^2 / eps^2)`.
    NearDelta {
        first: GaussianSum,
        epsilon: f64,
        sheared: bool,
    },
    /// A fixed Gaussian sum, or raw samples with no analytic form.
    Explicit {
        atoms: Option<GaussianSum>,
        label: Option<String>,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FunctionDescriptor {
    #[serde(flatten)]
    pub kind: FunctionKind,
    pub seed: Option<u64>,
}

impl FunctionDescriptor {
    pub fn new(kind: FunctionKind) -> Self {
        FunctionDescriptor { kind, seed: None }
    }

    pub fn seeded(kind: FunctionKind, seed: u64) -> Self {
        FunctionDescriptor { kind, seed: Some(seed) }
    }

    pub fn family(&self) -> &'static str {
        match self.kind {
            FunctionKind::GaussianProduct { .. } => "gaussian_product",
            FunctionKind::RandomEnsemble { .. } => "random_ensemble",
            FunctionKind::DilationShear { .. } => "dilation_shear",
            FunctionKind::NearDelta { .. } => "near_delta",
            FunctionKind::Explicit { .. } => "explicit",
        }
    }

    /// The separable Gaussian sum this descriptor denotes on `grid`, if it is
    /// one (sheared and near-delta families are not).
    pub fn analytic_profile(&self, grid: &GridSpec) -> Result<GaussianSum> {
        match &self.kind {
            FunctionKind::GaussianProduct { scales } => GaussianSum::gaussian(scales),
            FunctionKind::RandomEnsemble { complexity } => {
                let seed = self
                    .seed
                    .ok_or_else(|| Error::InvalidParameter("random ensemble needs a seed".into()))?;
                random_atoms(grid, *complexity, seed)
            }
            FunctionKind::DilationShear { first, second: None, t, p } => first.dilate_axis0(*t, *p),
            FunctionKind::Explicit { atoms: Some(sum), .. } => Ok(sum.clone()),
            FunctionKind::DilationShear { .. } => Err(Error::NotAnalytic("sheared product")),
            FunctionKind::NearDelta { .. } => Err(Error::NotAnalytic("near-delta family")),
            FunctionKind::Explicit { atoms: None, .. } => Err(Error::NotAnalytic("raw samples")),
        }
    }

    /// Sample the described function on the space side of `grid`.
    pub fn realize(&self, grid: &GridSpec) -> Result<SampledFunction> {
        let values = match &self.kind {
            FunctionKind::DilationShear { first, second: Some(second), t, p } => {
                let f = first.dilate_axis0(*t, *p)?;
                sample_shear(grid, &f, second)?
            }
            FunctionKind::NearDelta { first, epsilon, sheared } => {
                sample_near_delta(grid, first, *epsilon, *sheared)?
            }
            _ => {
                let sum = self.analytic_profile(grid)?;
                sum.check_contained(grid)?;
                sum.sample(grid, [Side::Space; 2])?
            }
        };
        SampledFunction::new(*grid, values, [Side::Space; 2], self.clone())
    }
}

/// Complex samples on a product grid, with the side (space or frequency) of
/// each coordinate group and the descriptor that produced them.
#[derive(Clone, Debug)]
pub struct SampledFunction {
    grid: GridSpec,
    values: ArrayD<Complex64>,
    sides: [Side; 2],
    descriptor: FunctionDescriptor,
}

impl SampledFunction {
    pub fn new(
        grid: GridSpec,
        values: ArrayD<Complex64>,
        sides: [Side; 2],
        descriptor: FunctionDescriptor,
    ) -> Result<Self> {
        let expected = grid.shape();
        if values.shape() != expected.as_slice() {
            return Err(Error::ShapeMismatch { expected, found: values.shape().to_vec() });
        }
        if values.iter().any(|v| !(v.re.is_finite() && v.im.is_finite())) {
            return Err(Error::NonFinite);
        }
        Ok(SampledFunction { grid, values, sides, descriptor })
    }

    /// Raw space-side samples with no analytic form.
    pub fn from_values(grid: GridSpec, values: ArrayD<Complex64>) -> Result<Self> {
        let descriptor = FunctionDescriptor::new(FunctionKind::Explicit { atoms: None, label: None });
        Self::new(grid, values, [Side::Space; 2], descriptor)
    }

    /// Space-side samples of an arbitrary closure of the coordinates.
    pub fn from_fn(grid: GridSpec, label: &str, f: impl Fn(&[f64]) -> Complex64) -> Result<Self> {
        let mut x = vec![0.0; grid.axis_count()];
        let values = ArrayD::from_shape_fn(IxDyn(&grid.shape()), |idx| {
            for (axis, xi) in x.iter_mut().enumerate() {
                *xi = grid.space_coord(idx[axis]);
            }
            f(&x)
        });
        let descriptor = FunctionDescriptor::new(FunctionKind::Explicit {
            atoms: None,
            label: Some(label.to_string()),
        });
        Self::new(grid, values, [Side::Space; 2], descriptor)
    }

    pub fn constant(grid: GridSpec, value: Complex64) -> Result<Self> {
        let values = ArrayD::from_elem(IxDyn(&grid.shape()), value);
        let descriptor = FunctionDescriptor::new(FunctionKind::Explicit {
            atoms: None,
            label: Some(format!("constant {value}")),
        });
        Self::new(grid, values, [Side::Space; 2], descriptor)
    }

    pub(crate) fn derived(&self, grid: GridSpec, values: ArrayD<Complex64>, sides: [Side; 2]) -> Self {
        SampledFunction { grid, values, sides, descriptor: self.descriptor.clone() }
    }

    pub fn grid(&self) -> &GridSpec {
        &self.grid
    }

    pub fn values(&self) -> &ArrayD<Complex64> {
        &self.values
    }

    pub fn into_values(self) -> ArrayD<Complex64> {
        self.values
    }

    pub fn sides(&self) -> [Side; 2] {
        self.sides
    }

    pub fn side(&self, group: AxisGroup) -> Side {
        self.sides[group.index()]
    }

    pub fn descriptor(&self) -> &FunctionDescriptor {
        &self.descriptor
    }

    pub fn analytic_profile(&self) -> Result<GaussianSum> {
        self.descriptor.analytic_profile(&self.grid)
    }

    /// Cell measure of one sample restricted to the axes of `group`.
    pub fn group_measure(&self, group: AxisGroup) -> f64 {
        let n = self.grid.group_axes(group).len() as i32;
        self.grid.measure(self.side(group)).powi(n)
    }

    pub fn scaled(&self, c: Complex64) -> Self {
        SampledFunction {
            values: self.values.mapv(|v| v * c),
            ..self.clone()
        }
    }

    /// Pointwise product of two functions on the same grid and sides.
    pub fn pointwise_product(&self, other: &SampledFunction) -> Result<Self> {
        if !self.same_layout(other) {
            return Err(Error::GridMismatch);
        }
        let descriptor = FunctionDescriptor::new(FunctionKind::Explicit {
            atoms: None,
            label: Some(format!("product of {} and {}", self.descriptor.family(), other.descriptor.family())),
        });
        Self::new(self.grid, &self.values * &other.values, self.sides, descriptor)
    }

    /// Same grid and the same side on every group that has axes.
    fn same_layout(&self, other: &SampledFunction) -> bool {
        self.grid == other.grid
            && [AxisGroup::First, AxisGroup::Second]
                .iter()
                .all(|&g| self.grid.group_axes(g).is_empty() || self.side(g) == other.side(g))
    }

    pub fn max_abs_diff(&self, other: &SampledFunction) -> Result<f64> {
        if !self.same_layout(other) {
            return Err(Error::GridMismatch);
        }
        Ok(self
            .values
            .iter()
            .zip(other.values.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    /// Writes the samples as row-major little-endian `(re, im)` f64 pairs,
    /// axes ordered first group then second group, plus a JSON sidecar at
    /// `<path>.json` carrying the grid. Returns the sidecar path.
    pub fn write_binary(&self, path: &Path) -> Result<PathBuf> {
        let io = |source| Error::Io { path: path.to_path_buf(), source };
        let mut bytes = Vec::with_capacity(self.values.len() * 16);
        for v in self.values.as_standard_layout().iter() {
            bytes.extend_from_slice(&v.re.to_le_bytes());
            bytes.extend_from_slice(&v.im.to_le_bytes());
        }
        let mut file = fs::File::create(path).map_err(io)?;
        file.write_all(&bytes).map_err(io)?;

        let sidecar = sidecar_path(path);
        let meta = ArraySidecar {
            grid: self.grid,
            spacing: self.grid.spacing(),
            sides: self.sides,
            layout: LAYOUT.to_string(),
            descriptor: self.descriptor.clone(),
        };
        fs::write(&sidecar, serde_json::to_string_pretty(&meta)?)
            .map_err(|source| Error::Io { path: sidecar.clone(), source })?;
        Ok(sidecar)
    }

    pub fn read_binary(path: &Path) -> Result<Self> {
        let sidecar = sidecar_path(path);
        let meta: ArraySidecar = serde_json::from_str(
            &fs::read_to_string(&sidecar).map_err(|source| Error::Io { path: sidecar.clone(), source })?,
        )?;
        let bytes = fs::read(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })?;
        if bytes.len() != meta.grid.len() * 16 {
            return Err(Error::ShapeMismatch { expected: vec![meta.grid.len() * 16], found: vec![bytes.len()] });
        }
        let data: Vec<Complex64> = bytes
            .chunks_exact(16)
            .map(|c| {
                let re = f64::from_le_bytes(c[..8].try_into().unwrap());
                let im = f64::from_le_bytes(c[8..].try_into().unwrap());
                Complex64::new(re, im)
            })
            .collect();
        let values = ArrayD::from_shape_vec(IxDyn(&meta.grid.shape()), data)
            .map_err(|e| Error::InvalidGrid(e.to_string()))?;
        Self::new(meta.grid, values, meta.sides, meta.descriptor)
    }
}

const LAYOUT: &str = "row-major, little-endian f64 (re, im) pairs, first-group axes then second-group axes";

#[derive(Serialize, Deserialize)]
struct ArraySidecar {
    grid: GridSpec,
    spacing: f64,
    sides: [Side; 2],
    layout: String,
    descriptor: FunctionDescriptor,
}

fn sidecar_path(path: &Path) -> PathBuf {
    let mut s = path.as_os_str().to_os_string();
    s.push(".json");
    PathBuf::from(s)
}

/// Atoms of a random ensemble. Centers lie in the central half of the domain,
/// scales and modulations keep every atom (and its transform) inside the grid.
fn random_atoms(grid: &GridSpec, complexity: usize, seed: u64) -> Result<GaussianSum> {
    if complexity == 0 {
        return Err(Error::InvalidParameter("random ensemble needs complexity >= 1".into()));
    }
    let rho = containment_radius();
    let half = 0.5 * grid.extent;
    let nyq = grid.nyquist();
    let scale_min = (2.0 * rho / half).powi(2);
    let scale_max = (0.75 * nyq / rho).powi(2);
    if scale_min > scale_max {
        let needed = 2.0 * grid.extent * rho * scale_min.sqrt() / 0.75;
        let needed = needed.ceil() as usize;
        return Err(Error::Unresolved { required_points: needed + needed % 2 });
    }
    let dim = grid.axis_count();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut atoms = Vec::with_capacity(complexity);
    for _ in 0..complexity {
        let mut scale = Vec::with_capacity(dim);
        let mut center = Vec::with_capacity(dim);
        let mut modulation = Vec::with_capacity(dim);
        for _ in 0..dim {
            let a = rng.random_range(scale_min.ln()..=scale_max.ln()).exp();
            let c_max = (0.5 * half).min(half - rho / a.sqrt());
            let w_max = (0.25 * nyq).min(nyq - rho * a.sqrt());
            scale.push(a);
            center.push(rng.random_range(-c_max..=c_max));
            modulation.push(rng.random_range(-w_max..=w_max));
        }
        let modulus = rng.random_range(0.5..=1.5);
        let phase = rng.random_range(0.0..TWO_PI);
        atoms.push(GaussianAtom { amplitude: Complex64::from_polar(modulus, phase), center, scale, modulation });
    }
    GaussianSum::new(dim, atoms)
}

fn require_plane(grid: &GridSpec) -> Result<()> {
    if grid.dims != (DimensionPair { d1: 1, d2: 1 }) {
        return Err(Error::InvalidParameter("this construction lives on R x R (d1 = d2 = 1)".into()));
    }
    Ok(())
}

fn require_line(sum: &GaussianSum) -> Result<()> {
    if sum.dim != 1 {
        return Err(Error::InvalidParameter("expected a one-dimensional profile".into()));
    }
    Ok(())
}

/// `F(x, y) = f(x) g(y - x)`. Both `y - x` and the sample index difference
/// take only `2N - 1` values, so `g` is tabulated once.
fn sample_shear(grid: &GridSpec, f: &GaussianSum, g: &GaussianSum) -> Result<ArrayD<Complex64>> {
    require_plane(grid)?;
    require_line(f)?;
    require_line(g)?;
    // transform is g^(eta) f^(xi + eta)
    check_radii(
        grid,
        f.space_radius() + g.space_radius(),
        f.frequency_radius() + g.frequency_radius(),
    )?;
    let n = grid.points;
    let h = grid.spacing();
    let f_table: Vec<Complex64> = (0..n).map(|i| f.eval(&[grid.space_coord(i)])).collect();
    // offset index m = k - i + (n - 1) in 0..2n-1
    let g_table: Vec<Complex64> = (0..2 * n - 1)
        .map(|m| g.eval(&[(m as f64 - (n - 1) as f64) * h]))
        .collect();
    Ok(ArrayD::from_shape_fn(IxDyn(&[n, n]), |idx| {
        let (i, k) = (idx[0], idx[1]);
        f_table[i] * g_table[k + n - 1 - i]
    }))
}

fn sample_near_delta(
    grid: &GridSpec,
    f: &GaussianSum,
    epsilon: f64,
    sheared: bool,
) -> Result<ArrayD<Complex64>> {
    require_plane(grid)?;
    require_line(f)?;
    let minimum = 2.0 * grid.spacing();
    if !(epsilon >= minimum) {
        return Err(Error::Unresolvable { epsilon, minimum });
    }
    let rho = containment_radius();
    let shift = if sheared { f.space_radius() } else { 0.0 };
    let radius = f.space_radius().max(shift + rho * epsilon);
    if radius > 0.5 * grid.extent {
        return Err(Error::SupportOutsideGrid { required_extent: 2.0 * radius });
    }
    let n = grid.points;
    let h = grid.spacing();
    let bump = |y: f64| Complex64::new((-PI * y * y / (epsilon * epsilon)).exp() / epsilon, 0.0);
    let f_table: Vec<Complex64> = (0..n).map(|i| f.eval(&[grid.space_coord(i)])).collect();
    if sheared {
        // y_k + x_i = (i + k - n) h
        let d_table: Vec<Complex64> = (0..2 * n - 1).map(|m| bump((m as f64 - n as f64) * h)).collect();
        Ok(ArrayD::from_shape_fn(IxDyn(&[n, n]), |idx| f_table[idx[0]] * d_table[idx[0] + idx[1]]))
    } else {
        let d_table: Vec<Complex64> = (0..n).map(|k| bump(grid.space_coord(k))).collect();
        Ok(ArrayD::from_shape_fn(IxDyn(&[n, n]), |idx| f_table[idx[0]] * d_table[idx[1]]))
    }
}

/// `prod_i exp(-pi a_i x_i^2)` over every axis of `grid`.
pub fn gaussian_product(grid: &GridSpec, scales: &[f64]) -> Result<SampledFunction> {
    if scales.len() != grid.axis_count() {
        return Err(Error::InvalidParameter(format!(
            "{} scales for a grid with {} axes",
            scales.len(),
            grid.axis_count()
        )));
    }
    if scales.iter().any(|&a| !(a > 0.0 && a.is_finite())) {
        return Err(Error::InvalidParameter("Gaussian scales must be positive".into()));
    }
    FunctionDescriptor::new(FunctionKind::GaussianProduct { scales: scales.to_vec() }).realize(grid)
}

/// Sum of `complexity` Gaussians with random centers, scales, modulations and
/// complex amplitudes, determined by `seed`.
pub fn random_ensemble(grid: &GridSpec, complexity: usize, seed: u64) -> Result<SampledFunction> {
    FunctionDescriptor::seeded(FunctionKind::RandomEnsemble { complexity }, seed).realize(grid)
}

/// A fixed Gaussian sum sampled on `grid`.
pub fn from_profile(grid: &GridSpec, profile: GaussianSum) -> Result<SampledFunction> {
    FunctionDescriptor::new(FunctionKind::Explicit { atoms: Some(profile), label: None }).realize(grid)
}

/// `x -> t^{1/p} f(t x_0, x_1, ...)` for a one-factor function `f`,
/// re-evaluated from its analytic form.
pub fn dilate_first_axis(f: &SampledFunction, t: f64, p: Exponent) -> Result<SampledFunction> {
    if f.grid().dims.d2 != 0 {
        return Err(Error::InvalidParameter("dilation expects a one-factor function (d2 = 0)".into()));
    }
    let profile = f.analytic_profile()?;
    FunctionDescriptor::new(FunctionKind::DilationShear { first: profile, second: None, t, p })
        .realize(f.grid())
}

/// `F(x, y) = f(x) g(y - x)` on `R x R` from two one-dimensional functions.
pub fn shear_product(
    f_first: &SampledFunction,
    g_second: &SampledFunction,
    grid: &GridSpec,
) -> Result<SampledFunction> {
    shear_descriptor(f_first.analytic_profile()?, g_second.analytic_profile()?, 1.0, Exponent::ONE)
        .realize(grid)
}

/// Descriptor of `f_t(x) g(y - x)` with `f_t = t^{1/p} f(t x)`.
pub fn shear_descriptor(f: GaussianSum, g: GaussianSum, t: f64, p: Exponent) -> FunctionDescriptor {
    FunctionDescriptor::new(FunctionKind::DilationShear { first: f, second: Some(g), t, p })
}

/// `F_eps(x, y) = f(x) d_eps(y + x)`, a smoothed point mass on the line `y = -x`.
pub fn near_delta_family(grid: &GridSpec, f: &SampledFunction, epsilon: f64) -> Result<SampledFunction> {
    FunctionDescriptor::new(FunctionKind::NearDelta { first: f.analytic_profile()?, epsilon, sheared: true })
        .realize(grid)
}

/// `f(x) d_eps(y)`: the unsheared control for [`near_delta_family`].
pub fn near_delta_product(grid: &GridSpec, f: &SampledFunction, epsilon: f64) -> Result<SampledFunction> {
    FunctionDescriptor::new(FunctionKind::NearDelta { first: f.analytic_profile()?, epsilon, sheared: false })
        .realize(grid)
}

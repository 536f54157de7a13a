//! Numerical verification of mixed-norm Fourier inequalities on product
//! domains `R^{d1} x R^{d2}`.
//!
//! The crate is organised bottom-up:
//!
//! - [`exponents`]: Lebesgue exponents with exact reciprocals, conjugates,
//!   the sharp Hausdorff-Young (Beckner) constants and admissibility of
//!   bilinear exponent tuples.
//! - [`sampling`]: product grids, analytic Gaussian families and the
//!   dilation, shear and near-delta constructions.
//! - [`transform`]: continuum-normalised DFT on centered grids, partial
//!   transforms, the `xi'' = 0` slice and the `x''` marginal.
//! - [`mixed_norms`]: mixed Lebesgue norms in either axis order plus the
//!   Minkowski and Hölder comparisons.
//! - [`inequalities`]: ratio harnesses for each inequality and seeded
//!   random suites.
//! - [`counterexample`]: dilation blow-up, near-delta divergence and the
//!   scaling sweep that forces the exponent relations.
//! - [`cli`]: the `mixfourier` command-line front end.
//!
//! Runnable walkthroughs of each capability live in `examples/`.

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod counterexample;
pub mod error;
pub mod exponents;
pub mod inequalities;
pub mod mixed_norms;
pub mod sampling;
pub mod transform;

pub use error::{Error, Result};
pub use exponents::{
    admissible, beckner_constant, beckner_power, conjugate, holder_exponents, Admissibility,
    DimensionPair, Exponent, ExponentTuple, Relation,
};
pub use sampling::{
    AxisGroup, Axes, FunctionDescriptor, FunctionKind, GaussianAtom, GaussianSum, GridSpec,
    SampledFunction, Side,
};

use std::path::PathBuf;

use crate::exponents::Relation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("exponent {0} is outside [1, inf]")]
    ExponentOutOfRange(String),

    #[error("cannot parse exponent {0:?}")]
    ExponentParse(String),

    #[error("exponent {exponent} outside the required range {range}")]
    ExponentRange { exponent: String, range: &'static str },

    #[error("reciprocal sum {0} exceeds 1; no Lebesgue exponent below 1")]
    ReciprocalSumTooLarge(f64),

    #[error("inadmissible exponent tuple: {0} violated")]
    Inadmissible(Relation),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("array shape {found:?} does not match grid shape {expected:?}")]
    ShapeMismatch { expected: Vec<usize>, found: Vec<usize> },

    #[error("non-finite sample values")]
    NonFinite,

    #[error("functions live on different grids or sides")]
    GridMismatch,

    #[error("axis/side mismatch: {0}")]
    SideMismatch(&'static str),

    #[error("essential support leaves the grid; required extent at least {required_extent:.3}")]
    SupportOutsideGrid { required_extent: f64 },

    #[error("frequency content not resolved; need at least {required_points} points per axis at this extent")]
    Unresolved { required_points: usize },

    #[error("width {epsilon} is below the resolvable minimum {minimum} for this grid")]
    Unresolvable { epsilon: f64, minimum: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("function has no analytic form: {0}")]
    NotAnalytic(&'static str),

    #[error("degenerate trial: zero denominator")]
    Degenerate,

    #[error("negative values are not allowed in an order comparison")]
    NegativeValues,

    #[error("sweep needs at least two strictly monotone, positive points")]
    BadSweep,

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

//! Writes a sampled function and its transform as raw little-endian complex
//! arrays with JSON sidecars, then reads one back.
//!
//! cargo run --example export_arrays -- [dir]

use std::path::PathBuf;

use mixfourier::sampling::random_ensemble;
use mixfourier::transform::fourier;
use mixfourier::{Axes, DimensionPair, GridSpec, SampledFunction};

fn main() -> mixfourier::Result<()> {
    let dir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(std::env::temp_dir);
    let grid = GridSpec::default_for(DimensionPair::new(1, 1)?);
    let f = random_ensemble(&grid, 4, 2024)?;
    let fhat = fourier(&f, Axes::All)?;
    for (name, g) in [("ensemble.bin", &f), ("ensemble_hat.bin", &fhat)] {
        let path = dir.join(name);
        let sidecar = g.write_binary(&path)?;
        println!("wrote {} and {}", path.display(), sidecar.display());
    }
    let back = SampledFunction::read_binary(&dir.join("ensemble.bin"))?;
    println!("round trip max difference: {}", back.max_abs_diff(&f)?);
    println!("descriptor: {}", serde_json::to_string(back.descriptor())?);
    Ok(())
}

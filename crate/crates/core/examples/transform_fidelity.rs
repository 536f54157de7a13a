//! DFT against the continuum transform: Gaussian self-duality, Plancherel
//! and the two ways of computing `F^(xi', 0)`.
//!
//! cargo run --example transform_fidelity

use mixfourier::mixed_norms::plain_norm;
use mixfourier::sampling::{gaussian_product, random_ensemble};
use mixfourier::transform::{fourier, marginal_second, slice_second_zero};
use mixfourier::{Axes, DimensionPair, Exponent, GridSpec};

fn main() -> mixfourier::Result<()> {
    let grid = GridSpec::default_for(DimensionPair::new(1, 1)?);
    println!("grid: N={} L={} h={}", grid.points, grid.extent, grid.spacing());

    let g = gaussian_product(&grid, &[1.0, 1.0])?;
    let ghat = fourier(&g, Axes::All)?;
    let err = ghat.values().iter().zip(g.values()).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
    println!("exp(-pi|x|^2) self-duality error: {err:.2e}");

    for seed in 0..5 {
        let f = random_ensemble(&grid, 4, seed)?;
        let fhat = fourier(&f, Axes::All)?;
        let plancherel = plain_norm(&fhat, Exponent::TWO) / plain_norm(&f, Exponent::TWO) - 1.0;
        let slice = slice_second_zero(&fhat)?;
        let marginal = fourier(&marginal_second(&f)?, Axes::All)?;
        println!(
            "seed {seed}: Plancherel {plancherel:+.2e}, |slice - transform of marginal| {:.2e}",
            slice.max_abs_diff(&marginal)?
        );
    }
    Ok(())
}

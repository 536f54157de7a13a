//! Order of a mixed norm: the larger exponent outermost gives the smaller value.
//!
//! cargo run --example minkowski

use mixfourier::mixed_norms::{minkowski_compare, mixed_norm, MixedNormSpec};
use mixfourier::{DimensionPair, Exponent, GridSpec, SampledFunction};
use ndarray::{ArrayD, IxDyn};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> mixfourier::Result<()> {
    let grid = GridSpec::new(DimensionPair::new(1, 1)?, 2, 2.0)?;
    let eye = ArrayD::from_shape_fn(IxDyn(&[2, 2]), |i| Complex64::new(if i[0] == i[1] { 1.0 } else { 0.0 }, 0.0));
    let f = SampledFunction::from_values(grid, eye)?;
    let (one, two) = (Exponent::ONE, Exponent::TWO);
    println!("identity, unit cells:");
    println!("  L^1_x' L^2_x'' = {}", mixed_norm(&f, &MixedNormSpec::first_outer(one, two))?);
    println!("  L^2_x'' L^1_x' = {}", mixed_norm(&f, &MixedNormSpec::second_outer(two, one))?);
    let c = minkowski_compare(&f, two, one)?;
    println!("  larger outer {:.6} <= smaller outer {:.6}: {}", c.larger_outer, c.smaller_outer, c.holds);

    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let grid = GridSpec::new(DimensionPair::new(1, 1)?, 8, 3.0)?;
    let (a, b): (Exponent, Exponent) = ("4".parse()?, "4/3".parse()?);
    let mut gap = f64::INFINITY;
    for _ in 0..200 {
        let v = ArrayD::from_shape_fn(IxDyn(&[8, 8]), |_| Complex64::new(rng.random::<f64>(), 0.0));
        let c = minkowski_compare(&SampledFunction::from_values(grid, v)?, a, b)?;
        gap = gap.min(c.smaller_outer - c.larger_outer);
    }
    println!("200 random 8x8 arrays, a=4 b=4/3: smallest gap {gap:.3e}");
    Ok(())
}

//! Gaussians attain every sharp constant: all ratios are 1.
//!
//! cargo run --example sharpness

use mixfourier::inequalities::{check_hausdorff_young, check_restriction, check_same_order, check_variant, tolerance};
use mixfourier::sampling::gaussian_product;
use mixfourier::{DimensionPair, Exponent, GridSpec};

fn main() -> mixfourier::Result<()> {
    let grid = GridSpec::default_for(DimensionPair::new(1, 1)?);
    let f = gaussian_product(&grid, &[1.0, 2.5])?;
    let tol = tolerance::GAUSSIAN_SHARPNESS;
    let set: Vec<Exponent> = ["4/3", "3/2", "2"].iter().map(|s| s.parse().unwrap()).collect();
    for &p in &set {
        let hy = check_hausdorff_young(&f, p, tol)?;
        let re = check_restriction(&f, p, tol)?;
        println!("p={p:<4} hausdorff_young {:.12}  restriction {:.12}", hy.ratio.unwrap(), re.ratio.unwrap());
        for &s in &set {
            let v = check_variant(&f, p, s, tol)?.ratio.unwrap();
            let same = if p.value() <= s.value() {
                format!("{:.12}", check_same_order(&f, p, s, tol)?.ratio.unwrap())
            } else {
                "(p > s: unbounded regime)".into()
            };
            println!("  s={s:<4} variant {v:.12}  same_order {same}");
        }
    }
    Ok(())
}

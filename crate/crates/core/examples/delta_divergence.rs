//! s = 1: mass concentrated on the line y = -x makes
//! `||F^||_{L^{p'} L^inf} / ||F||_{L^p L^1}` unbounded, while the unsheared
//! product stays at C_p.
//!
//! cargo run --release --example delta_divergence

use mixfourier::counterexample::{delta_divergence_demo, delta_product_control, halving_sequence};
use mixfourier::{beckner_constant, Exponent};

fn main() -> mixfourier::Result<()> {
    let eps = halving_sequence(2.0, 5);
    for p in ["2", "3/2", "4/3"] {
        let p: Exponent = p.parse()?;
        let demo = delta_divergence_demo(p, &eps, None, None)?;
        let control = delta_product_control(p, &eps, None, None)?;
        println!(
            "p={p}: growth over eps {}..{} is {:.3} (doubling: {}); C_p = {:.6}",
            eps[0],
            eps[eps.len() - 1],
            demo.growth(),
            demo.divergence_milestone(),
            beckner_constant(p)?
        );
        for ((e, a), b) in eps.iter().zip(&demo.observed).zip(&control.observed) {
            println!("    eps={e:<6} sheared {a:.6}   product {b:.6}");
        }
    }
    Ok(())
}

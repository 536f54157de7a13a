//! The dilation-shear family `f_t(x) g(y - x)`: for s < p the same-order
//! ratio grows like `t^{1/p - 1/s}` as t shrinks while the right side stays put.
//!
//! cargo run --release --example blowup_sweep

use mixfourier::counterexample::{blowup_sweep, halving_sequence};
use mixfourier::Exponent;

fn main() -> mixfourier::Result<()> {
    let ts = halving_sequence(1.0, 6);
    for (p, s) in [("2", "4/3"), ("2", "3/2"), ("3/2", "4/3"), ("2", "2")] {
        let (p, s): (Exponent, Exponent) = (p.parse()?, s.parse()?);
        let r = blowup_sweep(p, s, &ts, None)?;
        println!(
            "p={p} s={s}: slope {:+.4} (leading order {:+.4}), rhs drift {:.1e}, oracle error {:.1e}",
            r.fitted_slope,
            r.expected_slope,
            r.rhs_variation().unwrap(),
            r.max_oracle_error().unwrap()
        );
        for ((t, ratio), g) in r.parameter_values.iter().zip(&r.observed).zip(&r.grids) {
            println!("    t={t:<9} ratio {ratio:.6}   grid N={} L={:.1}", g.points, g.extent);
        }
    }
    Ok(())
}

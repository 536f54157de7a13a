//! Sharp Hausdorff-Young constants `C_r = (r^{1/r} / r'^{1/r'})^{1/2}`.
//!
//! cargo run --example constants

use mixfourier::{beckner_constant, beckner_power, Exponent};

fn main() -> mixfourier::Result<()> {
    println!("{:>6} {:>6} {:>12} {:>12}", "r", "r'", "C_r", "C_r^2");
    for r in ["1", "8/7", "6/5", "4/3", "3/2", "5/3", "2"] {
        let r: Exponent = r.parse()?;
        println!(
            "{:>6} {:>6} {:>12.9} {:>12.9}",
            r.to_string(),
            r.conjugate().to_string(),
            beckner_constant(r)?,
            beckner_power(r, 2)?
        );
    }
    // outside [1, 2] there is no sharp constant
    let err = beckner_constant("3".parse()?).unwrap_err();
    println!("r = 3: {err}");
    Ok(())
}

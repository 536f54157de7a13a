//! Dilating one coordinate group turns each violated exponent relation into
//! a power law in the dilation factor.
//!
//! cargo run --release --example necessity_sweep

use mixfourier::counterexample::{necessity_sweep, DilationAxis};
use mixfourier::{Exponent, ExponentTuple};

fn tuple(s: &str) -> ExponentTuple {
    let e: Vec<Exponent> = s.split(',').map(|x| x.parse().unwrap()).collect();
    ExponentTuple::new(e[0], e[1], e[2], e[3], e[4])
}

fn main() -> mixfourier::Result<()> {
    let r2 = std::f64::consts::SQRT_2;
    let lambdas = [0.5, 1.0 / r2, 1.0, r2, 2.0];
    for t in ["4,2,4,2,2", "2,3,3,3/2,6", "4,2,4,2,4", "4,4/3,4,2,2", "2,2,2,2,2"] {
        let t = tuple(t);
        let verdict = match t.admissibility().reason() {
            None => "admissible".to_string(),
            Some(rel) => format!("violates {rel}"),
        };
        println!("(p,s,q,t,r) = ({},{},{},{},{}) {verdict}", t.p, t.s, t.q, t.t, t.r);
        for axis in [DilationAxis::First, DilationAxis::Second] {
            let r = necessity_sweep(&t, &lambdas, axis, None)?;
            println!("    {axis:?}: slope {:+.4}, predicted {:+.4}", r.fitted_slope, r.expected_slope);
        }
    }
    Ok(())
}

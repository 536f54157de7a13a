//! Seeded random suites for every inequality, summarised per selection.
//!
//! cargo run --release --example random_suite -- [trials]

use std::collections::BTreeMap;

use mixfourier::inequalities::{run_suite, InequalityId, SuiteConfig};
use mixfourier::{DimensionPair, GridSpec};

fn main() -> mixfourier::Result<()> {
    let trials = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(20);
    let grid = GridSpec::default_for(DimensionPair::new(1, 1)?);
    for id in InequalityId::ALL {
        let mut config = SuiteConfig::new(id, grid, 42);
        config.trials = trials;
        let summary = run_suite(&config)?;
        println!(
            "{id}: {} trials, {} failures, {} degenerate, max ratio {:.4}",
            summary.reports.len(),
            summary.failures,
            summary.degenerate,
            summary.max_ratio
        );
        let mut worst: BTreeMap<String, f64> = BTreeMap::new();
        for r in &summary.reports {
            let w = worst.entry(r.exponent_label()).or_insert(0.0);
            *w = w.max(r.ratio.unwrap_or(0.0));
        }
        for (label, max) in worst {
            println!("    {label:<32} max {max:.4}");
        }
    }
    Ok(())
}

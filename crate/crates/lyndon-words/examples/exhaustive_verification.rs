//! Sweeping every short word through the reference oracles.
//!
//! The oracle module holds definition-literal implementations that
//! share nothing with the fast paths; the sweep runner compares the
//! two over an exhaustive shortlex word stream and reports the first
//! counterexample per property, if any. This is the same machinery
//! behind the `verify` subcommand.
//! Run with `cargo run --release --example exhaustive_verification`.

use lyndon_words::sweep::{property_names, run_sweep};
use lyndon_words::Alphabet;

fn main() -> lyndon_words::Result<()> {
    println!("properties: {}", property_names().join(", "));
    println!();

    let alphabet = Alphabet::new(b"ab")?;
    let reports = run_sweep(&alphabet, 10, None, 1)?;
    let mut violations = 0;
    for report in &reports {
        println!(
            "{:<44} {:>6} checked, {} violations",
            report.name, report.checked, report.violations
        );
        if let Some(counterexample) = &report.first_counterexample {
            println!("  first counterexample: {counterexample}");
        }
        violations += report.violations;
    }
    println!();
    if violations == 0 {
        println!("all properties hold over binary words of length <= 10");
    } else {
        println!("{violations} violations found");
    }
    Ok(())
}

//! The Lyndon factorization under both symbol orders.
//!
//! `cfl` produces the unique decomposition into a nonincreasing chain
//! of Lyndon words; under the inverse order the factors are
//! anti-Lyndon. Run with `cargo run --example duval_factorizations`.

use lyndon_words::{cfl, cfl_scan, run_view, Alphabet, Order, Word};

fn main() -> lyndon_words::Result<()> {
    let alphabet = Alphabet::new(b"abcd")?;
    let word: Word = "dabadabdabdadac".parse()?;

    let standard = cfl(&word, &alphabet, Order::Standard)?;
    println!("standard order: {}", standard.factor_strings().join(" . "));

    let inverse = cfl(&word, &alphabet, Order::Inverse)?;
    println!("inverse order:  {}", inverse.factor_strings().join(" . "));

    // Repeated factors compress into runs: (daba, dab, dab, dadac)
    // becomes daba, dab^2, dadac.
    let runs = run_view(&inverse);
    let compressed: Vec<String> = runs
        .runs()
        .iter()
        .map(|run| {
            let factor = String::from_utf8_lossy(runs.run_factor(run)).into_owned();
            if run.exponent > 1 {
                format!("{factor}^{}", run.exponent)
            } else {
                factor
            }
        })
        .collect();
    println!("run view:       {}", compressed.join(" . "));

    // The streaming scan hands out factor spans without allocating,
    // which is the form to use on large inputs.
    print!("spans:         ");
    cfl_scan(&word, &alphabet, Order::Inverse, |start, end| {
        print!(" [{start}, {end})");
    })?;
    println!();
    Ok(())
}

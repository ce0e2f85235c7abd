//! Groupings: which inverse Lyndon factorizations arise from cfl-in.
//!
//! A grouping glues consecutive cfl-in factors into inverse Lyndon
//! blocks without crossing chain boundaries, keeping consecutive
//! blocks strictly ordered at a symbol mismatch. The canonical inverse
//! factorization is always one of them; for an inverse Lyndon word the
//! whole word is the only one. Run with `cargo run --example groupings`.

use lyndon_words::oracle::enumerate_groupings;
use lyndon_words::{cfl_in, icfl, is_grouping, Alphabet, Word};

fn main() -> lyndon_words::Result<()> {
    let alphabet = Alphabet::new(b"abcd")?;
    let word: Word = "dabadabdabdabdadac".parse()?;

    let base = cfl_in(&word, &alphabet)?;
    let canonical = icfl(&word, &alphabet)?;
    println!("cfl-in: {}", base.factor_strings().join(" . "));
    println!("icfl:   {}", canonical.factor_strings().join(" . "));

    println!("groupings:");
    for grouping in enumerate_groupings(&base, &alphabet)? {
        let marker = if grouping == canonical {
            "  <- icfl"
        } else {
            ""
        };
        println!("  {}{marker}", grouping.factor_strings().join(" . "));
        assert!(is_grouping(&grouping, &base, &alphabet)?);
    }

    // (dabadab, dabda, dac) is a perfectly good inverse Lyndon
    // factorization of a related word, but its cuts do not all fall on
    // cfl-in boundaries, so it is not a grouping there.
    let other: Word = "dabadabdabdadac".parse()?;
    let other_base = cfl_in(&other, &alphabet)?;
    let candidate = lyndon_words::Factorization::from_cuts(
        &other,
        vec![0, 7, 12, 15],
        lyndon_words::FactorizationKind::Generic,
    )?;
    println!(
        "{} is a grouping of {other}: {}",
        candidate.factor_strings().join(" . "),
        is_grouping(&candidate, &other_base, &alphabet)?
    );
    Ok(())
}

//! The canonical inverse Lyndon factorization.
//!
//! Unlike the classical factorization, a word can have many inverse
//! Lyndon factorizations; `icfl` computes the canonical one by
//! repeatedly peeling the `p` of the canonical pair. Every factor is
//! inverse Lyndon and consecutive factors are strictly ordered with a
//! symbol mismatch (never by one being a prefix of the next).
//! Run with `cargo run --example icfl`.

use lyndon_words::{cfl_in, icfl, Alphabet, Word};

fn main() -> lyndon_words::Result<()> {
    let abcd = Alphabet::new(b"abcd")?;
    let ab = Alphabet::new(b"ab")?;

    for (text, alphabet) in [
        ("dabadabdabdadac", &abcd),
        ("dabdadacddbdc", &abcd),
        ("dabadabdabdabdadac", &abcd),
        ("babaababaababab", &ab),
        ("aaba", &ab),
    ] {
        let word: Word = text.parse()?;
        let canonical = icfl(&word, alphabet)?;
        let base = cfl_in(&word, alphabet)?;
        canonical.validate(alphabet)?;
        println!("{text}");
        println!("  icfl:   {}", canonical.factor_strings().join(" . "));
        println!("  cfl-in: {}", base.factor_strings().join(" . "));
    }
    Ok(())
}

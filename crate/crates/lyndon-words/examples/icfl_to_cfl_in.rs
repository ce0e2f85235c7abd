//! From the canonical inverse factorization to cfl-in without
//! re-reading the word.
//!
//! Each icfl factor is inverse Lyndon, and the inverse-order Lyndon
//! factorization of an inverse Lyndon word is exactly its
//! unbordered-border decomposition `nb`: repeatedly strip the unique
//! unbordered border from the right. Splicing the per-factor
//! decompositions together yields cfl-in of the whole word.
//! Run with `cargo run --example icfl_to_cfl_in`.

use lyndon_words::{cfl_in, cfl_in_from_icfl, icfl, nb, Alphabet, Word};

fn main() -> lyndon_words::Result<()> {
    let alphabet = Alphabet::new(b"abcd")?;
    let word: Word = "dabadabdabdabdadac".parse()?;

    let canonical = icfl(&word, &alphabet)?;
    println!("icfl: {}", canonical.factor_strings().join(" . "));

    for factor in canonical.factors() {
        let factor = Word::new(factor)?;
        let stripped = nb(&factor);
        println!("  nb({factor}) = {}", stripped.factor_strings().join(" . "));
    }

    let converted = cfl_in_from_icfl(&canonical, &alphabet)?;
    let direct = cfl_in(&word, &alphabet)?;
    println!("spliced: {}", converted.factor_strings().join(" . "));
    assert_eq!(converted, direct);
    println!("matches the direct factorization");
    Ok(())
}

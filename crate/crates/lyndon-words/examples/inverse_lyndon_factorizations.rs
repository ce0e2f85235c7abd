//! Why a canonical choice is needed at all.
//!
//! Lyndon factorizations are unique; inverse Lyndon factorizations are
//! not. The oracle enumerates every factorization into inverse Lyndon
//! factors whose consecutive factors are strictly ordered at a symbol
//! mismatch, and for most words there are several.
//! Run with `cargo run --example inverse_lyndon_factorizations`.

use lyndon_words::oracle::enumerate_inverse_lyndon_factorizations;
use lyndon_words::{icfl, Alphabet, Word};

fn main() -> lyndon_words::Result<()> {
    let alphabet = Alphabet::new(b"abcd")?;

    for text in ["dabdadacddbdc", "dabadabdabdadac"] {
        let word: Word = text.parse()?;
        let canonical = icfl(&word, &alphabet)?;
        println!("{text}");
        for factorization in enumerate_inverse_lyndon_factorizations(&word, &alphabet)? {
            let marker = if factorization == canonical {
                "  <- icfl"
            } else {
                ""
            };
            println!("  {}{marker}", factorization.factor_strings().join(" . "));
        }
    }
    Ok(())
}

//! Anatomy of the canonical pair (p, p̄).
//!
//! For a word that is not inverse Lyndon, the shortest prefix z that
//! breaks the property splits exactly one way as z = p · p̄ with
//! p inverse Lyndon and p̄ = r·b its bounded right extension:
//! z = r·a·s·r·b where a < b and r is the shortest prefix admitting
//! that shape. Run with `cargo run --example canonical_pair`.

use lyndon_words::{canonical_pair, Alphabet, Word};

fn show(text: &str, alphabet: &Alphabet) -> lyndon_words::Result<()> {
    let word: Word = text.parse()?;
    println!("{text}");
    match canonical_pair(&word, alphabet)? {
        None => println!("  inverse Lyndon, no pair"),
        Some(pair) => {
            let lossy = |bytes: &[u8]| String::from_utf8_lossy(bytes).into_owned();
            println!("  z    = {}", lossy(pair.z(&word)));
            println!("  p    = {}", lossy(pair.p(&word)));
            println!("  pbar = {}", lossy(pair.pbar(&word)));
            println!("  r    = {}", lossy(pair.r(&word)));
            println!(
                "  a, b = {}, {}",
                char::from(pair.a()),
                char::from(pair.b())
            );
            println!("  rest = {:?}", lossy(pair.remainder(&word)));
        }
    }
    Ok(())
}

fn main() -> lyndon_words::Result<()> {
    let ab = Alphabet::new(b"ab")?;
    let abcd = Alphabet::new(b"abcd")?;

    show("babaaabb", &ab)?;
    show("babaababaababab", &ab)?;
    show("dabadabdabdadac", &abcd)?;
    show("bbababbaa", &ab)?;
    Ok(())
}

//! Recognizing Lyndon, anti-Lyndon, and inverse Lyndon words.
//!
//! Run with `cargo run --example recognizers`.

use lyndon_words::{
    is_inverse_lyndon, is_lyndon, shortest_non_inverse_lyndon_prefix, unbordered_border, Alphabet,
    Order, Word,
};

fn main() -> lyndon_words::Result<()> {
    let alphabet = Alphabet::new(b"ab")?;

    for text in ["aababaabb", "bbaba", "babaaabb", "ababa", "ba"] {
        let word: Word = text.parse()?;
        let lyndon = is_lyndon(&word, &alphabet, Order::Standard)?;
        let anti = is_lyndon(&word, &alphabet, Order::Inverse)?;
        let inverse = is_inverse_lyndon(&word, &alphabet)?;
        println!("{text}");
        println!("  Lyndon:         {lyndon}");
        println!("  anti-Lyndon:    {anti}");
        println!("  inverse Lyndon: {inverse}");

        // An inverse Lyndon word is strictly greater than all of its
        // proper suffixes; when the test fails, some prefix already
        // fails it, and the shortest one is the interesting witness.
        if let Some(len) = shortest_non_inverse_lyndon_prefix(&word, &alphabet)? {
            println!("  shortest non-inverse-Lyndon prefix: {}", &text[..len]);
        }

        match unbordered_border(&word) {
            Some(len) => println!("  unbordered border: {}", &text[..len]),
            None => println!("  unbordered"),
        }
    }
    Ok(())
}

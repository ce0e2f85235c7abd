//! From cfl-in to the canonical inverse factorization, chain by chain.
//!
//! Consecutive cfl-in factors that keep being prefixes of their
//! predecessor form maximal chains; the canonical inverse
//! factorization of the whole word is the concatenation of the
//! per-chain ones, so the conversion never looks across a chain
//! boundary. Run with `cargo run --example cfl_in_to_icfl`.

use lyndon_words::{icfl, icfl_from_cfl_in, icfl_of_chain, pmc_decompose, Alphabet, Word};

fn main() -> lyndon_words::Result<()> {
    let alphabet = Alphabet::new(b"abcd")?;
    let word: Word = "dabadabdabdadac".parse()?;

    let base = lyndon_words::cfl_in(&word, &alphabet)?;
    println!("cfl-in: {}", base.factor_strings().join(" . "));

    let decomposition = pmc_decompose(&base, &alphabet)?;
    for (index, chain) in decomposition.chains().iter().enumerate() {
        let (start, end) = decomposition.offset_span(&base, index);
        let factors: Vec<String> = (chain.start..chain.end)
            .map(|factor| String::from_utf8_lossy(base.factor(factor)).into_owned())
            .collect();
        println!(
            "  chain {index}: factors {}..{} = {} (offsets {start}..{end})",
            chain.start,
            chain.end,
            factors.join(" . ")
        );

        // Each chain converts on its own; the piece words below are
        // only built to demonstrate that.
        let piece = Word::new(&word.as_bytes()[start..end])?;
        let chain_base = lyndon_words::cfl_in(&piece, &alphabet)?;
        let chain_icfl = icfl_of_chain(&chain_base, &alphabet)?;
        println!(
            "    icfl of chain: {}",
            chain_icfl.factor_strings().join(" . ")
        );
    }

    let converted = icfl_from_cfl_in(&base, &alphabet)?;
    let direct = icfl(&word, &alphabet)?;
    println!("converted: {}", converted.factor_strings().join(" . "));
    assert_eq!(converted, direct);
    println!("matches the direct factorization");
    Ok(())
}

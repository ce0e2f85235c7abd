//! Throughput measurement over seeded random words.
//!
//! Words are generated from a counter-based generator, so a fixed seed
//! yields identical content across runs and platforms. Each operation is
//! timed as the best of a few repeats to damp scheduler noise.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alphabet::{Alphabet, Order};
use crate::convert::{cfl_in_from_icfl, icfl_from_cfl_in};
use crate::error::Result;
use crate::factorize::{cfl, cfl_in, cfl_scan, icfl};
use crate::word::Word;

const REPEATS: u32 = 3;

/// One timed operation at one input size.
#[derive(Clone, Debug)]
pub struct BenchRow {
    pub operation: &'static str,
    pub size: usize,
    pub total_ns: u128,
    pub ns_per_symbol: f64,
}

/// The deterministic benchmark word for this (seed, stream) pair.
/// Symbols are drawn uniformly from the alphabet.
pub fn bench_word(alphabet: &Alphabet, size: usize, seed: u64, stream: u64) -> Result<Word> {
    let symbols = alphabet.symbols();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let bytes: Vec<u8> = (0..size)
        .map(|_| symbols[rng.gen_range(0..symbols.len())])
        .collect();
    Word::new(bytes)
}

/// Times every factorization and conversion once per size. Conversions
/// run on precomputed factorizations, so their rows measure conversion
/// alone.
pub fn run_bench(alphabet: &Alphabet, sizes: &[usize], seed: u64) -> Result<Vec<BenchRow>> {
    let mut rows = Vec::new();
    for (stream, &size) in sizes.iter().enumerate() {
        let word = bench_word(alphabet, size, seed, stream as u64)?;

        rows.push(time_row("cfl", size, || {
            std::hint::black_box(cfl(&word, alphabet, Order::Standard)?);
            Ok(())
        })?);
        rows.push(time_row("cfl-in", size, || {
            std::hint::black_box(cfl_in(&word, alphabet)?);
            Ok(())
        })?);
        rows.push(time_row("icfl", size, || {
            std::hint::black_box(icfl(&word, alphabet)?);
            Ok(())
        })?);

        let canonical = icfl(&word, alphabet)?;
        rows.push(time_row("icfl-to-cflin", size, || {
            std::hint::black_box(cfl_in_from_icfl(&canonical, alphabet)?);
            Ok(())
        })?);

        let base = cfl_in(&word, alphabet)?;
        rows.push(time_row("cflin-to-icfl", size, || {
            std::hint::black_box(icfl_from_cfl_in(&base, alphabet)?);
            Ok(())
        })?);
    }
    Ok(rows)
}

fn time_row(
    operation: &'static str,
    size: usize,
    mut run: impl FnMut() -> Result<()>,
) -> Result<BenchRow> {
    let mut best = u128::MAX;
    for _ in 0..REPEATS {
        let started = Instant::now();
        run()?;
        best = best.min(started.elapsed().as_nanos());
    }
    Ok(BenchRow {
        operation,
        size,
        total_ns: best,
        ns_per_symbol: best as f64 / size as f64,
    })
}

/// Current resident set size in bytes, or `None` where /proc is absent.
pub fn resident_memory_bytes() -> Option<u64> {
    let status = std::fs::read_to_string("/proc/self/status").ok()?;
    let line = status.lines().find(|line| line.starts_with("VmRSS:"))?;
    let kib: u64 = line.split_whitespace().nth(1)?.parse().ok()?;
    Some(kib * 1024)
}

/// Resident-memory growth while streaming a factorization without
/// materializing it. The scan itself allocates nothing, so growth
/// beyond allocator noise indicates non-constant auxiliary space.
pub fn scan_memory_delta(word: &Word, alphabet: &Alphabet) -> Result<Option<u64>> {
    let before = resident_memory_bytes();
    let mut factors = 0u64;
    cfl_scan(word, alphabet, Order::Inverse, |_, _| factors += 1)?;
    std::hint::black_box(factors);
    let after = resident_memory_bytes();
    Ok(match (before, after) {
        (Some(before), Some(after)) => Some(after.saturating_sub(before)),
        _ => None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::new(b"ab").unwrap()
    }

    #[test]
    fn bench_words_are_deterministic() {
        let first = bench_word(&ab(), 512, 7, 0).unwrap();
        let second = bench_word(&ab(), 512, 7, 0).unwrap();
        assert_eq!(first, second);
        let other_stream = bench_word(&ab(), 512, 7, 1).unwrap();
        assert_ne!(first, other_stream);
        let other_seed = bench_word(&ab(), 512, 8, 0).unwrap();
        assert_ne!(first, other_seed);
    }

    #[test]
    fn bench_rows_cover_every_operation_and_size() {
        let rows = run_bench(&ab(), &[1_000, 2_000], 42).unwrap();
        assert_eq!(rows.len(), 10);
        for row in &rows {
            assert!(row.total_ns > 0, "{} at {}", row.operation, row.size);
            assert!(row.ns_per_symbol > 0.0);
        }
        let operations: Vec<&str> = rows.iter().map(|row| row.operation).collect();
        assert_eq!(
            &operations[..5],
            &["cfl", "cfl-in", "icfl", "icfl-to-cflin", "cflin-to-icfl"]
        );
    }

    #[test]
    fn resident_memory_reads_on_linux() {
        if let Some(bytes) = resident_memory_bytes() {
            assert!(bytes > 0);
        }
    }
}

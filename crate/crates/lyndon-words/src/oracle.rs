//! Definition-literal reference implementations.
//!
//! Everything here recomputes its answer from first principles:
//! rotations are materialized, suffixes compared one by one,
//! factorizations found by trying every cut. Beyond the symbol
//! comparator, no code is shared with the linear-time scans, so
//! agreement between the two sides is meaningful evidence. Complexity
//! ranges from quadratic to exponential; keep inputs at desk scale.

use std::cmp::Ordering;

use crate::alphabet::{Alphabet, Order};
use crate::compare::{compare_bytes, ComparisonOutcome};
use crate::error::{Error, Result};
use crate::factorization::{Factorization, FactorizationKind};
use crate::factorize::CanonicalPair;
use crate::word::Word;

/// Longest input the factorization enumerators accept by default; their
/// search space grows exponentially with the word length.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 20;

/// Primitivity by trying every divisor period, minimality by comparing
/// against every rotation.
pub fn is_lyndon_naive(word: &Word, alphabet: &Alphabet, order: Order) -> Result<bool> {
    alphabet.validate(word)?;
    Ok(is_lyndon_naive_bytes(word.as_bytes(), alphabet, order))
}

fn is_lyndon_naive_bytes(bytes: &[u8], alphabet: &Alphabet, order: Order) -> bool {
    is_primitive_naive(bytes) && strictly_smallest_rotation(bytes, alphabet, order)
}

fn is_primitive_naive(bytes: &[u8]) -> bool {
    let n = bytes.len();
    (1..n).all(|period| {
        !n.is_multiple_of(period) || !bytes.iter().zip(&bytes[period..]).all(|(x, y)| x == y)
    })
}

fn strictly_smallest_rotation(bytes: &[u8], alphabet: &Alphabet, order: Order) -> bool {
    (1..bytes.len()).all(|shift| {
        let rotation: Vec<u8> = bytes[shift..]
            .iter()
            .chain(&bytes[..shift])
            .copied()
            .collect();
        compare_bytes(bytes, &rotation, alphabet, order) == ComparisonOutcome::LessStrict
    })
}

/// Checks every nonempty proper suffix against the whole word.
pub fn is_inverse_lyndon_naive(word: &Word, alphabet: &Alphabet) -> Result<bool> {
    alphabet.validate(word)?;
    Ok(is_inverse_lyndon_naive_bytes(word.as_bytes(), alphabet))
}

fn is_inverse_lyndon_naive_bytes(bytes: &[u8], alphabet: &Alphabet) -> bool {
    (1..bytes.len())
        .all(|start| compare_bytes(&bytes[start..], bytes, alphabet, Order::Standard).is_less())
}

/// Greedy peeling of the longest Lyndon prefix, each candidate checked
/// with [`is_lyndon_naive`].
pub fn cfl_naive<'a>(
    word: &'a Word,
    alphabet: &Alphabet,
    order: Order,
) -> Result<Factorization<'a>> {
    alphabet.validate(word)?;
    let bytes = word.as_bytes();
    let mut cuts = vec![0];
    let mut start = 0;
    while start < bytes.len() {
        let end = (start + 1..=bytes.len())
            .rev()
            .find(|&end| is_lyndon_naive_bytes(&bytes[start..end], alphabet, order))
            .expect("single symbols are Lyndon");
        cuts.push(end);
        start = end;
    }
    let kind = match order {
        Order::Standard => FactorizationKind::Cfl,
        Order::Inverse => FactorizationKind::CflIn,
    };
    Ok(Factorization::from_cuts_unchecked(word, cuts, kind))
}

/// Finds the canonical pair by trying every split of the shortest
/// non-inverse-Lyndon prefix, and errors unless exactly one split
/// survives all the defining conditions.
pub fn canonical_pair_naive(word: &Word, alphabet: &Alphabet) -> Result<Option<CanonicalPair>> {
    alphabet.validate(word)?;
    canonical_pair_naive_bytes(word.as_bytes(), alphabet)
}

fn canonical_pair_naive_bytes(bytes: &[u8], alphabet: &Alphabet) -> Result<Option<CanonicalPair>> {
    let z_len = match (1..=bytes.len())
        .find(|&len| !is_inverse_lyndon_naive_bytes(&bytes[..len], alphabet))
    {
        None => return Ok(None),
        Some(len) => len,
    };
    let z = &bytes[..z_len];
    let b = z[z_len - 1];

    // Every decomposition z = r·a·s·r·b with a < b, keyed by |r|. The
    // leading r is a prefix of z, the trailing r ends one symbol before
    // the end, and s may be empty but p = r·a·s must reach the second r.
    let shape_lengths: Vec<usize> = (0..=z_len.saturating_sub(2) / 2)
        .filter(|&r_len| {
            z[..r_len] == z[z_len - 1 - r_len..z_len - 1]
                && alphabet.cmp_symbols(z[r_len], b, Order::Standard) == Ordering::Less
        })
        .collect();
    let shortest = match shape_lengths.first() {
        None => {
            return Err(Error::Internal(
                "a non-inverse-Lyndon prefix admits at least one split".into(),
            ))
        }
        Some(&r_len) => r_len,
    };

    let mut accepted = Vec::new();
    for &r_len in &shape_lengths {
        let p_len = z_len - r_len - 1;
        if r_len == shortest
            && is_inverse_lyndon_naive_bytes(&z[..p_len], alphabet)
            && is_inverse_lyndon_naive_bytes(&z[p_len..], alphabet)
        {
            accepted.push(CanonicalPair::from_parts(
                p_len,
                r_len + 1,
                r_len,
                z[r_len],
                b,
            ));
        }
    }
    match accepted[..] {
        [pair] => Ok(Some(pair)),
        _ => Err(Error::Internal(format!(
            "expected exactly one canonical split, found {}",
            accepted.len()
        ))),
    }
}

/// The canonical inverse Lyndon factorization by its recursive
/// definition: split off the canonical pair, factorize the rest, then
/// either keep `p` as a factor or merge it with the next one.
pub fn icfl_naive<'a>(word: &'a Word, alphabet: &Alphabet) -> Result<Factorization<'a>> {
    alphabet.validate(word)?;
    let cuts = icfl_naive_cuts(word.as_bytes(), alphabet)?;
    Ok(Factorization::from_cuts_unchecked(
        word,
        cuts,
        FactorizationKind::Icfl,
    ))
}

fn icfl_naive_cuts(bytes: &[u8], alphabet: &Alphabet) -> Result<Vec<usize>> {
    if is_inverse_lyndon_naive_bytes(bytes, alphabet) {
        return Ok(vec![0, bytes.len()]);
    }
    let pair = canonical_pair_naive_bytes(bytes, alphabet)?
        .ok_or_else(|| Error::Internal("non-inverse-Lyndon words have a canonical pair".into()))?;
    let p_len = pair.p_len();
    let suffix = &bytes[p_len..];
    let sub = icfl_naive_cuts(suffix, alphabet)?;
    let first = &suffix[..sub[1]];
    let pbar = &suffix[..pair.pbar_len()];
    let r = &suffix[..pair.r_len()];
    let keeps = first.starts_with(pbar);
    let merges = r.starts_with(first);
    let mut cuts = vec![0];
    match (keeps, merges) {
        (true, false) => cuts.push(p_len),
        (false, true) => {}
        (keeps, merges) => {
            return Err(Error::Internal(format!(
                "merge cases must be exclusive and exhaustive, got keep={keeps} merge={merges}"
            )))
        }
    }
    cuts.extend(sub[1..].iter().map(|cut| cut + p_len));
    Ok(cuts)
}

/// All factorizations of `word` into inverse Lyndon factors in which
/// each factor strictly precedes the next at a divergence position,
/// ordered by their cut offsets. The canonical factorization is always
/// among them.
pub fn enumerate_inverse_lyndon_factorizations<'a>(
    word: &'a Word,
    alphabet: &Alphabet,
) -> Result<Vec<Factorization<'a>>> {
    enumerate_inverse_lyndon_factorizations_with_limit(word, alphabet, DEFAULT_ENUMERATION_LIMIT)
}

pub fn enumerate_inverse_lyndon_factorizations_with_limit<'a>(
    word: &'a Word,
    alphabet: &Alphabet,
    limit: usize,
) -> Result<Vec<Factorization<'a>>> {
    alphabet.validate(word)?;
    let bytes = word.as_bytes();
    if bytes.len() > limit {
        return Err(Error::LimitExceeded {
            len: bytes.len(),
            limit,
        });
    }
    let mut cuts = vec![0];
    let mut found = Vec::new();
    descend_factorizations(bytes, alphabet, &mut cuts, &mut found);
    Ok(found
        .into_iter()
        .map(|cuts| Factorization::from_cuts_unchecked(word, cuts, FactorizationKind::Generic))
        .collect())
}

fn descend_factorizations(
    bytes: &[u8],
    alphabet: &Alphabet,
    cuts: &mut Vec<usize>,
    found: &mut Vec<Vec<usize>>,
) {
    let start = *cuts.last().expect("cuts start nonempty");
    if start == bytes.len() {
        found.push(cuts.clone());
        return;
    }
    for end in start + 1..=bytes.len() {
        let factor = &bytes[start..end];
        if !is_inverse_lyndon_naive_bytes(factor, alphabet) {
            continue;
        }
        if cuts.len() >= 2 {
            let previous = &bytes[cuts[cuts.len() - 2]..start];
            if compare_bytes(previous, factor, alphabet, Order::Standard)
                != ComparisonOutcome::LessStrict
            {
                continue;
            }
        }
        cuts.push(end);
        descend_factorizations(bytes, alphabet, cuts, found);
        cuts.pop();
    }
}

/// All groupings of a CFL_in factorization: each maximal prefix-order
/// chain is independently recut into consecutive blocks that are inverse
/// Lyndon and strictly increase within the chain, and the per-chain
/// choices are combined.
pub fn enumerate_groupings<'a>(
    cfl_in_fact: &Factorization<'a>,
    alphabet: &Alphabet,
) -> Result<Vec<Factorization<'a>>> {
    enumerate_groupings_with_limit(cfl_in_fact, alphabet, DEFAULT_ENUMERATION_LIMIT)
}

pub fn enumerate_groupings_with_limit<'a>(
    cfl_in_fact: &Factorization<'a>,
    alphabet: &Alphabet,
    limit: usize,
) -> Result<Vec<Factorization<'a>>> {
    let word = cfl_in_fact.word();
    alphabet.validate(word)?;
    if word.len() > limit {
        return Err(Error::LimitExceeded {
            len: word.len(),
            limit,
        });
    }
    let invalid = |reason: &str| Error::InvalidFactorization {
        kind: FactorizationKind::CflIn,
        reason: reason.into(),
    };
    for factor in cfl_in_fact.factors() {
        if !is_lyndon_naive_bytes(factor, alphabet, Order::Inverse) {
            return Err(invalid("factors must be Lyndon for the inverse order"));
        }
    }
    for index in 1..cfl_in_fact.factor_count() {
        let outcome = compare_bytes(
            cfl_in_fact.factor(index - 1),
            cfl_in_fact.factor(index),
            alphabet,
            Order::Inverse,
        );
        if outcome.is_less() {
            return Err(invalid(
                "factors must be nonincreasing for the inverse order",
            ));
        }
    }

    let count = cfl_in_fact.factor_count();
    let mut chain_starts = vec![0];
    for index in 1..count {
        if !cfl_in_fact
            .factor(index - 1)
            .starts_with(cfl_in_fact.factor(index))
        {
            chain_starts.push(index);
        }
    }
    chain_starts.push(count);

    // Block end offsets for every admissible recut, one list per chain.
    let mut per_chain: Vec<Vec<Vec<usize>>> = Vec::new();
    for window in chain_starts.windows(2) {
        let mut options = Vec::new();
        let mut ends = Vec::new();
        chain_recuts(
            cfl_in_fact,
            alphabet,
            window[0],
            window[1],
            &mut ends,
            &mut options,
        );
        per_chain.push(options);
    }

    let mut combos: Vec<Vec<usize>> = vec![vec![0]];
    for options in &per_chain {
        let mut extended = Vec::with_capacity(combos.len() * options.len());
        for combo in &combos {
            for option in options {
                let mut cuts = combo.clone();
                cuts.extend(option);
                extended.push(cuts);
            }
        }
        combos = extended;
    }
    Ok(combos
        .into_iter()
        .map(|cuts| Factorization::from_cuts_unchecked(word, cuts, FactorizationKind::Generic))
        .collect())
}

fn chain_recuts(
    factorization: &Factorization<'_>,
    alphabet: &Alphabet,
    first: usize,
    last: usize,
    ends: &mut Vec<usize>,
    options: &mut Vec<Vec<usize>>,
) {
    let start = *ends.last().unwrap_or(&first);
    if start == last {
        options.push(ends.iter().map(|&end| factorization.cuts()[end]).collect());
        return;
    }
    let bytes = factorization.word().as_bytes();
    let block_bytes =
        |from: usize, to: usize| &bytes[factorization.cuts()[from]..factorization.cuts()[to]];
    for end in start + 1..=last {
        let block = block_bytes(start, end);
        if !is_inverse_lyndon_naive_bytes(block, alphabet) {
            continue;
        }
        if !ends.is_empty() {
            let previous_start = if ends.len() >= 2 {
                ends[ends.len() - 2]
            } else {
                first
            };
            let previous = block_bytes(previous_start, start);
            if compare_bytes(previous, block, alphabet, Order::Standard)
                != ComparisonOutcome::LessStrict
            {
                continue;
            }
        }
        ends.push(end);
        chain_recuts(factorization, alphabet, first, last, ends, options);
        ends.pop();
    }
}

/// All words over `alphabet` up to `max_len` symbols, shortest first and
/// in rank order within a length.
pub fn words(alphabet: &Alphabet, max_len: usize) -> Words {
    Words {
        symbols: alphabet.symbols().to_vec(),
        max_len,
        digits: Vec::new(),
    }
}

pub struct Words {
    symbols: Vec<u8>,
    max_len: usize,
    digits: Vec<usize>,
}

impl Iterator for Words {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.digits.is_empty() {
            if self.max_len == 0 {
                return None;
            }
            self.digits.push(0);
        } else {
            let base = self.symbols.len();
            let mut active = self.digits.len();
            while active > 0 && self.digits[active - 1] == base - 1 {
                active -= 1;
            }
            if active == 0 {
                let len = self.digits.len() + 1;
                if len > self.max_len {
                    return None;
                }
                self.digits = vec![0; len];
            } else {
                self.digits[active - 1] += 1;
                for digit in self.digits[active..].iter_mut() {
                    *digit = 0;
                }
            }
        }
        let bytes: Vec<u8> = self
            .digits
            .iter()
            .map(|&digit| self.symbols[digit])
            .collect();
        Some(Word::new(bytes).expect("enumerated words are nonempty"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn ab() -> Alphabet {
        Alphabet::new(b"ab").unwrap()
    }

    fn abcd() -> Alphabet {
        Alphabet::new(b"abcd").unwrap()
    }

    fn factor_lists(factorizations: &[Factorization<'_>]) -> Vec<Vec<String>> {
        factorizations.iter().map(|f| f.factor_strings()).collect()
    }

    fn strings(factors: &[&str]) -> Vec<String> {
        factors.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn lyndon_naive_examples() {
        let alphabet = ab();
        assert!(is_lyndon_naive(&word("aababaabb"), &alphabet, Order::Standard).unwrap());
        assert!(!is_lyndon_naive(&word("abaab"), &alphabet, Order::Standard).unwrap());
        assert!(!is_lyndon_naive(&word("aa"), &alphabet, Order::Standard).unwrap());
        assert!(!is_lyndon_naive(&word("aa"), &alphabet, Order::Inverse).unwrap());
    }

    #[test]
    fn inverse_lyndon_naive_examples() {
        let alphabet = ab();
        assert!(is_inverse_lyndon_naive(&word("baaab"), &alphabet).unwrap());
        assert!(!is_inverse_lyndon_naive(&word("aabba"), &alphabet).unwrap());
        assert!(is_inverse_lyndon_naive(&word("b"), &alphabet).unwrap());
    }

    #[test]
    fn cfl_naive_examples() {
        let alphabet = abcd();
        assert_eq!(
            cfl_naive(&word("dabadabdabdadac"), &alphabet, Order::Inverse)
                .unwrap()
                .factor_strings(),
            ["daba", "dab", "dab", "dadac"]
        );
        assert_eq!(
            cfl_naive(&word("aabab"), &alphabet, Order::Standard)
                .unwrap()
                .factor_strings(),
            ["aabab"]
        );
        assert_eq!(
            cfl_naive(&word("ba"), &alphabet, Order::Standard)
                .unwrap()
                .factor_strings(),
            ["b", "a"]
        );
    }

    #[test]
    fn canonical_pair_naive_examples() {
        let w = word("babaaabb");
        let pair = canonical_pair_naive(&w, &ab()).unwrap().unwrap();
        assert_eq!(pair.p(&w), b"babaaa");
        assert_eq!(pair.pbar(&w), b"bb");

        let w = word("dabadabdabdadac");
        let pair = canonical_pair_naive(&w, &abcd()).unwrap().unwrap();
        assert_eq!(pair.p(&w), b"daba");
        assert_eq!(pair.pbar(&w), b"dabd");

        assert_eq!(
            canonical_pair_naive(&word("bbababbaa"), &ab()).unwrap(),
            None
        );
    }

    #[test]
    fn icfl_naive_examples() {
        assert_eq!(
            icfl_naive(&word("dabadabdabdadac"), &abcd())
                .unwrap()
                .factor_strings(),
            ["daba", "dabdab", "dadac"]
        );
        assert_eq!(
            icfl_naive(&word("bbababbaa"), &ab())
                .unwrap()
                .factor_strings(),
            ["bbababbaa"]
        );
        assert_eq!(
            icfl_naive(&word("babaababaababab"), &ab())
                .unwrap()
                .factor_strings(),
            ["babaababaa", "babab"]
        );
    }

    #[test]
    fn enumeration_finds_known_factorizations() {
        let alphabet = abcd();
        let w = word("dabdadacddbdc");
        let all = enumerate_inverse_lyndon_factorizations(&w, &alphabet).unwrap();
        let lists = factor_lists(&all);
        assert!(lists.contains(&strings(&["dab", "dadacd", "db", "dc"])));
        assert!(lists.contains(&strings(&["dabda", "dac", "ddbdc"])));
        assert!(lists.contains(&strings(&["dab", "dadac", "ddbdc"])));

        let w = word("dabadabdabdadac");
        let all = enumerate_inverse_lyndon_factorizations(&w, &alphabet).unwrap();
        let lists = factor_lists(&all);
        assert!(lists.contains(&strings(&["dabadab", "dabda", "dac"])));
        assert!(lists.contains(&strings(&["daba", "dabdab", "dadac"])));

        let w = word("a");
        let all = enumerate_inverse_lyndon_factorizations(&w, &alphabet).unwrap();
        assert_eq!(factor_lists(&all), [strings(&["a"])]);
    }

    #[test]
    fn enumeration_respects_the_length_limit() {
        let w = word("aaaaaaaaaaaaaaaaaaaaa");
        assert_eq!(
            enumerate_inverse_lyndon_factorizations(&w, &ab()),
            Err(Error::LimitExceeded { len: 21, limit: 20 })
        );
    }

    #[test]
    fn groupings_of_known_factorizations() {
        let alphabet = abcd();
        let w = word("dabadabdabdabdadac");
        let base = crate::factorize::cfl_in(&w, &alphabet).unwrap();
        let groupings = enumerate_groupings(&base, &alphabet).unwrap();
        let lists = factor_lists(&groupings);
        assert!(lists.contains(&strings(&["daba", "dabdabdab", "dadac"])));
        assert!(lists.contains(&strings(&["dabadab", "dabdab", "dadac"])));
        assert!(!lists.contains(&strings(&["dabadab", "dabda", "dac"])));

        // An unbordered inverse Lyndon word is its own unique grouping
        // even when its factorization has several factors.
        let w = word("baaab");
        let base = crate::factorize::cfl_in(&w, &ab()).unwrap();
        assert!(base.factor_count() > 1);
        let groupings = enumerate_groupings(&base, &ab()).unwrap();
        assert_eq!(factor_lists(&groupings), [strings(&["baaab"])]);

        let w = word("dab");
        let base = crate::factorize::cfl_in(&w, &alphabet).unwrap();
        let groupings = enumerate_groupings(&base, &alphabet).unwrap();
        assert_eq!(factor_lists(&groupings), [strings(&["dab"])]);
    }

    #[test]
    fn word_stream_is_shortlex() {
        let listed: Vec<String> = words(&ab(), 2).map(|w| w.to_string()).collect();
        assert_eq!(listed, ["a", "b", "aa", "ab", "ba", "bb"]);

        let unary: Vec<String> = words(&Alphabet::new(b"a").unwrap(), 3)
            .map(|w| w.to_string())
            .collect();
        assert_eq!(unary, ["a", "aa", "aaa"]);
    }

    #[test]
    fn word_stream_count_matches_geometric_sum() {
        assert_eq!(words(&ab(), 16).count(), 131_070);
        assert_eq!(words(&Alphabet::new(b"abc").unwrap(), 10).count(), 88_572);
    }
}

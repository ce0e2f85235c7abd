use std::ops::Range;

use crate::alphabet::{Alphabet, Order};
use crate::border::border_array_bytes;
use crate::compare::{compare_bytes, ComparisonOutcome};
use crate::error::{Error, Result};
use crate::factorization::{Factorization, FactorizationKind};
use crate::factorize::{canonical_split, resolve_pending, PendingSplit};
use crate::recognize::{is_inverse_lyndon_bytes, is_lyndon_bytes};
use crate::word::Word;

/// Decomposes `word` by repeatedly stripping its unbordered nonempty
/// border from the right; the loop ends at an unbordered leading factor.
///
/// Each strip is forced (the unbordered border is unique), so the result
/// is canonical and concatenates back to `word`.
pub fn nb(word: &Word) -> Factorization<'_> {
    let mut cuts_rev = nb_cuts_rev(word.as_bytes());
    cuts_rev.reverse();
    Factorization::from_cuts_unchecked(word, cuts_rev, FactorizationKind::Nb)
}

/// Cut offsets of the unbordered-border decomposition, rightmost first,
/// including both endpoints.
fn nb_cuts_rev(bytes: &[u8]) -> Vec<usize> {
    let terminals = border_array_bytes(bytes).unbordered_terminals();
    let mut cuts_rev = vec![bytes.len()];
    let mut end = bytes.len();
    loop {
        let border = terminals[end - 1];
        if border == 0 {
            break;
        }
        end -= border;
        cuts_rev.push(end);
    }
    cuts_rev.push(0);
    cuts_rev
}

/// Rebuilds the inverse-order Lyndon factorization from the canonical
/// inverse Lyndon factorization by decomposing each factor with [`nb`].
///
/// No ordered scanning happens: the border structure of the factors
/// already determines the result.
pub fn cfl_in_from_icfl<'a>(
    factorization: &Factorization<'a>,
    alphabet: &Alphabet,
) -> Result<Factorization<'a>> {
    factorization.validate_shape(FactorizationKind::Icfl, alphabet)?;
    let bytes = factorization.word().as_bytes();
    let mut cuts = vec![0];
    for index in 0..factorization.factor_count() {
        let (start, end) = factorization.factor_span(index);
        let mut factor_cuts = nb_cuts_rev(&bytes[start..end]);
        factor_cuts.pop(); // drop the leading 0; `start` is already a cut
        while let Some(cut) = factor_cuts.pop() {
            cuts.push(start + cut);
        }
    }
    Ok(Factorization::from_cuts_unchecked(
        factorization.word(),
        cuts,
        FactorizationKind::CflIn,
    ))
}

/// The maximal chains of an inverse-order Lyndon factorization under the
/// prefix order: each chain is a maximal run of consecutive factors in
/// which every factor is a prefix of (or equal to) its predecessor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainDecomposition {
    chains: Vec<Range<usize>>,
}

impl ChainDecomposition {
    /// Factor index ranges, in word order.
    pub fn chains(&self) -> &[Range<usize>] {
        &self.chains
    }

    pub fn chain_count(&self) -> usize {
        self.chains.len()
    }

    /// Byte span covered by one chain of `factorization`.
    pub fn offset_span(&self, factorization: &Factorization<'_>, index: usize) -> (usize, usize) {
        let chain = &self.chains[index];
        (
            factorization.cuts()[chain.start],
            factorization.cuts()[chain.end],
        )
    }
}

/// Splits a CFL_in factorization into its maximal prefix-order chains.
pub fn pmc_decompose(
    factorization: &Factorization<'_>,
    alphabet: &Alphabet,
) -> Result<ChainDecomposition> {
    factorization.validate_shape(FactorizationKind::CflIn, alphabet)?;
    Ok(ChainDecomposition {
        chains: pmc_chains(factorization),
    })
}

fn pmc_chains(factorization: &Factorization<'_>) -> Vec<Range<usize>> {
    let mut chains = Vec::new();
    let mut start = 0;
    for index in 1..factorization.factor_count() {
        if !factorization
            .factor(index - 1)
            .starts_with(factorization.factor(index))
        {
            chains.push(start..index);
            start = index;
        }
    }
    chains.push(start..factorization.factor_count());
    chains
}

/// Canonical inverse Lyndon factorization of the product of one
/// prefix-order chain of anti-Lyndon words.
///
/// The input carries the chain as a factorization of its own product;
/// its factors must be Lyndon for the inverse order and each a prefix of
/// its predecessor. The computation is structural: it reads factor
/// lengths and compares slices of the product, but never re-runs the
/// text-level scans.
pub fn icfl_of_chain<'a>(
    chain: &Factorization<'a>,
    alphabet: &Alphabet,
) -> Result<Factorization<'a>> {
    alphabet.validate(chain.word())?;
    let invalid = |reason: String| Error::InvalidFactorization {
        kind: chain.kind(),
        reason,
    };
    for (index, factor) in chain.factors().enumerate() {
        if !is_lyndon_bytes(factor, alphabet, Order::Inverse) {
            return Err(invalid(format!(
                "chain factor {index} ({:?}) is not Lyndon for the inverse order",
                String::from_utf8_lossy(factor)
            )));
        }
    }
    for index in 1..chain.factor_count() {
        if !chain.factor(index - 1).starts_with(chain.factor(index)) {
            return Err(invalid(format!(
                "chain factor {index} is not a prefix of its predecessor"
            )));
        }
    }
    let cuts = icfl_chain_cuts(chain.word().as_bytes(), &chain.cuts()[1..], alphabet)?;
    Ok(Factorization::from_cuts_unchecked(
        chain.word(),
        cuts,
        FactorizationKind::Icfl,
    ))
}

/// Rebuilds the canonical inverse Lyndon factorization from the
/// inverse-order Lyndon factorization: decompose into maximal
/// prefix-order chains, convert each chain, and splice the results.
pub fn icfl_from_cfl_in<'a>(
    factorization: &Factorization<'a>,
    alphabet: &Alphabet,
) -> Result<Factorization<'a>> {
    factorization.validate_shape(FactorizationKind::CflIn, alphabet)?;
    let bytes = factorization.word().as_bytes();
    let mut cuts = vec![0];
    for chain in pmc_chains(factorization) {
        let base = factorization.cuts()[chain.start];
        let end = factorization.cuts()[chain.end];
        let relative_ends: Vec<usize> = factorization.cuts()[chain.start + 1..=chain.end]
            .iter()
            .map(|cut| cut - base)
            .collect();
        let chain_cuts = icfl_chain_cuts(&bytes[base..end], &relative_ends, alphabet)?;
        cuts.extend(chain_cuts[1..].iter().map(|cut| cut + base));
    }
    Ok(Factorization::from_cuts_unchecked(
        factorization.word(),
        cuts,
        FactorizationKind::Icfl,
    ))
}

/// Core of the chain conversion. `ends` are the chain's factor end
/// offsets within `product` (the leading 0 omitted).
///
/// Loop invariant: the remaining factors still form a prefix-order chain
/// of anti-Lyndon words, and such a product is inverse Lyndon exactly
/// when, after the leading run of equal factors, the remaining text is a
/// prefix of the leading factor. While that fails, the shortest
/// non-inverse-Lyndon prefix `z = p·p̄` is assembled from factor
/// boundaries plus one symbol-level divergence, `z` is split by the same
/// bounded-right-extension search the text-level factorizer uses, and
/// `p` is peeled; `p` always covers whole factors.
fn icfl_chain_cuts(product: &[u8], ends: &[usize], alphabet: &Alphabet) -> Result<Vec<usize>> {
    let count = ends.len();
    let start_of = |index: usize| if index == 0 { 0 } else { ends[index - 1] };
    let mut pending: Vec<PendingSplit> = Vec::new();
    let mut fi = 0;
    let tail_start;
    loop {
        let base = start_of(fi);
        let head_len = ends[fi] - base;
        let head = &product[base..base + head_len];
        let mut run = 1;
        while fi + run < count && ends[fi + run] - start_of(fi + run) == head_len {
            run += 1;
        }
        if fi + run == count {
            // A power of an anti-Lyndon word is inverse Lyndon.
            tail_start = base;
            break;
        }
        let residue_start = start_of(fi + run);
        let residue = &product[residue_start..];
        if residue.len() <= head_len && *residue == head[..residue.len()] {
            tail_start = base;
            break;
        }

        // Find how many residue factors fit as a prefix of the head.
        let mut fitted = 0usize;
        let mut last_fitting = None;
        let mut factor_start = residue_start;
        for (index, &factor_end) in ends.iter().enumerate().skip(fi + run) {
            let factor_len = factor_end - factor_start;
            if fitted + factor_len <= head_len
                && product[factor_start..factor_end] == head[fitted..fitted + factor_len]
            {
                fitted += factor_len;
                last_fitting = Some(index);
                factor_start = factor_end;
            } else {
                break;
            }
        }
        let last_fitting = last_fitting.ok_or_else(|| {
            Error::Internal("first residue factor of a chain must fit its head".into())
        })?;
        if last_fitting + 1 >= count {
            return Err(Error::Internal(
                "a non-inverse-Lyndon chain product must diverge before its last factor".into(),
            ));
        }
        if fitted >= head_len {
            return Err(Error::Internal(
                "an unbordered head cannot equal a concatenation of its own proper prefixes".into(),
            ));
        }

        // z ends one symbol past the divergence between the head's
        // remainder and the first factor that no longer fits.
        let head_rest = &head[fitted..];
        let breaker = &product[start_of(last_fitting + 1)..ends[last_fitting + 1]];
        let lcp = head_rest
            .iter()
            .zip(breaker.iter())
            .take_while(|(x, y)| x == y)
            .count();
        if lcp == head_rest.len() || lcp == breaker.len() {
            return Err(Error::Internal(
                "chain divergence must happen at a symbol, not at a prefix end".into(),
            ));
        }
        let z_len = run * head_len + fitted + lcp + 1;
        debug_assert_eq!(
            crate::recognize::shortest_non_inverse_lyndon_prefix_bytes(&product[base..], alphabet),
            Some(z_len),
            "structural z must match the text-level scan"
        );
        let split = canonical_split(&product[base..base + z_len], alphabet)?;
        let p_end = base + split.p_len();
        let boundary = ends.binary_search(&p_end).map_err(|_| {
            Error::Internal("canonical prefix must end on a chain factor boundary".into())
        })?;
        pending.push(PendingSplit {
            start: base,
            pbar_len: split.pbar_len(),
            r_len: split.r_len(),
        });
        fi = boundary + 1;
    }
    debug_assert!(is_inverse_lyndon_bytes(&product[tail_start..], alphabet));
    resolve_pending(product, &pending, tail_start)
}

/// Tests whether `candidate` is a grouping of `cfl_in`: a factorization
/// obtained by concatenating consecutive CFL_in factors without crossing
/// a maximal prefix-order chain, with every block inverse Lyndon and
/// consecutive blocks strictly increasing at a divergence position.
pub fn is_grouping(
    candidate: &Factorization<'_>,
    cfl_in: &Factorization<'_>,
    alphabet: &Alphabet,
) -> Result<bool> {
    if candidate.word().as_bytes() != cfl_in.word().as_bytes() {
        return Err(Error::WordMismatch);
    }
    cfl_in.validate_shape(FactorizationKind::CflIn, alphabet)?;
    for cut in candidate.cuts() {
        if cfl_in.cuts().binary_search(cut).is_err() {
            return Ok(false);
        }
    }
    let chains = pmc_chains(cfl_in);
    let spans: Vec<(usize, usize)> = chains
        .iter()
        .map(|chain| (cfl_in.cuts()[chain.start], cfl_in.cuts()[chain.end]))
        .collect();
    for index in 0..candidate.factor_count() {
        let (start, end) = candidate.factor_span(index);
        let chain = spans.partition_point(|&(span_start, _)| span_start <= start) - 1;
        if end > spans[chain].1 {
            return Ok(false);
        }
    }
    for factor in candidate.factors() {
        if !is_inverse_lyndon_bytes(factor, alphabet) {
            return Ok(false);
        }
    }
    for index in 1..candidate.factor_count() {
        let outcome = compare_bytes(
            candidate.factor(index - 1),
            candidate.factor(index),
            alphabet,
            Order::Standard,
        );
        if outcome != ComparisonOutcome::LessStrict {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factorize::{cfl_in, icfl};

    fn word(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn abcd() -> Alphabet {
        Alphabet::new(b"abcd").unwrap()
    }

    fn from_factors<'a>(
        w: &'a Word,
        factors: &[&str],
        kind: FactorizationKind,
    ) -> Factorization<'a> {
        let mut cuts = vec![0];
        for factor in factors {
            cuts.push(cuts.last().unwrap() + factor.len());
        }
        let joined: Vec<u8> = factors.iter().flat_map(|f| f.bytes()).collect();
        assert_eq!(w.as_bytes(), joined, "factors must concatenate to the word");
        Factorization::from_cuts(w, cuts, kind).unwrap()
    }

    #[test]
    fn nb_strips_unbordered_borders() {
        assert_eq!(nb(&word("dabdab")).factor_strings(), ["dab", "dab"]);
        assert_eq!(nb(&word("daba")).factor_strings(), ["daba"]);
        assert_eq!(nb(&word("dadac")).factor_strings(), ["dadac"]);
        assert_eq!(nb(&word("aaaa")).factor_strings(), ["a", "a", "a", "a"]);
        assert_eq!(nb(&word("ababa")).factor_strings(), ["ab", "ab", "a"]);
    }

    #[test]
    fn nb_results_validate() {
        for text in ["dabdab", "ababa", "aaaa", "dadac", "babaababaababab"] {
            let w = word(text);
            nb(&w).validate(&abcd().clone()).unwrap_or_else(|error| {
                panic!("NB({text}) failed validation: {error}");
            });
        }
    }

    #[test]
    fn icfl_factors_decompose_into_the_cfl_in() {
        let alphabet = abcd();
        let w = word("dabadabdabdadac");
        let from_icfl = cfl_in_from_icfl(&icfl(&w, &alphabet).unwrap(), &alphabet).unwrap();
        assert_eq!(from_icfl.factor_strings(), ["daba", "dab", "dab", "dadac"]);
        assert_eq!(from_icfl, cfl_in(&w, &alphabet).unwrap());

        let w = word("dabadabdabdabdadac");
        let from_icfl = cfl_in_from_icfl(&icfl(&w, &alphabet).unwrap(), &alphabet).unwrap();
        assert_eq!(
            from_icfl.factor_strings(),
            ["daba", "dab", "dab", "dab", "dadac"]
        );
    }

    #[test]
    fn conversion_rejects_non_icfl_input() {
        let alphabet = abcd();
        let w = word("abab");
        let fake = from_factors(&w, &["ab", "ab"], FactorizationKind::Icfl);
        assert!(matches!(
            cfl_in_from_icfl(&fake, &alphabet),
            Err(Error::InvalidFactorization { .. })
        ));
    }

    #[test]
    fn maximal_chains_examples() {
        let alphabet = abcd();

        let w = word("dabadabdabdadac");
        let factorization = cfl_in(&w, &alphabet).unwrap();
        let chains = pmc_decompose(&factorization, &alphabet).unwrap();
        assert_eq!(chains.chains(), [0..3, 3..4]);
        assert_eq!(chains.offset_span(&factorization, 0), (0, 10));
        assert_eq!(chains.offset_span(&factorization, 1), (10, 15));

        let w = word("dabdadacddbdc");
        let factorization = cfl_in(&w, &alphabet).unwrap();
        let chains = pmc_decompose(&factorization, &alphabet).unwrap();
        assert_eq!(chains.chains(), [0..1, 1..2, 2..3]);
    }

    #[test]
    fn chain_conversion_examples() {
        let ab = Alphabet::new(b"ab").unwrap();
        let w = word("babaababaababab");
        let chain = from_factors(
            &w,
            &["babaa", "babaa", "ba", "ba", "b"],
            FactorizationKind::CflIn,
        );
        assert_eq!(
            icfl_of_chain(&chain, &ab).unwrap().factor_strings(),
            ["babaababaa", "babab"]
        );

        let alphabet = abcd();
        let w = word("dabadabdabdab");
        let chain = from_factors(&w, &["daba", "dab", "dab", "dab"], FactorizationKind::CflIn);
        assert_eq!(
            icfl_of_chain(&chain, &alphabet).unwrap().factor_strings(),
            ["daba", "dabdabdab"]
        );

        let w = word("dadac");
        let chain = from_factors(&w, &["dadac"], FactorizationKind::CflIn);
        assert_eq!(
            icfl_of_chain(&chain, &alphabet).unwrap().factor_strings(),
            ["dadac"]
        );
    }

    #[test]
    fn chain_conversion_rejects_non_chains() {
        let alphabet = abcd();
        let w = word("dabdaba");
        // (dab, daba): the second factor is not a prefix of the first.
        let not_a_chain = from_factors(&w, &["dab", "daba"], FactorizationKind::CflIn);
        assert!(icfl_of_chain(&not_a_chain, &alphabet).is_err());
    }

    #[test]
    fn full_conversion_round_trip_examples() {
        let alphabet = abcd();
        for text in ["dabadabdabdadac", "dabdadacddbdc", "dabadabdabdabdadac"] {
            let w = word(text);
            let direct = icfl(&w, &alphabet).unwrap();
            let converted = icfl_from_cfl_in(&cfl_in(&w, &alphabet).unwrap(), &alphabet).unwrap();
            assert_eq!(converted, direct, "{text}");
            let back = cfl_in_from_icfl(&direct, &alphabet).unwrap();
            assert_eq!(back, cfl_in(&w, &alphabet).unwrap(), "{text}");
        }
    }

    #[test]
    fn grouping_membership() {
        let alphabet = abcd();

        let w = word("dabadabdabdadac");
        let base = cfl_in(&w, &alphabet).unwrap();
        let not_on_cuts =
            from_factors(&w, &["dabadab", "dabda", "dac"], FactorizationKind::Generic);
        assert_eq!(is_grouping(&not_on_cuts, &base, &alphabet), Ok(false));
        let canonical = icfl(&w, &alphabet).unwrap();
        assert_eq!(is_grouping(&canonical, &base, &alphabet), Ok(true));

        let w = word("dabadabdabdabdadac");
        let base = cfl_in(&w, &alphabet).unwrap();
        let other = from_factors(
            &w,
            &["dabadab", "dabdab", "dadac"],
            FactorizationKind::Generic,
        );
        assert_eq!(is_grouping(&other, &base, &alphabet), Ok(true));

        let other_word = word("dab");
        let foreign = from_factors(&other_word, &["dab"], FactorizationKind::Generic);
        assert_eq!(
            is_grouping(&foreign, &base, &alphabet),
            Err(Error::WordMismatch)
        );
    }
}

//! Randomized invariants. The exhaustive sweeps cover every short word;
//! these push the same claims onto longer random words where only the
//! polynomial oracles (or no oracle at all) can follow.

use proptest::prelude::*;

use lyndon_words::oracle;
use lyndon_words::{
    canonical_pair, cfl, cfl_in, cfl_in_from_icfl, icfl, icfl_from_cfl_in, is_grouping,
    is_inverse_lyndon, is_lyndon, nb, Alphabet, Order, Word,
};

const SYMBOLS: &[u8] = b"abcd";

fn word_over(max_symbols: usize, max_len: usize) -> impl Strategy<Value = (Word, Alphabet)> {
    (1..=max_symbols, 1..=max_len).prop_flat_map(|(symbols, len)| {
        proptest::collection::vec(0..symbols, len).prop_map(move |indices| {
            let alphabet = Alphabet::new(&SYMBOLS[..symbols]).unwrap();
            let bytes: Vec<u8> = indices.into_iter().map(|index| SYMBOLS[index]).collect();
            (Word::new(bytes).unwrap(), alphabet)
        })
    })
}

proptest! {
    #[test]
    fn recognizers_agree_with_their_oracles((word, alphabet) in word_over(3, 18)) {
        for order in [Order::Standard, Order::Inverse] {
            prop_assert_eq!(
                is_lyndon(&word, &alphabet, order).unwrap(),
                oracle::is_lyndon_naive(&word, &alphabet, order).unwrap()
            );
        }
        prop_assert_eq!(
            is_inverse_lyndon(&word, &alphabet).unwrap(),
            oracle::is_inverse_lyndon_naive(&word, &alphabet).unwrap()
        );
    }

    #[test]
    fn duval_scan_matches_the_greedy_oracle((word, alphabet) in word_over(3, 16)) {
        for order in [Order::Standard, Order::Inverse] {
            let fast = cfl(&word, &alphabet, order).unwrap();
            let naive = oracle::cfl_naive(&word, &alphabet, order).unwrap();
            prop_assert_eq!(fast, naive);
        }
    }

    #[test]
    fn canonical_pairs_match_the_search_oracle((word, alphabet) in word_over(3, 16)) {
        prop_assert_eq!(
            canonical_pair(&word, &alphabet).unwrap(),
            oracle::canonical_pair_naive(&word, &alphabet).unwrap()
        );
    }

    #[test]
    fn icfl_matches_the_recursive_definition((word, alphabet) in word_over(3, 16)) {
        let fast = icfl(&word, &alphabet).unwrap();
        let naive = oracle::icfl_naive(&word, &alphabet).unwrap();
        prop_assert_eq!(fast, naive);
    }

    #[test]
    fn conversions_round_trip_against_direct_runs((word, alphabet) in word_over(4, 120)) {
        let canonical = icfl(&word, &alphabet).unwrap();
        let base = cfl_in(&word, &alphabet).unwrap();
        prop_assert_eq!(cfl_in_from_icfl(&canonical, &alphabet).unwrap(), base.clone());
        prop_assert_eq!(icfl_from_cfl_in(&base, &alphabet).unwrap(), canonical);
    }

    #[test]
    fn factorizations_validate_and_cover_the_word((word, alphabet) in word_over(4, 120)) {
        let outputs = [
            cfl(&word, &alphabet, Order::Standard).unwrap(),
            cfl(&word, &alphabet, Order::Inverse).unwrap(),
            icfl(&word, &alphabet).unwrap(),
            nb(&word),
        ];
        for factorization in &outputs {
            factorization.validate(&alphabet).unwrap();
            let stitched: Vec<u8> = factorization.factors().flatten().copied().collect();
            prop_assert_eq!(&stitched[..], word.as_bytes());
        }
    }

    #[test]
    fn icfl_is_always_a_grouping((word, alphabet) in word_over(3, 60)) {
        let canonical = icfl(&word, &alphabet).unwrap();
        let base = cfl_in(&word, &alphabet).unwrap();
        prop_assert!(is_grouping(&canonical, &base, &alphabet).unwrap());
    }

    #[test]
    fn border_stripping_factorizes_icfl_factors((word, alphabet) in word_over(3, 60)) {
        let canonical = icfl(&word, &alphabet).unwrap();
        for factor in canonical.factors() {
            let factor = Word::new(factor).unwrap();
            let stripped = nb(&factor);
            let direct = cfl_in(&factor, &alphabet).unwrap();
            prop_assert_eq!(stripped.cuts(), direct.cuts());
        }
    }
}

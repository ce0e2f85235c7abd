use std::cmp::Ordering;

use crate::alphabet::{Alphabet, Order};
use crate::error::Result;
use crate::word::Word;

/// True when `word` is a Lyndon word under the chosen order: primitive
/// and strictly smaller than all of its proper suffixes.
///
/// Runs the Duval period test in one left-to-right pass.
pub fn is_lyndon(word: &Word, alphabet: &Alphabet, order: Order) -> Result<bool> {
    alphabet.validate(word)?;
    Ok(is_lyndon_bytes(word.as_bytes(), alphabet, order))
}

pub(crate) fn is_lyndon_bytes(bytes: &[u8], alphabet: &Alphabet, order: Order) -> bool {
    // `i` tracks how far the current suffix matches the word's own
    // prefix; a nonzero `i` at the end means a period shorter than the
    // word, i.e. a nontrivial power or a suffix that ties too long.
    let (mut i, mut j) = (0usize, 1usize);
    while j < bytes.len() {
        match alphabet.cmp_symbols(bytes[i], bytes[j], order) {
            Ordering::Equal => {
                i += 1;
                j += 1;
            }
            Ordering::Less => {
                i = 0;
                j += 1;
            }
            Ordering::Greater => return false,
        }
    }
    i == 0
}

/// True when every nonempty proper suffix of `word` is strictly smaller
/// than `word` in the standard order.
pub fn is_inverse_lyndon(word: &Word, alphabet: &Alphabet) -> Result<bool> {
    alphabet.validate(word)?;
    Ok(anti_prenecklace_violation(word.as_bytes(), alphabet).is_none())
}

/// Length of the shortest prefix of `word` that is not inverse Lyndon,
/// or `None` when `word` itself is inverse Lyndon.
///
/// Prefixes of inverse Lyndon words are inverse Lyndon, so the answer is
/// a single threshold and one scan finds it.
pub fn shortest_non_inverse_lyndon_prefix(
    word: &Word,
    alphabet: &Alphabet,
) -> Result<Option<usize>> {
    alphabet.validate(word)?;
    Ok(shortest_non_inverse_lyndon_prefix_bytes(
        word.as_bytes(),
        alphabet,
    ))
}

pub(crate) fn is_inverse_lyndon_bytes(bytes: &[u8], alphabet: &Alphabet) -> bool {
    anti_prenecklace_violation(bytes, alphabet).is_none()
}

pub(crate) fn shortest_non_inverse_lyndon_prefix_bytes(
    bytes: &[u8],
    alphabet: &Alphabet,
) -> Option<usize> {
    anti_prenecklace_violation(bytes, alphabet).map(|position| position + 1)
}

/// A word is inverse Lyndon exactly when it is a prenecklace for the
/// reversed order: a prefix of some power of a Lyndon word of that
/// order. The scan maintains the length of that governing Lyndon prefix
/// as a period and checks each new symbol against the one the period
/// predicts. Returns the first position that breaks the property.
fn anti_prenecklace_violation(bytes: &[u8], alphabet: &Alphabet) -> Option<usize> {
    let mut period = 1usize;
    for i in 1..bytes.len() {
        let predicted = bytes[i - period];
        match alphabet.cmp_symbols(bytes[i], predicted, Order::Inverse) {
            // The period persists; w[0..=i] stays a sesquipower.
            Ordering::Equal => {}
            // w[0..=i] is itself Lyndon for the reversed order.
            Ordering::Greater => period = i + 1,
            Ordering::Less => return Some(i),
        }
    }
    None
}

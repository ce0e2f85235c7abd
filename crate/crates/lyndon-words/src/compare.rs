use std::cmp::Ordering;

use crate::alphabet::{Alphabet, Order};
use crate::error::Result;
use crate::word::Word;

/// How a word `x` relates to a word `y` in the lexicographic order.
///
/// The two `Less` cases split the order by *why* `x` comes first: either
/// `x` is a proper prefix of `y`, or the words disagree at some position
/// and `x` holds the smaller symbol there. The second case is written
/// `x ≪ y`; two words are prefix-incomparable exactly when one of the
/// strict outcomes holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ComparisonOutcome {
    Equal,
    /// `x` is a proper prefix of `y`.
    LessPrefix,
    /// `x ≪ y`: the words differ at a position where `x` is smaller.
    LessStrict,
    /// `y` is a proper prefix of `x`.
    GreaterPrefix,
    /// `y ≪ x`.
    GreaterStrict,
}

impl ComparisonOutcome {
    /// `x ≺ y`: strictly smaller for either reason.
    pub fn is_less(self) -> bool {
        matches!(self, Self::LessPrefix | Self::LessStrict)
    }

    pub fn is_greater(self) -> bool {
        matches!(self, Self::GreaterPrefix | Self::GreaterStrict)
    }

    /// Neither word is a prefix of the other.
    pub fn is_prefix_incomparable(self) -> bool {
        matches!(self, Self::LessStrict | Self::GreaterStrict)
    }

    /// The outcome of comparing the operands in swapped order.
    pub fn mirror(self) -> Self {
        match self {
            Self::Equal => Self::Equal,
            Self::LessPrefix => Self::GreaterPrefix,
            Self::LessStrict => Self::GreaterStrict,
            Self::GreaterPrefix => Self::LessPrefix,
            Self::GreaterStrict => Self::LessStrict,
        }
    }
}

/// Compares `x` to `y` lexicographically under the chosen order.
pub fn compare(x: &Word, y: &Word, alphabet: &Alphabet, order: Order) -> Result<ComparisonOutcome> {
    alphabet.validate(x)?;
    alphabet.validate(y)?;
    Ok(compare_bytes(x.as_bytes(), y.as_bytes(), alphabet, order))
}

/// Comparison core over validated bytes.
pub(crate) fn compare_bytes(
    x: &[u8],
    y: &[u8],
    alphabet: &Alphabet,
    order: Order,
) -> ComparisonOutcome {
    for (&a, &b) in x.iter().zip(y.iter()) {
        match alphabet.cmp_symbols(a, b, order) {
            Ordering::Less => return ComparisonOutcome::LessStrict,
            Ordering::Greater => return ComparisonOutcome::GreaterStrict,
            Ordering::Equal => {}
        }
    }
    match x.len().cmp(&y.len()) {
        Ordering::Equal => ComparisonOutcome::Equal,
        Ordering::Less => ComparisonOutcome::LessPrefix,
        Ordering::Greater => ComparisonOutcome::GreaterPrefix,
    }
}

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::word::Word;

/// Which of the two total orders on the alphabet a comparison runs under.
///
/// `Inverse` reverses the rank order: `a` precedes `b` under `Inverse`
/// exactly when `b` precedes `a` under `Standard`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Order {
    Standard,
    Inverse,
}

const UNRANKED: u16 = u16::MAX;

/// A totally ordered set of byte symbols.
///
/// The constructor order of the symbols is their rank order. Every word
/// handed to an ordered operation must use only ranked symbols; the
/// operations validate this up front and report [`Error::UnrankedSymbol`]
/// otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<u8>,
    ranks: [u16; 256],
}

impl Alphabet {
    /// Builds an alphabet whose order is the order of `symbols`.
    pub fn new(symbols: &[u8]) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        let mut ranks = [UNRANKED; 256];
        for (rank, &symbol) in symbols.iter().enumerate() {
            if ranks[symbol as usize] != UNRANKED {
                return Err(Error::DuplicateSymbol { symbol });
            }
            ranks[symbol as usize] = rank as u16;
        }
        Ok(Self {
            symbols: symbols.to_vec(),
            ranks,
        })
    }

    /// The full byte alphabet in code-unit order.
    pub fn byte_order() -> Self {
        let mut ranks = [UNRANKED; 256];
        for (rank, slot) in ranks.iter_mut().enumerate() {
            *slot = rank as u16;
        }
        Self {
            symbols: (0..=255).collect(),
            ranks,
        }
    }

    /// Symbols in rank order.
    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn rank(&self, symbol: u8) -> Option<usize> {
        match self.ranks[symbol as usize] {
            UNRANKED => None,
            rank => Some(rank as usize),
        }
    }

    /// Checks that every symbol of `word` is ranked.
    pub fn validate(&self, word: &Word) -> Result<()> {
        self.validate_bytes(word.as_bytes())
    }

    pub(crate) fn validate_bytes(&self, bytes: &[u8]) -> Result<()> {
        match bytes.iter().find(|&&b| self.ranks[b as usize] == UNRANKED) {
            Some(&symbol) => Err(Error::UnrankedSymbol { symbol }),
            None => Ok(()),
        }
    }

    /// Orders two ranked symbols. Callers validate words before entering
    /// comparison loops, so unranked symbols cannot reach this.
    #[inline]
    pub(crate) fn cmp_symbols(&self, a: u8, b: u8, order: Order) -> Ordering {
        let ra = self.ranks[a as usize];
        let rb = self.ranks[b as usize];
        debug_assert!(ra != UNRANKED && rb != UNRANKED);
        match order {
            Order::Standard => ra.cmp(&rb),
            Order::Inverse => rb.cmp(&ra),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks_follow_constructor_order() {
        let alphabet = Alphabet::new(b"bca").unwrap();
        assert_eq!(alphabet.rank(b'b'), Some(0));
        assert_eq!(alphabet.rank(b'c'), Some(1));
        assert_eq!(alphabet.rank(b'a'), Some(2));
        assert_eq!(alphabet.rank(b'z'), None);
    }

    #[test]
    fn duplicate_symbols_rejected() {
        assert_eq!(
            Alphabet::new(b"aba"),
            Err(Error::DuplicateSymbol { symbol: b'a' })
        );
    }

    #[test]
    fn empty_alphabet_rejected() {
        assert_eq!(Alphabet::new(b""), Err(Error::EmptyAlphabet));
    }

    #[test]
    fn inverse_order_flips_every_pair() {
        let alphabet = Alphabet::new(b"abcd").unwrap();
        assert_eq!(
            alphabet.cmp_symbols(b'a', b'd', Order::Standard),
            Ordering::Less
        );
        assert_eq!(
            alphabet.cmp_symbols(b'a', b'd', Order::Inverse),
            Ordering::Greater
        );
        assert_eq!(
            alphabet.cmp_symbols(b'c', b'c', Order::Inverse),
            Ordering::Equal
        );
    }

    #[test]
    fn byte_order_ranks_everything() {
        let alphabet = Alphabet::byte_order();
        assert_eq!(alphabet.len(), 256);
        assert_eq!(alphabet.rank(0x00), Some(0));
        assert_eq!(alphabet.rank(0xff), Some(255));
    }
}

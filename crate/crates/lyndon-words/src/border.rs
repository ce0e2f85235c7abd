use crate::word::Word;

/// Longest proper border lengths for every prefix of a word.
///
/// Entry `i` is the length of the longest border of the prefix ending at
/// position `i` (inclusive): the longest word that is both a proper
/// prefix and a proper suffix of it. This is the classical failure
/// function; borders depend only on symbol equality, never on an order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BorderArray {
    lengths: Vec<usize>,
}

impl BorderArray {
    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    /// Longest proper border of the prefix of the given length.
    pub fn longest(&self, prefix_len: usize) -> usize {
        assert!(prefix_len >= 1 && prefix_len <= self.lengths.len());
        self.lengths[prefix_len - 1]
    }

    /// All nonempty border lengths of the prefix, longest first.
    ///
    /// Every border of a word appears on the chain obtained by repeatedly
    /// taking the longest border, so this walk enumerates them all.
    pub fn chain(&self, prefix_len: usize) -> Vec<usize> {
        let mut lengths = Vec::new();
        let mut len = self.longest(prefix_len);
        while len > 0 {
            lengths.push(len);
            len = self.lengths[len - 1];
        }
        lengths
    }

    /// Terminal element of the border chain of the prefix: its shortest
    /// nonempty border, which is necessarily unbordered.
    pub fn unbordered(&self, prefix_len: usize) -> Option<usize> {
        self.chain(prefix_len).last().copied()
    }

    /// For each prefix, the length of its unbordered nonempty border, or
    /// zero when the prefix itself is unbordered. Shares the chain
    /// structure across prefixes, so the whole table costs one pass.
    pub(crate) fn unbordered_terminals(&self) -> Vec<usize> {
        let mut terminals = vec![0usize; self.lengths.len()];
        for i in 0..self.lengths.len() {
            let border = self.lengths[i];
            if border > 0 {
                let deeper = terminals[border - 1];
                terminals[i] = if deeper == 0 { border } else { deeper };
            }
        }
        terminals
    }
}

/// Computes the border array of `word`.
pub fn border_array(word: &Word) -> BorderArray {
    border_array_bytes(word.as_bytes())
}

pub(crate) fn border_array_bytes(bytes: &[u8]) -> BorderArray {
    let mut lengths = vec![0usize; bytes.len()];
    let mut k = 0usize;
    for i in 1..bytes.len() {
        while k > 0 && bytes[i] != bytes[k] {
            k = lengths[k - 1];
        }
        if bytes[i] == bytes[k] {
            k += 1;
        }
        lengths[i] = k;
    }
    BorderArray { lengths }
}

/// Length of the unique unbordered nonempty border of `word`, or `None`
/// when `word` is unbordered.
pub fn unbordered_border(word: &Word) -> Option<usize> {
    border_array(word).unbordered(word.len())
}

pub(crate) fn is_unbordered_bytes(bytes: &[u8]) -> bool {
    border_array_bytes(bytes).longest(bytes.len()) == 0
}

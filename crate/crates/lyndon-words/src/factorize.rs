use std::cmp::Ordering;

use crate::alphabet::{Alphabet, Order};
use crate::border::border_array_bytes;
use crate::error::{Error, Result};
use crate::factorization::{Factorization, FactorizationKind, Run, RunView};
use crate::recognize::shortest_non_inverse_lyndon_prefix_bytes;
use crate::word::Word;

/// Lyndon factorization of `word` under the chosen order: the unique
/// decomposition into a nonincreasing sequence of Lyndon words.
///
/// Duval's algorithm; linear time, constant auxiliary space beyond the
/// returned cut offsets.
pub fn cfl<'a>(word: &'a Word, alphabet: &Alphabet, order: Order) -> Result<Factorization<'a>> {
    alphabet.validate(word)?;
    let mut cuts = vec![0];
    duval_scan(word.as_bytes(), alphabet, order, |_, end| cuts.push(end));
    let kind = match order {
        Order::Standard => FactorizationKind::Cfl,
        Order::Inverse => FactorizationKind::CflIn,
    };
    Ok(Factorization::from_cuts_unchecked(word, cuts, kind))
}

/// Lyndon factorization under the inverse order; the factors are the
/// anti-Lyndon words of the standard order.
pub fn cfl_in<'a>(word: &'a Word, alphabet: &Alphabet) -> Result<Factorization<'a>> {
    cfl(word, alphabet, Order::Inverse)
}

/// Streaming form of [`cfl`]: hands each factor span to `emit` without
/// allocating anything. Useful when only counts or spans are needed.
pub fn cfl_scan(
    word: &Word,
    alphabet: &Alphabet,
    order: Order,
    emit: impl FnMut(usize, usize),
) -> Result<()> {
    alphabet.validate(word)?;
    duval_scan(word.as_bytes(), alphabet, order, emit);
    Ok(())
}

fn duval_scan(bytes: &[u8], alphabet: &Alphabet, order: Order, mut emit: impl FnMut(usize, usize)) {
    let n = bytes.len();
    let mut i = 0;
    while i < n {
        // Scan the longest prefix of the remaining text that is a
        // sesquipower of a Lyndon word; `j - k` is its period.
        let mut j = i + 1;
        let mut k = i;
        while j < n {
            match alphabet.cmp_symbols(bytes[k], bytes[j], order) {
                Ordering::Equal => k += 1,
                Ordering::Less => k = i,
                Ordering::Greater => break,
            }
            j += 1;
        }
        let len = j - k;
        while i <= k {
            emit(i, i + len);
            i += len;
        }
    }
}

/// The split of the shortest non-inverse-Lyndon prefix `z = p · p̄`.
///
/// `p` is the longest proper prefix of `z` that is inverse Lyndon and
/// `p̄ = r · b` is its bounded right extension: `z = r·a·s·r·b` with
/// `a < b` and `r` the shortest prefix admitting that shape. Offsets are
/// relative to the word the pair was computed from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CanonicalPair {
    p_len: usize,
    pbar_len: usize,
    r_len: usize,
    a: u8,
    b: u8,
}

impl CanonicalPair {
    pub(crate) fn from_parts(p_len: usize, pbar_len: usize, r_len: usize, a: u8, b: u8) -> Self {
        Self {
            p_len,
            pbar_len,
            r_len,
            a,
            b,
        }
    }

    pub fn p_len(&self) -> usize {
        self.p_len
    }

    pub fn pbar_len(&self) -> usize {
        self.pbar_len
    }

    pub fn r_len(&self) -> usize {
        self.r_len
    }

    pub fn z_len(&self) -> usize {
        self.p_len + self.pbar_len
    }

    /// The symbol of `z` following its leading `r` copy.
    pub fn a(&self) -> u8 {
        self.a
    }

    /// The final symbol of `z`; always larger than `a`.
    pub fn b(&self) -> u8 {
        self.b
    }

    pub fn p<'a>(&self, word: &'a Word) -> &'a [u8] {
        &word.as_bytes()[..self.p_len]
    }

    pub fn pbar<'a>(&self, word: &'a Word) -> &'a [u8] {
        &word.as_bytes()[self.p_len..self.z_len()]
    }

    pub fn r<'a>(&self, word: &'a Word) -> &'a [u8] {
        &word.as_bytes()[..self.r_len]
    }

    pub fn z<'a>(&self, word: &'a Word) -> &'a [u8] {
        &word.as_bytes()[..self.z_len()]
    }

    /// The suffix of the word after `p`; never empty.
    pub fn remainder<'a>(&self, word: &'a Word) -> &'a [u8] {
        &word.as_bytes()[self.p_len..]
    }
}

/// Splits the shortest non-inverse-Lyndon prefix of `word` into the
/// canonical pair `(p, p̄)`, or `None` when `word` is inverse Lyndon.
pub fn canonical_pair(word: &Word, alphabet: &Alphabet) -> Result<Option<CanonicalPair>> {
    alphabet.validate(word)?;
    match shortest_non_inverse_lyndon_prefix_bytes(word.as_bytes(), alphabet) {
        None => Ok(None),
        Some(z_len) => canonical_split(&word.as_bytes()[..z_len], alphabet).map(Some),
    }
}

/// Recovers the `(p, p̄)` split of `z`, the shortest non-inverse-Lyndon
/// prefix of some word.
///
/// The trailing `r` of `z = r·a·s·r·b` is both a prefix of `z` and a
/// suffix of `z` minus its last symbol, so the candidates are exactly
/// the borders of that head (plus the empty prefix). Trying them
/// shortest first, the first candidate whose following symbol satisfies
/// `a < b` is the canonical `r`.
pub(crate) fn canonical_split(z: &[u8], alphabet: &Alphabet) -> Result<CanonicalPair> {
    let z_len = z.len();
    debug_assert!(z_len >= 2, "single symbols are inverse Lyndon");
    let b = z[z_len - 1];
    let head = &z[..z_len - 1];
    let mut candidates = border_array_bytes(head).chain(head.len());
    candidates.reverse();
    for r_len in std::iter::once(0).chain(candidates) {
        // Both copies of r plus the two split symbols must fit in z.
        if 2 * r_len + 2 > z_len {
            break;
        }
        let a = z[r_len];
        if alphabet.cmp_symbols(a, b, Order::Standard) == Ordering::Less {
            return Ok(CanonicalPair {
                p_len: z_len - r_len - 1,
                pbar_len: r_len + 1,
                r_len,
                a,
                b,
            });
        }
    }
    Err(Error::Internal(
        "no bounded right extension found for a non-inverse-Lyndon prefix".into(),
    ))
}

/// One peeled canonical pair awaiting its merge decision; `start` is the
/// offset of `p` within the full word.
pub(crate) struct PendingSplit {
    pub start: usize,
    pub pbar_len: usize,
    pub r_len: usize,
}

/// The canonical inverse Lyndon factorization of `word`.
///
/// Factors are inverse Lyndon and consecutive factors differ at a
/// position where the left one is smaller, which makes the
/// factorization unique among inverse Lyndon factorizations.
pub fn icfl<'a>(word: &'a Word, alphabet: &Alphabet) -> Result<Factorization<'a>> {
    alphabet.validate(word)?;
    let cuts = icfl_cuts(word.as_bytes(), alphabet)?;
    Ok(Factorization::from_cuts_unchecked(
        word,
        cuts,
        FactorizationKind::Icfl,
    ))
}

fn icfl_cuts(bytes: &[u8], alphabet: &Alphabet) -> Result<Vec<usize>> {
    // Peel canonical pairs left to right, then resolve the pending
    // merge decisions right to left once the inverse Lyndon tail is
    // known. |p| ≥ |z|/2 bounds the total scanned text by 2|w|.
    let mut pending = Vec::new();
    let mut pos = 0;
    loop {
        let suffix = &bytes[pos..];
        match shortest_non_inverse_lyndon_prefix_bytes(suffix, alphabet) {
            None => break,
            Some(z_len) => {
                let split = canonical_split(&suffix[..z_len], alphabet)?;
                pending.push(PendingSplit {
                    start: pos,
                    pbar_len: split.pbar_len,
                    r_len: split.r_len,
                });
                pos += split.p_len;
            }
        }
    }
    resolve_pending(bytes, &pending, pos)
}

/// Folds peeled pairs into final cuts, deciding for each `p` whether it
/// stands alone or absorbs the first factor after it.
///
/// With `v` the text after `p` and `m` the leading factor of the
/// already-resolved factorization of `v`: `p` stays a factor when
/// `p̄` is a prefix of `m`, and absorbs `m` when `m` is a prefix of `r`.
/// Exactly one case must apply; anything else is reported as an
/// internal error rather than guessed around.
pub(crate) fn resolve_pending(
    bytes: &[u8],
    pending: &[PendingSplit],
    tail_start: usize,
) -> Result<Vec<usize>> {
    let n = bytes.len();
    let mut cuts_rev = vec![n];
    let mut first_start = tail_start;
    let mut first_end = n;
    for split in pending.iter().rev() {
        let pbar = &bytes[first_start..first_start + split.pbar_len];
        let r = &bytes[first_start..first_start + split.r_len];
        let m = &bytes[first_start..first_end];
        let keeps = m.starts_with(pbar);
        let merges = r.starts_with(m);
        match (keeps, merges) {
            (true, false) => {
                cuts_rev.push(first_start);
                first_end = first_start;
                first_start = split.start;
            }
            (false, true) => {
                first_start = split.start;
            }
            (keeps, merges) => {
                return Err(Error::Internal(format!(
                    "merge cases must be exclusive and exhaustive, got keep={keeps} merge={merges}"
                )))
            }
        }
    }
    debug_assert_eq!(first_start, 0);
    cuts_rev.push(0);
    cuts_rev.reverse();
    Ok(cuts_rev)
}

/// Collapses equal consecutive factors into exponent runs.
pub fn run_view<'a>(factorization: &Factorization<'a>) -> RunView<'a> {
    let word_bytes = factorization.word().as_bytes();
    let mut runs: Vec<Run> = Vec::new();
    for index in 0..factorization.factor_count() {
        let (start, end) = factorization.factor_span(index);
        match runs.last_mut() {
            Some(run) if word_bytes[run.start..run.end] == word_bytes[start..end] => {
                run.exponent += 1
            }
            _ => runs.push(Run {
                start,
                end,
                exponent: 1,
            }),
        }
    }
    RunView::new(factorization.word(), runs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn abcd() -> Alphabet {
        Alphabet::new(b"abcd").unwrap()
    }

    #[test]
    fn duval_standard_order() {
        let alphabet = abcd();
        let w = word("ba");
        assert_eq!(
            cfl(&w, &alphabet, Order::Standard)
                .unwrap()
                .factor_strings(),
            ["b", "a"]
        );
        let w = word("aabab");
        assert_eq!(
            cfl(&w, &alphabet, Order::Standard)
                .unwrap()
                .factor_strings(),
            ["aabab"]
        );
        let w = word("abab");
        assert_eq!(
            cfl(&w, &alphabet, Order::Standard)
                .unwrap()
                .factor_strings(),
            ["ab", "ab"]
        );
    }

    #[test]
    fn duval_inverse_order() {
        let alphabet = abcd();
        let w = word("dabadabdabdadac");
        assert_eq!(
            cfl_in(&w, &alphabet).unwrap().factor_strings(),
            ["daba", "dab", "dab", "dadac"]
        );
        let w = word("dabdadacddbdc");
        assert_eq!(
            cfl_in(&w, &alphabet).unwrap().factor_strings(),
            ["dab", "dadac", "ddbdc"]
        );
        let w = word("dabadabdabdabdadac");
        assert_eq!(
            cfl_in(&w, &alphabet).unwrap().factor_strings(),
            ["daba", "dab", "dab", "dab", "dadac"]
        );
        let w = word("babaababaababab");
        assert_eq!(
            cfl(&w, &Alphabet::new(b"ab").unwrap(), Order::Inverse)
                .unwrap()
                .factor_strings(),
            ["babaa", "babaa", "ba", "ba", "b"]
        );
        let w = word("a");
        assert_eq!(cfl_in(&w, &alphabet).unwrap().factor_strings(), ["a"]);
    }

    #[test]
    fn factorizations_validate_their_kind() {
        let alphabet = abcd();
        let w = word("dabadabdabdadac");
        cfl_in(&w, &alphabet).unwrap().validate(&alphabet).unwrap();
        icfl(&w, &alphabet).unwrap().validate(&alphabet).unwrap();
    }

    #[test]
    fn canonical_pair_examples() {
        let ab = Alphabet::new(b"ab").unwrap();

        let w = word("babaaabb");
        let pair = canonical_pair(&w, &ab).unwrap().unwrap();
        assert_eq!(pair.p(&w), b"babaaa");
        assert_eq!(pair.pbar(&w), b"bb");
        assert_eq!(pair.r(&w), b"b");
        assert_eq!((pair.a(), pair.b()), (b'a', b'b'));

        let w = word("babaababaababab");
        let pair = canonical_pair(&w, &ab).unwrap().unwrap();
        assert_eq!(pair.p(&w), b"babaababaa");
        assert_eq!(pair.pbar(&w), b"babab");
        assert_eq!(pair.r(&w), b"baba");

        let w = word("bbababbaa");
        assert_eq!(canonical_pair(&w, &ab).unwrap(), None);
    }

    #[test]
    fn canonical_pair_prefix_facts() {
        // p is inverse Lyndon, p̄ is inverse Lyndon, and z = p·p̄ is the
        // shortest prefix that is not.
        let ab = Alphabet::new(b"ab").unwrap();
        let w = word("babaababaababab");
        let pair = canonical_pair(&w, &ab).unwrap().unwrap();
        let p = Word::new(pair.p(&w)).unwrap();
        let pbar = Word::new(pair.pbar(&w)).unwrap();
        assert!(crate::is_inverse_lyndon(&p, &ab).unwrap());
        assert!(crate::is_inverse_lyndon(&pbar, &ab).unwrap());
        let z = Word::new(pair.z(&w)).unwrap();
        assert!(!crate::is_inverse_lyndon(&z, &ab).unwrap());
    }

    #[test]
    fn icfl_examples() {
        let alphabet = abcd();
        let expect = |text: &str, factors: &[&str]| {
            let w = word(text);
            assert_eq!(
                icfl(&w, &alphabet).unwrap().factor_strings(),
                factors,
                "{text}"
            );
        };
        expect("dabadabdabdadac", &["daba", "dabdab", "dadac"]);
        expect("dabdadacddbdc", &["dab", "dadac", "ddbdc"]);
        expect("dabadabdabdabdadac", &["daba", "dabdabdab", "dadac"]);
        expect("a", &["a"]);

        let ab = Alphabet::new(b"ab").unwrap();
        let w = word("babaababaababab");
        assert_eq!(
            icfl(&w, &ab).unwrap().factor_strings(),
            ["babaababaa", "babab"]
        );
    }

    #[test]
    fn run_view_merges_equal_neighbours() {
        let alphabet = abcd();
        let w = word("dabadabdabdadac");
        let factorization = cfl_in(&w, &alphabet).unwrap();
        let view = run_view(&factorization);
        let described: Vec<(String, usize)> = view
            .runs()
            .iter()
            .map(|run| {
                (
                    String::from_utf8_lossy(view.run_factor(run)).into_owned(),
                    run.exponent,
                )
            })
            .collect();
        assert_eq!(
            described,
            [
                ("daba".to_string(), 1),
                ("dab".to_string(), 2),
                ("dadac".to_string(), 1)
            ]
        );
        let spans = view.expand();
        assert_eq!(
            spans,
            factorization
                .cuts()
                .windows(2)
                .map(|pair| (pair[0], pair[1]))
                .collect::<Vec<_>>()
        );
    }
}

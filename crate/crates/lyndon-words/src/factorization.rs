use std::fmt;

use crate::alphabet::{Alphabet, Order};
use crate::border::{border_array_bytes, is_unbordered_bytes};
use crate::compare::compare_bytes;
use crate::error::{Error, Result};
use crate::recognize::{is_inverse_lyndon_bytes, is_lyndon_bytes};
use crate::word::Word;

/// What family a factorization claims to belong to.
///
/// The kind is advisory metadata carried along for display and
/// validation; [`Factorization::validate`] is the explicit check that
/// the factors actually satisfy the claimed shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FactorizationKind {
    /// Nonincreasing Lyndon factors under the standard order.
    Cfl,
    /// Nonincreasing Lyndon factors under the inverse order.
    CflIn,
    /// The canonical inverse Lyndon factorization.
    Icfl,
    /// Right-to-left unbordered-border decomposition.
    Nb,
    /// No shape claimed beyond covering the word.
    Generic,
}

impl fmt::Display for FactorizationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Self::Cfl => "CFL",
            Self::CflIn => "CFL_in",
            Self::Icfl => "ICFL",
            Self::Nb => "NB",
            Self::Generic => "generic",
        };
        f.write_str(name)
    }
}

/// A factorization of a word into contiguous nonempty factors.
///
/// Only the cut offsets are stored; factor text is sliced out of the
/// borrowed word on demand. `cuts` always starts at `0`, ends at the
/// word length, and increases strictly.
#[derive(Clone)]
pub struct Factorization<'a> {
    word: &'a Word,
    cuts: Vec<usize>,
    kind: FactorizationKind,
}

impl<'a> Factorization<'a> {
    /// Builds a factorization from explicit boundary offsets.
    pub fn from_cuts(word: &'a Word, cuts: Vec<usize>, kind: FactorizationKind) -> Result<Self> {
        let structural = |reason: &str| Error::InvalidFactorization {
            kind,
            reason: reason.to_string(),
        };
        if cuts.first() != Some(&0) {
            return Err(structural("cuts must start at offset 0"));
        }
        if cuts.last() != Some(&word.len()) {
            return Err(structural("cuts must end at the word length"));
        }
        if cuts.windows(2).any(|pair| pair[0] >= pair[1]) {
            return Err(structural("cuts must increase strictly"));
        }
        Ok(Self { word, cuts, kind })
    }

    pub(crate) fn from_cuts_unchecked(
        word: &'a Word,
        cuts: Vec<usize>,
        kind: FactorizationKind,
    ) -> Self {
        debug_assert_eq!(cuts.first(), Some(&0));
        debug_assert_eq!(cuts.last(), Some(&word.len()));
        debug_assert!(cuts.windows(2).all(|pair| pair[0] < pair[1]));
        Self { word, cuts, kind }
    }

    pub fn word(&self) -> &'a Word {
        self.word
    }

    pub fn kind(&self) -> FactorizationKind {
        self.kind
    }

    /// Boundary offsets, including both endpoints.
    pub fn cuts(&self) -> &[usize] {
        &self.cuts
    }

    pub fn factor_count(&self) -> usize {
        self.cuts.len() - 1
    }

    /// Half-open byte span of factor `index`.
    pub fn factor_span(&self, index: usize) -> (usize, usize) {
        (self.cuts[index], self.cuts[index + 1])
    }

    pub fn factor(&self, index: usize) -> &'a [u8] {
        &self.word.as_bytes()[self.cuts[index]..self.cuts[index + 1]]
    }

    pub fn factors(&self) -> impl Iterator<Item = &'a [u8]> + '_ {
        (0..self.factor_count()).map(|index| self.factor(index))
    }

    /// Factor text for display and assertions; non-UTF-8 bytes are
    /// replaced, so use `factors` when exact bytes matter.
    pub fn factor_strings(&self) -> Vec<String> {
        self.factors()
            .map(|factor| String::from_utf8_lossy(factor).into_owned())
            .collect()
    }

    /// Checks the shape the kind claims.
    pub fn validate(&self, alphabet: &Alphabet) -> Result<()> {
        self.validate_shape(self.kind, alphabet)
    }

    /// Checks the shape required by `kind`, ignoring the advisory kind
    /// this factorization carries.
    pub fn validate_shape(&self, kind: FactorizationKind, alphabet: &Alphabet) -> Result<()> {
        alphabet.validate(self.word)?;
        match kind {
            FactorizationKind::Cfl => self.validate_lyndon_chain(kind, alphabet, Order::Standard),
            FactorizationKind::CflIn => self.validate_lyndon_chain(kind, alphabet, Order::Inverse),
            FactorizationKind::Icfl => self.validate_icfl(kind, alphabet),
            FactorizationKind::Nb => self.validate_nb(kind),
            FactorizationKind::Generic => Ok(()),
        }
    }

    fn invalid(&self, kind: FactorizationKind, reason: String) -> Error {
        Error::InvalidFactorization { kind, reason }
    }

    fn validate_lyndon_chain(
        &self,
        kind: FactorizationKind,
        alphabet: &Alphabet,
        order: Order,
    ) -> Result<()> {
        for (index, factor) in self.factors().enumerate() {
            if !is_lyndon_bytes(factor, alphabet, order) {
                return Err(self.invalid(
                    kind,
                    format!(
                        "factor {index} ({:?}) is not Lyndon for this order",
                        String::from_utf8_lossy(factor)
                    ),
                ));
            }
        }
        for index in 1..self.factor_count() {
            let outcome =
                compare_bytes(self.factor(index - 1), self.factor(index), alphabet, order);
            if outcome.is_less() {
                return Err(self.invalid(
                    kind,
                    format!(
                        "factors {} and {index} increase; the sequence must be nonincreasing",
                        index - 1
                    ),
                ));
            }
        }
        Ok(())
    }

    fn validate_icfl(&self, kind: FactorizationKind, alphabet: &Alphabet) -> Result<()> {
        for (index, factor) in self.factors().enumerate() {
            if !is_inverse_lyndon_bytes(factor, alphabet) {
                return Err(self.invalid(
                    kind,
                    format!(
                        "factor {index} ({:?}) is not inverse Lyndon",
                        String::from_utf8_lossy(factor)
                    ),
                ));
            }
        }
        for index in 1..self.factor_count() {
            let outcome = compare_bytes(
                self.factor(index - 1),
                self.factor(index),
                alphabet,
                Order::Standard,
            );
            if !matches!(outcome, crate::ComparisonOutcome::LessStrict) {
                return Err(self.invalid(
                    kind,
                    format!(
                        "factors {} and {index} must differ at a position with the left factor smaller",
                        index - 1
                    ),
                ));
            }
        }
        Ok(())
    }

    fn validate_nb(&self, kind: FactorizationKind) -> Result<()> {
        for (index, factor) in self.factors().enumerate() {
            if !is_unbordered_bytes(factor) {
                return Err(self.invalid(
                    kind,
                    format!(
                        "factor {index} ({:?}) is bordered",
                        String::from_utf8_lossy(factor)
                    ),
                ));
            }
        }
        // Each factor after the first must be the unbordered border of
        // the prefix it terminates; the first must exhaust its prefix.
        let terminals = border_array_bytes(self.word.as_bytes()).unbordered_terminals();
        if terminals[self.cuts[1] - 1] != 0 {
            return Err(self.invalid(
                kind,
                "leading factor does not cover its whole bordered prefix".into(),
            ));
        }
        for index in 1..self.factor_count() {
            let (start, end) = self.factor_span(index);
            if terminals[end - 1] != end - start {
                return Err(self.invalid(
                    kind,
                    format!(
                        "factor {index} is not the unbordered border of the prefix ending at {end}"
                    ),
                ));
            }
        }
        Ok(())
    }
}

/// Equality ignores the advisory kind: two factorizations are equal when
/// they cut the same word at the same offsets.
impl PartialEq for Factorization<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.word.as_bytes() == other.word.as_bytes() && self.cuts == other.cuts
    }
}

impl Eq for Factorization<'_> {}

impl fmt::Debug for Factorization<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.kind)?;
        for (index, factor) in self.factors().enumerate() {
            if index > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", String::from_utf8_lossy(factor))?;
        }
        f.write_str(")")
    }
}

/// One maximal run of equal consecutive factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Run {
    /// Span of the first factor of the run.
    pub start: usize,
    pub end: usize,
    /// How many consecutive copies of that factor the run covers.
    pub exponent: usize,
}

/// A factorization with equal consecutive factors merged into runs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunView<'a> {
    word: &'a Word,
    runs: Vec<Run>,
}

impl<'a> RunView<'a> {
    pub(crate) fn new(word: &'a Word, runs: Vec<Run>) -> Self {
        Self { word, runs }
    }

    pub fn runs(&self) -> &[Run] {
        &self.runs
    }

    pub fn run_factor(&self, run: &Run) -> &'a [u8] {
        &self.word.as_bytes()[run.start..run.end]
    }

    /// Expands the runs back into the original factor spans.
    pub fn expand(&self) -> Vec<(usize, usize)> {
        let mut spans = Vec::new();
        for run in &self.runs {
            let len = run.end - run.start;
            for copy in 0..run.exponent {
                let start = run.start + copy * len;
                spans.push((start, start + len));
            }
        }
        spans
    }
}

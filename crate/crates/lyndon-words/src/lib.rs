//! Lyndon and inverse Lyndon word machinery over ranked byte alphabets.
//!
//! A word is *Lyndon* when it is strictly smaller than every one of its
//! proper suffixes; it is *inverse Lyndon* when every proper suffix is
//! strictly smaller than the word itself. Both notions are taken relative
//! to an [`Alphabet`] that assigns ranks to symbols, and every ordered
//! operation can run under the standard order or its reverse
//! ([`Order::Inverse`]).
//!
//! The crate provides:
//!
//! * recognition: [`is_lyndon`], [`is_inverse_lyndon`],
//!   [`shortest_non_inverse_lyndon_prefix`], border computations;
//! * factorization: [`cfl`] (Duval's algorithm, either order), [`cfl_in`],
//!   the canonical inverse Lyndon factorization [`icfl`] and its building
//!   block [`canonical_pair`];
//! * conversion: [`nb`] (unbordered-border decomposition),
//!   [`cfl_in_from_icfl`], [`pmc_decompose`], [`icfl_of_chain`], and
//!   [`icfl_from_cfl_in`], which translate between the two factorization
//!   families without re-reading the text from scratch;
//! * brute-force reference implementations in [`oracle`], used to
//!   cross-check every fast path, plus the exhaustive property runner in
//!   [`sweep`] and the timing harness in [`bench`].
//!
//! # Quick start
//!
//! ```
//! use lyndon_words::{cfl_in, icfl, Alphabet, Word};
//!
//! let alphabet = Alphabet::new(b"abcd")?;
//! let word: Word = "dabadabdabdadac".parse()?;
//!
//! let standard = cfl_in(&word, &alphabet)?;
//! assert_eq!(standard.factor_strings(), ["daba", "dab", "dab", "dadac"]);
//!
//! let canonical = icfl(&word, &alphabet)?;
//! assert_eq!(canonical.factor_strings(), ["daba", "dabdab", "dadac"]);
//! # Ok::<(), lyndon_words::Error>(())
//! ```
//!
//! Runnable walkthroughs live in `examples/`; each one covers a single
//! capability and can be launched with `cargo run --example <name>`.

mod alphabet;
mod border;
mod compare;
mod convert;
mod error;
mod factorization;
mod factorize;
mod word;

pub mod bench;
pub mod cli;
pub mod oracle;
pub mod sweep;

mod recognize;

pub use alphabet::{Alphabet, Order};
pub use border::{border_array, unbordered_border, BorderArray};
pub use compare::{compare, ComparisonOutcome};
pub use convert::{
    cfl_in_from_icfl, icfl_from_cfl_in, icfl_of_chain, is_grouping, nb, pmc_decompose,
    ChainDecomposition,
};
pub use error::{Error, Result};
pub use factorization::{Factorization, FactorizationKind, Run, RunView};
pub use factorize::{canonical_pair, cfl, cfl_in, cfl_scan, icfl, run_view, CanonicalPair};
pub use recognize::{is_inverse_lyndon, is_lyndon, shortest_non_inverse_lyndon_prefix};
pub use word::Word;

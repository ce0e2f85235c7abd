//! Command-line front end over the library operations.
//!
//! The binary target is a thin wrapper over [`run_from`]; every
//! subcommand body lives here so the whole surface can be exercised
//! in-process. Exit codes follow one contract throughout: 0 success,
//! 1 semantic failure (predicate false, sweep violation, conversion
//! check mismatch), 2 usage or input error.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::alphabet::{Alphabet, Order};
use crate::border::is_unbordered_bytes;
use crate::convert::{cfl_in_from_icfl, icfl_from_cfl_in, nb, pmc_decompose};
use crate::error::Error;
use crate::factorization::Factorization;
use crate::factorize::{canonical_pair, cfl, cfl_in, icfl};
use crate::recognize::{is_inverse_lyndon, is_lyndon};
use crate::sweep;
use crate::word::Word;

pub const EXIT_SUCCESS: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser)]
#[command(
    name = "lyndon-words",
    version,
    about = "Factorization toolkit for Lyndon and inverse Lyndon words"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Factorize words; one space-joined or JSON record per word.
    Factorize {
        /// Factorization to compute.
        #[arg(value_enum)]
        kind: FactorKind,
        #[command(flatten)]
        input: InputArgs,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Convert between the canonical inverse factorization and cfl-in.
    Convert {
        /// Conversion direction.
        #[arg(value_enum)]
        direction: Direction,
        /// Recompute the target directly and exit 1 on mismatch.
        #[arg(long)]
        check: bool,
        #[command(flatten)]
        input: InputArgs,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Evaluate a predicate; exit 1 when it fails for any input word.
    Check {
        /// Predicate to evaluate.
        #[arg(value_enum)]
        predicate: Predicate,
        #[command(flatten)]
        input: InputArgs,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Sweep correctness properties over every word up to a length.
    Verify {
        /// Alphabet size: 2 or 3.
        #[arg(long, default_value_t = 2)]
        alphabet_size: usize,
        /// Maximum word length (at most 16 binary, 10 ternary).
        #[arg(long)]
        max_len: usize,
        /// Comma-separated property names; default runs all of them.
        #[arg(long, value_delimiter = ',')]
        properties: Option<Vec<String>>,
        /// Worker threads.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Time factorizations and conversions on seeded random words.
    Bench {
        /// Comma-separated word sizes, each at least 1.
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        /// Seed; word content is deterministic for a fixed seed.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Symbol order for generated words.
        #[arg(long, default_value = "ab")]
        alphabet: String,
    },
}

#[derive(Args)]
struct InputArgs {
    /// Words given directly as arguments; stdin is read when absent.
    words: Vec<String>,
    /// Read words from a file instead, one per line.
    #[arg(long, conflicts_with = "words")]
    file: Option<PathBuf>,
    /// Symbol order as a literal string, e.g. `abcd` means a<b<c<d.
    /// Defaults to code-unit order.
    #[arg(long)]
    alphabet: Option<String>,
}

impl InputArgs {
    fn alphabet(&self) -> crate::error::Result<Alphabet> {
        match &self.alphabet {
            Some(symbols) => Alphabet::new(symbols.as_bytes()),
            None => Ok(Alphabet::byte_order()),
        }
    }

    fn words(&self) -> std::io::Result<Vec<Vec<u8>>> {
        if let Some(path) = &self.file {
            return Ok(split_lines(std::fs::read(path)?));
        }
        if !self.words.is_empty() {
            return Ok(self
                .words
                .iter()
                .map(|word| word.as_bytes().to_vec())
                .collect());
        }
        let mut bytes = Vec::new();
        std::io::stdin().read_to_end(&mut bytes)?;
        Ok(split_lines(bytes))
    }
}

/// Splits input into words, one per line. Only the line-ending newline
/// is stripped; every other byte is word content.
fn split_lines(mut bytes: Vec<u8>) -> Vec<Vec<u8>> {
    if bytes.last() == Some(&b'\n') {
        bytes.pop();
    }
    if bytes.is_empty() {
        return Vec::new();
    }
    bytes
        .split(|&byte| byte == b'\n')
        .map(<[u8]>::to_vec)
        .collect()
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FactorKind {
    Cfl,
    CflIn,
    Icfl,
    Nb,
}

impl FactorKind {
    fn label(self) -> &'static str {
        match self {
            FactorKind::Cfl => "cfl",
            FactorKind::CflIn => "cfl-in",
            FactorKind::Icfl => "icfl",
            FactorKind::Nb => "nb",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    IcflToCflin,
    CflinToIcfl,
}

impl Direction {
    fn label(self) -> &'static str {
        match self {
            Direction::IcflToCflin => "icfl-to-cflin",
            Direction::CflinToIcfl => "cflin-to-icfl",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Predicate {
    Lyndon,
    AntiLyndon,
    InverseLyndon,
    Unbordered,
}

impl Predicate {
    fn label(self) -> &'static str {
        match self {
            Predicate::Lyndon => "lyndon",
            Predicate::AntiLyndon => "anti-lyndon",
            Predicate::InverseLyndon => "inverse-lyndon",
            Predicate::Unbordered => "unbordered",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// One emitted result row. JSON field order is fixed by the field
/// declaration order; `offsets` re-slices `word` into `factors`.
#[derive(Serialize)]
pub struct OutputRecord {
    pub word: String,
    pub operation: String,
    pub factors: Vec<String>,
    pub offsets: Vec<[usize; 2]>,
    pub extras: Map<String, Value>,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_from<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli, out, err),
        Err(error) => {
            let rendered = error.render();
            if matches!(
                error.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            ) {
                let _ = write!(out, "{rendered}");
                EXIT_SUCCESS
            } else {
                let _ = write!(err, "{rendered}");
                EXIT_USAGE
            }
        }
    }
}

pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match cli.command {
        Command::Factorize {
            kind,
            input,
            format,
        } => match resolve(&input, err) {
            Ok((words, alphabet)) => run_factorize(kind, &words, &alphabet, format, out, err),
            Err(code) => code,
        },
        Command::Convert {
            direction,
            check,
            input,
            format,
        } => match resolve(&input, err) {
            Ok((words, alphabet)) => {
                run_convert(direction, check, &words, &alphabet, format, out, err)
            }
            Err(code) => code,
        },
        Command::Check {
            predicate,
            input,
            format,
        } => match resolve(&input, err) {
            Ok((words, alphabet)) => run_check(predicate, &words, &alphabet, format, out, err),
            Err(code) => code,
        },
        Command::Verify {
            alphabet_size,
            max_len,
            properties,
            jobs,
        } => run_verify(
            alphabet_size,
            max_len,
            properties.as_deref(),
            jobs,
            out,
            err,
        ),
        Command::Bench {
            sizes,
            seed,
            alphabet,
        } => match Alphabet::new(alphabet.as_bytes()) {
            Ok(alphabet) => run_bench(&alphabet, &sizes, seed, out, err),
            Err(error) => usage(err, error),
        },
    }
}

fn resolve(input: &InputArgs, err: &mut dyn Write) -> Result<(Vec<Vec<u8>>, Alphabet), i32> {
    let alphabet = input.alphabet().map_err(|error| usage(err, error))?;
    let words = input.words().map_err(|error| usage(err, error))?;
    Ok((words, alphabet))
}

fn usage(err: &mut dyn Write, error: impl std::fmt::Display) -> i32 {
    let _ = writeln!(err, "error: {error}");
    EXIT_USAGE
}

fn put(out: &mut dyn Write, bytes: &[u8]) -> Result<(), i32> {
    out.write_all(bytes).map_err(|_| EXIT_USAGE)
}

pub fn run_factorize(
    kind: FactorKind,
    words: &[Vec<u8>],
    alphabet: &Alphabet,
    format: Format,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    for bytes in words {
        let word = match parse_word(bytes, alphabet, err) {
            Ok(word) => word,
            Err(code) => return code,
        };
        let factorization = match compute(kind, &word, alphabet) {
            Ok(factorization) => factorization,
            Err(error) => return usage(err, error),
        };
        if let Err(code) = emit(
            &word,
            kind.label(),
            &factorization,
            Map::new(),
            format,
            out,
            err,
        ) {
            return code;
        }
    }
    EXIT_SUCCESS
}

fn compute<'a>(
    kind: FactorKind,
    word: &'a Word,
    alphabet: &Alphabet,
) -> crate::error::Result<Factorization<'a>> {
    match kind {
        FactorKind::Cfl => cfl(word, alphabet, Order::Standard),
        FactorKind::CflIn => cfl_in(word, alphabet),
        FactorKind::Icfl => icfl(word, alphabet),
        FactorKind::Nb => Ok(nb(word)),
    }
}

pub fn run_convert(
    direction: Direction,
    check: bool,
    words: &[Vec<u8>],
    alphabet: &Alphabet,
    format: Format,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    for bytes in words {
        let word = match parse_word(bytes, alphabet, err) {
            Ok(word) => word,
            Err(code) => return code,
        };
        let (target, extras) = match convert_word(direction, check, &word, alphabet) {
            Ok(converted) => converted,
            Err(Failure::Usage(message)) => return usage(err, message),
            Err(Failure::Mismatch(message)) => {
                let _ = writeln!(err, "error: {message}");
                return EXIT_FAILURE;
            }
        };
        if let Err(code) = emit(&word, direction.label(), &target, extras, format, out, err) {
            return code;
        }
    }
    EXIT_SUCCESS
}

enum Failure {
    Usage(String),
    Mismatch(String),
}

fn convert_word<'a>(
    direction: Direction,
    check: bool,
    word: &'a Word,
    alphabet: &Alphabet,
) -> Result<(Factorization<'a>, Map<String, Value>), Failure> {
    let lib = |error: Error| Failure::Usage(error.to_string());
    let mut extras = Map::new();
    let target = match direction {
        Direction::IcflToCflin => {
            let source = icfl(word, alphabet).map_err(lib)?;
            let target = cfl_in_from_icfl(&source, alphabet).map_err(lib)?;
            if check {
                let direct = cfl_in(word, alphabet).map_err(lib)?;
                mismatch(word, &target, &direct)?;
            }
            extras.insert("source_factors".into(), json!(source.factor_strings()));
            extras.insert("source_offsets".into(), json!(spans(&source)));
            target
        }
        Direction::CflinToIcfl => {
            let source = cfl_in(word, alphabet).map_err(lib)?;
            let chains = pmc_decompose(&source, alphabet).map_err(lib)?;
            let target = icfl_from_cfl_in(&source, alphabet).map_err(lib)?;
            if check {
                let direct = icfl(word, alphabet).map_err(lib)?;
                mismatch(word, &target, &direct)?;
            }
            extras.insert("source_factors".into(), json!(source.factor_strings()));
            extras.insert("source_offsets".into(), json!(spans(&source)));
            let ranges: Vec<[usize; 2]> = chains
                .chains()
                .iter()
                .map(|range| [range.start, range.end])
                .collect();
            extras.insert("chains".into(), json!(ranges));
            target
        }
    };
    Ok((target, extras))
}

fn mismatch(
    word: &Word,
    target: &Factorization<'_>,
    direct: &Factorization<'_>,
) -> Result<(), Failure> {
    if target == direct {
        return Ok(());
    }
    Err(Failure::Mismatch(format!(
        "{word}: conversion produced {:?} but the direct factorization is {:?}",
        target.factor_strings(),
        direct.factor_strings()
    )))
}

fn spans(factorization: &Factorization<'_>) -> Vec<[usize; 2]> {
    (0..factorization.factor_count())
        .map(|index| {
            let (start, end) = factorization.factor_span(index);
            [start, end]
        })
        .collect()
}

pub fn run_check(
    predicate: Predicate,
    words: &[Vec<u8>],
    alphabet: &Alphabet,
    format: Format,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let mut all_hold = true;
    for bytes in words {
        let word = match parse_word(bytes, alphabet, err) {
            Ok(word) => word,
            Err(code) => return code,
        };
        let (holds, details) = match evaluate(predicate, &word, alphabet) {
            Ok(outcome) => outcome,
            Err(error) => return usage(err, error),
        };
        all_hold &= holds;
        match format {
            Format::Text => {
                if let Err(code) = put(out, if holds { b"true\n" } else { b"false\n" }) {
                    return code;
                }
            }
            Format::Json => {
                let text = match utf8(word.as_bytes()) {
                    Ok(text) => text,
                    Err(message) => return usage(err, message),
                };
                let mut extras = Map::new();
                extras.insert("holds".into(), Value::Bool(holds));
                extras.extend(details);
                let record = OutputRecord {
                    word: text.to_string(),
                    operation: predicate.label().to_string(),
                    factors: Vec::new(),
                    offsets: Vec::new(),
                    extras,
                };
                let line = serde_json::to_string(&record).expect("records serialize");
                if let Err(code) = put(out, line.as_bytes()).and_then(|()| put(out, b"\n")) {
                    return code;
                }
            }
        }
    }
    if all_hold {
        EXIT_SUCCESS
    } else {
        EXIT_FAILURE
    }
}

fn evaluate(
    predicate: Predicate,
    word: &Word,
    alphabet: &Alphabet,
) -> crate::error::Result<(bool, Map<String, Value>)> {
    let mut details = Map::new();
    let holds = match predicate {
        Predicate::Lyndon => is_lyndon(word, alphabet, Order::Standard)?,
        Predicate::AntiLyndon => is_lyndon(word, alphabet, Order::Inverse)?,
        Predicate::InverseLyndon => {
            let holds = is_inverse_lyndon(word, alphabet)?;
            if !holds {
                if let Some(pair) = canonical_pair(word, alphabet)? {
                    details.insert("violation_length".into(), json!(pair.z_len()));
                    details.insert("p".into(), json!(lossy(pair.p(word))));
                    details.insert("pbar".into(), json!(lossy(pair.pbar(word))));
                    details.insert("r".into(), json!(lossy(pair.r(word))));
                    details.insert("a".into(), json!(lossy(&[pair.a()])));
                    details.insert("b".into(), json!(lossy(&[pair.b()])));
                }
            }
            holds
        }
        Predicate::Unbordered => is_unbordered_bytes(word.as_bytes()),
    };
    Ok((holds, details))
}

pub fn run_verify(
    alphabet_size: usize,
    max_len: usize,
    properties: Option<&[String]>,
    jobs: usize,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let (symbols, limit): (&[u8], usize) = match alphabet_size {
        2 => (b"ab", 16),
        3 => (b"abc", 10),
        _ => return usage(err, "alphabet size must be 2 or 3"),
    };
    if max_len > limit {
        return usage(
            err,
            format!("max length for alphabet size {alphabet_size} is capped at {limit}"),
        );
    }
    if let Some(names) = properties {
        let known = sweep::property_names();
        for name in names {
            if !known.contains(&name.as_str()) {
                return usage(err, format!("unknown property {name}"));
            }
        }
    }
    let alphabet = Alphabet::new(symbols).expect("built-in alphabets are valid");
    let reports = match sweep::run_sweep(&alphabet, max_len, properties, jobs) {
        Ok(reports) => reports,
        Err(error) => return usage(err, error),
    };
    let mut violations = 0;
    for report in &reports {
        let line = format!(
            "{}: {} checked, {} violations\n",
            report.name, report.checked, report.violations
        );
        if let Err(code) = put(out, line.as_bytes()) {
            return code;
        }
        if let Some(counterexample) = &report.first_counterexample {
            let line = format!("  first counterexample: {counterexample}\n");
            if let Err(code) = put(out, line.as_bytes()) {
                return code;
            }
        }
        violations += report.violations;
    }
    if violations == 0 {
        EXIT_SUCCESS
    } else {
        EXIT_FAILURE
    }
}

pub fn run_bench(
    alphabet: &Alphabet,
    sizes: &[usize],
    seed: u64,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    if sizes.is_empty() {
        return usage(err, "at least one size is required");
    }
    if sizes.contains(&0) {
        return usage(err, "sizes must be at least 1");
    }
    let rows = match crate::bench::run_bench(alphabet, sizes, seed) {
        Ok(rows) => rows,
        Err(error) => return usage(err, error),
    };
    for row in &rows {
        let line = format!(
            "{:<14} {:>10} symbols  {:>14} ns  {:>10.3} ns/symbol\n",
            row.operation, row.size, row.total_ns, row.ns_per_symbol
        );
        if let Err(code) = put(out, line.as_bytes()) {
            return code;
        }
    }
    EXIT_SUCCESS
}

fn parse_word(bytes: &[u8], alphabet: &Alphabet, err: &mut dyn Write) -> Result<Word, i32> {
    let word = Word::new(bytes.to_vec()).map_err(|error| usage(err, error))?;
    alphabet
        .validate(&word)
        .map_err(|error| usage(err, error))?;
    Ok(word)
}

fn emit(
    word: &Word,
    operation: &str,
    factorization: &Factorization<'_>,
    extras: Map<String, Value>,
    format: Format,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), i32> {
    match format {
        Format::Text => {
            if factorization.factors().any(|factor| factor.contains(&b' ')) {
                return Err(usage(err, "a factor contains a space; use --format json"));
            }
            for (index, factor) in factorization.factors().enumerate() {
                if index > 0 {
                    put(out, b" ")?;
                }
                put(out, factor)?;
            }
            put(out, b"\n")
        }
        Format::Json => {
            let record = build_record(word, operation, factorization, extras)
                .map_err(|message| usage(err, message))?;
            let line = serde_json::to_string(&record).expect("records serialize");
            put(out, line.as_bytes())?;
            put(out, b"\n")
        }
    }
}

fn build_record(
    word: &Word,
    operation: &str,
    factorization: &Factorization<'_>,
    extras: Map<String, Value>,
) -> Result<OutputRecord, String> {
    let text = utf8(word.as_bytes())?;
    let mut factors = Vec::with_capacity(factorization.factor_count());
    for factor in factorization.factors() {
        factors.push(utf8(factor)?.to_string());
    }
    Ok(OutputRecord {
        word: text.to_string(),
        operation: operation.to_string(),
        factors,
        offsets: spans(factorization),
        extras,
    })
}

fn utf8(bytes: &[u8]) -> Result<&str, String> {
    std::str::from_utf8(bytes)
        .map_err(|_| "JSON output requires UTF-8 words; use text output".to_string())
}

fn lossy(bytes: &[u8]) -> String {
    String::from_utf8_lossy(bytes).into_owned()
}

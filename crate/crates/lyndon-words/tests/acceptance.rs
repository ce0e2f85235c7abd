//! Acceptance gate. One test per criterion; each prints a single
//! PASS/FAIL line with its pinned bound. The tests serialize on a lock
//! so the timed criteria get the machine to themselves.

use std::panic::{catch_unwind, resume_unwind, UnwindSafe};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use lyndon_words::bench::{bench_word, run_bench, scan_memory_delta};
use lyndon_words::sweep::{run_sweep, SweepReport};
use lyndon_words::{canonical_pair, cfl_in, icfl, nb, pmc_decompose, Alphabet, Word};

static GATE: Mutex<()> = Mutex::new(());

fn locked(name: &str, body: impl FnOnce() + UnwindSafe) {
    let _guard = GATE.lock().unwrap_or_else(|poisoned| poisoned.into_inner());
    let started = Instant::now();
    let outcome = catch_unwind(body);
    let elapsed = started.elapsed();
    let status = if outcome.is_ok() { "PASS" } else { "FAIL" };
    println!("{name}: {status} ({elapsed:.2?})");
    if let Err(panic) = outcome {
        resume_unwind(panic);
    }
}

fn word(text: &str) -> Word {
    text.parse().unwrap()
}

fn alphabet(symbols: &str) -> Alphabet {
    Alphabet::new(symbols.as_bytes()).unwrap()
}

fn sweep(alphabet: &Alphabet, max_len: usize, names: &[&str]) -> Vec<SweepReport> {
    let filter: Vec<String> = names.iter().map(|name| (*name).to_string()).collect();
    run_sweep(alphabet, max_len, Some(&filter), 1).expect("sweep runs")
}

fn assert_clean(reports: &[SweepReport], expected_runs: usize) {
    assert_eq!(reports.len(), expected_runs, "a property filter missed");
    for report in reports {
        assert_eq!(
            report.violations, 0,
            "{}: {} violations, first: {:?}",
            report.name, report.violations, report.first_counterexample
        );
        assert!(report.checked > 0, "{} never ran", report.name);
    }
}

#[test]
fn criterion_1_golden_examples() {
    locked("criterion 1: golden examples, runtime < 1 s", || {
        let started = Instant::now();
        let abcd = alphabet("abcd");
        let ab = alphabet("ab");

        let w = word("dabadabdabdadac");
        assert_eq!(
            cfl_in(&w, &abcd).unwrap().factor_strings(),
            ["daba", "dab", "dab", "dadac"]
        );
        assert_eq!(
            icfl(&w, &abcd).unwrap().factor_strings(),
            ["daba", "dabdab", "dadac"]
        );

        let w = word("dabdadacddbdc");
        assert_eq!(
            icfl(&w, &abcd).unwrap().factor_strings(),
            ["dab", "dadac", "ddbdc"]
        );

        let w = word("dabadabdabdabdadac");
        assert_eq!(
            cfl_in(&w, &abcd).unwrap().factor_strings(),
            ["daba", "dab", "dab", "dab", "dadac"]
        );
        assert_eq!(
            icfl(&w, &abcd).unwrap().factor_strings(),
            ["daba", "dabdabdab", "dadac"]
        );

        let w = word("babaaabb");
        let pair = canonical_pair(&w, &ab)
            .unwrap()
            .expect("not inverse Lyndon");
        assert_eq!(pair.p(&w), b"babaaa");
        assert_eq!(pair.pbar(&w), b"bb");

        let w = word("babaababaababab");
        let pair = canonical_pair(&w, &ab)
            .unwrap()
            .expect("not inverse Lyndon");
        assert_eq!(pair.p(&w), b"babaababaa");
        assert_eq!(pair.pbar(&w), b"babab");
        assert_eq!(pair.r(&w), b"baba");

        let w = word("dabadabdabdadac");
        let base = cfl_in(&w, &abcd).unwrap();
        let chains = pmc_decompose(&base, &abcd).unwrap();
        assert_eq!(chains.chains(), [0..3, 3..4]);
        assert_eq!(chains.offset_span(&base, 0), (0, 10));
        assert_eq!(chains.offset_span(&base, 1), (10, 15));

        assert_eq!(nb(&word("daba")).factor_strings(), ["daba"]);
        assert_eq!(nb(&word("dabdab")).factor_strings(), ["dab", "dab"]);
        assert_eq!(nb(&word("dadac")).factor_strings(), ["dadac"]);
        assert_eq!(
            nb(&word("dabdabdab")).factor_strings(),
            ["dab", "dab", "dab"]
        );
        assert_eq!(
            nb(&word("dabadabdabdadac")).factor_strings(),
            ["dabadabdabdadac"]
        );

        assert!(
            started.elapsed() < Duration::from_secs(1),
            "golden examples took {:?}",
            started.elapsed()
        );
    });
}

#[test]
fn criterion_2_oracle_equivalence() {
    locked(
        "criterion 2: fast = naive over binary len <= 16 and ternary len <= 10, <= 5 min",
        || {
            let started = Instant::now();
            let names = [
                "recognizers-agree-lyndon",
                "recognizers-agree-inverse-lyndon",
                "duval-agrees-standard",
                "duval-agrees-inverse",
                "canonical-pair-agrees",
                "icfl-agrees",
            ];
            let binary = sweep(&alphabet("ab"), 16, &names);
            assert_clean(&binary, names.len());
            for report in &binary {
                assert_eq!(report.checked, 131_070, "{}", report.name);
            }
            let ternary = sweep(&alphabet("abc"), 10, &names);
            assert_clean(&ternary, names.len());
            for report in &ternary {
                assert_eq!(report.checked, 88_572, "{}", report.name);
            }
            assert!(
                started.elapsed() <= Duration::from_secs(300),
                "sweeps took {:?}",
                started.elapsed()
            );
        },
    );
}

#[test]
fn criterion_3_round_trip_theorems() {
    locked(
        "criterion 3: conversion round trips over binary len <= 16 and ternary len <= 10",
        || {
            let names = ["icfl-to-cfl-in-round-trip", "cfl-in-to-icfl-round-trip"];
            let binary = sweep(&alphabet("ab"), 16, &names);
            assert_clean(&binary, names.len());
            for report in &binary {
                assert_eq!(report.checked, 131_070, "{}", report.name);
            }
            let ternary = sweep(&alphabet("abc"), 10, &names);
            assert_clean(&ternary, names.len());
            for report in &ternary {
                assert_eq!(report.checked, 88_572, "{}", report.name);
            }
        },
    );
}

#[test]
fn criterion_4_grouping_theorems() {
    locked(
        "criterion 4: grouping theorems over binary len <= 12, <= 5 min",
        || {
            let started = Instant::now();
            let names = [
                "icfl-is-a-grouping",
                "groupings-project-to-cfl-in",
                "inverse-lyndon-unique-grouping",
            ];
            let binary = sweep(&alphabet("ab"), 12, &names);
            assert_clean(&binary, names.len());
            for report in &binary {
                assert_eq!(report.checked, 8_190, "{}", report.name);
            }
            assert!(
                started.elapsed() <= Duration::from_secs(300),
                "sweep took {:?}",
                started.elapsed()
            );
        },
    );
}

#[test]
fn criterion_5_structural_invariants() {
    locked(
        "criterion 5: structural invariants over binary len <= 16 and ternary len <= 10",
        || {
            let names = [
                "lyndon-factors-unbordered",
                "unbordered-border-unique",
                "anti-lyndon-characterization",
                "recognizers-agree-inverse-lyndon",
                "shortest-violation-agrees",
            ];
            let binary = sweep(&alphabet("ab"), 16, &names);
            assert_clean(&binary, names.len());
            let ternary = sweep(&alphabet("abc"), 10, &names);
            assert_clean(&ternary, names.len());
        },
    );
}

#[test]
fn criterion_6_performance() {
    locked(
        "criterion 6: per-symbol ratio <= 2 across adjacent decades, O(1) scan memory, <= 1 min",
        || {
            let started = Instant::now();
            let ab = alphabet("ab");
            let sizes = [100_000, 1_000_000, 10_000_000];
            let rows = run_bench(&ab, &sizes, 7).expect("bench runs");
            for operation in ["cfl", "cfl-in"] {
                let per_symbol: Vec<f64> = rows
                    .iter()
                    .filter(|row| row.operation == operation)
                    .map(|row| row.ns_per_symbol)
                    .collect();
                assert_eq!(per_symbol.len(), sizes.len());
                for pair in per_symbol.windows(2) {
                    let ratio = pair[1] / pair[0];
                    assert!(
                        ratio <= 2.0,
                        "{operation}: adjacent decade ratio {ratio:.3} from {per_symbol:?}"
                    );
                }
            }

            let big = bench_word(&ab, 10_000_000, 7, 2).unwrap();
            let delta = scan_memory_delta(&big, &ab).expect("scan runs");
            const SLACK: u64 = 16 * 1024 * 1024;
            assert!(
                delta.is_none_or(|bytes| bytes <= SLACK),
                "streaming scan grew resident memory by {delta:?} bytes"
            );

            assert!(
                started.elapsed() <= Duration::from_secs(60),
                "bench took {:?}",
                started.elapsed()
            );
        },
    );
}

//! Exhaustive property sweeps over enumerated word sets.
//!
//! Each property compares a fast implementation against its reference
//! oracle or checks a structural theorem, word by word. The registry is
//! what `verify` runs; the acceptance suite drives it with pinned
//! bounds. Properties whose cost is exponential carry a length cap and
//! simply skip longer words.

use std::collections::HashSet;

use crate::alphabet::{Alphabet, Order};
use crate::border::unbordered_border;
use crate::convert::{cfl_in_from_icfl, icfl_from_cfl_in, is_grouping, nb};
use crate::error::Result;
use crate::factorization::{Factorization, FactorizationKind};
use crate::factorize::{canonical_pair, cfl, cfl_in, icfl};
use crate::oracle;
use crate::recognize::{is_inverse_lyndon, is_lyndon, shortest_non_inverse_lyndon_prefix};
use crate::word::Word;

type CheckResult = std::result::Result<(), String>;
type Check = fn(&Word, &Alphabet) -> CheckResult;

/// One named sweep property. `cap` bounds the word length the check is
/// run at; longer words are skipped, not failed.
pub struct Property {
    pub name: &'static str,
    pub cap: Option<usize>,
    check: Check,
}

/// Length cap for the properties that enumerate factorization sets.
const ENUMERATION_CAP: usize = 12;

const PROPERTIES: &[Property] = &[
    Property {
        name: "recognizers-agree-lyndon",
        cap: None,
        check: recognizers_agree_lyndon,
    },
    Property {
        name: "recognizers-agree-inverse-lyndon",
        cap: None,
        check: recognizers_agree_inverse_lyndon,
    },
    Property {
        name: "shortest-violation-agrees",
        cap: None,
        check: shortest_violation_agrees,
    },
    Property {
        name: "duval-agrees-standard",
        cap: None,
        check: duval_agrees_standard,
    },
    Property {
        name: "duval-agrees-inverse",
        cap: None,
        check: duval_agrees_inverse,
    },
    Property {
        name: "canonical-pair-agrees",
        cap: None,
        check: canonical_pair_agrees,
    },
    Property {
        name: "icfl-agrees",
        cap: None,
        check: icfl_agrees,
    },
    Property {
        name: "factorizations-validate",
        cap: None,
        check: factorizations_validate,
    },
    Property {
        name: "icfl-to-cfl-in-round-trip",
        cap: None,
        check: icfl_to_cfl_in_round_trip,
    },
    Property {
        name: "cfl-in-to-icfl-round-trip",
        cap: None,
        check: cfl_in_to_icfl_round_trip,
    },
    Property {
        name: "lyndon-factors-unbordered",
        cap: None,
        check: lyndon_factors_unbordered,
    },
    Property {
        name: "unbordered-border-unique",
        cap: None,
        check: unbordered_border_unique,
    },
    Property {
        name: "anti-lyndon-characterization",
        cap: None,
        check: anti_lyndon_characterization,
    },
    Property {
        name: "icfl-among-enumerated-factorizations",
        cap: Some(ENUMERATION_CAP),
        check: icfl_among_enumerated_factorizations,
    },
    Property {
        name: "icfl-is-a-grouping",
        cap: Some(ENUMERATION_CAP),
        check: icfl_is_a_grouping,
    },
    Property {
        name: "groupings-project-to-cfl-in",
        cap: Some(ENUMERATION_CAP),
        check: groupings_project_to_cfl_in,
    },
    Property {
        name: "grouping-membership-matches-enumeration",
        cap: Some(ENUMERATION_CAP),
        check: grouping_membership_matches_enumeration,
    },
    Property {
        name: "inverse-lyndon-unique-grouping",
        cap: Some(ENUMERATION_CAP),
        check: inverse_lyndon_unique_grouping,
    },
];

pub fn properties() -> &'static [Property] {
    PROPERTIES
}

pub fn property_names() -> Vec<&'static str> {
    PROPERTIES.iter().map(|property| property.name).collect()
}

/// Result of sweeping one property over the word stream.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepReport {
    pub name: &'static str,
    pub checked: u64,
    pub violations: u64,
    pub first_counterexample: Option<String>,
}

#[derive(Clone)]
struct Accumulator {
    checked: u64,
    violations: u64,
    first: Option<(u64, String)>,
}

impl Accumulator {
    fn new() -> Self {
        Self {
            checked: 0,
            violations: 0,
            first: None,
        }
    }

    fn record(&mut self, index: u64, outcome: CheckResult, word: &Word) {
        self.checked += 1;
        if let Err(detail) = outcome {
            self.violations += 1;
            let keep = match &self.first {
                Some((existing, _)) => index < *existing,
                None => true,
            };
            if keep {
                self.first = Some((index, format!("{word}: {detail}")));
            }
        }
    }

    fn merge(&mut self, other: Accumulator) {
        self.checked += other.checked;
        self.violations += other.violations;
        if let Some((index, detail)) = other.first {
            let keep = match &self.first {
                Some((existing, _)) => index < *existing,
                None => true,
            };
            if keep {
                self.first = Some((index, detail));
            }
        }
    }
}

/// Runs every property (or the named subset) over all words up to
/// `max_len`, sharded over `jobs` worker threads.
pub fn run_sweep(
    alphabet: &Alphabet,
    max_len: usize,
    filter: Option<&[String]>,
    jobs: usize,
) -> Result<Vec<SweepReport>> {
    let active: Vec<&Property> = PROPERTIES
        .iter()
        .filter(|property| match filter {
            Some(names) => names.iter().any(|name| name == property.name),
            None => true,
        })
        .collect();
    let jobs = jobs.max(1);

    let merged = if jobs == 1 {
        sweep_shard(alphabet, max_len, &active, 0, 1)
    } else {
        std::thread::scope(|scope| {
            let workers: Vec<_> = (0..jobs)
                .map(|worker| {
                    let active = &active;
                    scope.spawn(move || sweep_shard(alphabet, max_len, active, worker, jobs))
                })
                .collect();
            let mut merged = vec![Accumulator::new(); active.len()];
            for worker in workers {
                let local = worker.join().expect("sweep worker panicked");
                for (slot, accumulator) in local.into_iter().enumerate() {
                    merged[slot].merge(accumulator);
                }
            }
            merged
        })
    };

    Ok(active
        .iter()
        .zip(merged)
        .map(|(property, accumulator)| SweepReport {
            name: property.name,
            checked: accumulator.checked,
            violations: accumulator.violations,
            first_counterexample: accumulator.first.map(|(_, detail)| detail),
        })
        .collect())
}

fn sweep_shard(
    alphabet: &Alphabet,
    max_len: usize,
    active: &[&Property],
    worker: usize,
    jobs: usize,
) -> Vec<Accumulator> {
    let mut accumulators = vec![Accumulator::new(); active.len()];
    for (index, word) in oracle::words(alphabet, max_len).enumerate() {
        if index % jobs != worker {
            continue;
        }
        for (slot, property) in active.iter().enumerate() {
            if property.cap.is_some_and(|cap| word.len() > cap) {
                continue;
            }
            let outcome = (property.check)(&word, alphabet);
            accumulators[slot].record(index as u64, outcome, &word);
        }
    }
    accumulators
}

fn lib<T>(result: Result<T>) -> std::result::Result<T, String> {
    result.map_err(|error| format!("library error: {error}"))
}

fn border_lengths_naive(bytes: &[u8]) -> Vec<usize> {
    (1..bytes.len())
        .filter(|&len| bytes[..len] == bytes[bytes.len() - len..])
        .collect()
}

fn is_unbordered_naive(bytes: &[u8]) -> bool {
    border_lengths_naive(bytes).is_empty()
}

fn recognizers_agree_lyndon(word: &Word, alphabet: &Alphabet) -> CheckResult {
    for order in [Order::Standard, Order::Inverse] {
        let fast = lib(is_lyndon(word, alphabet, order))?;
        let naive = lib(oracle::is_lyndon_naive(word, alphabet, order))?;
        if fast != naive {
            return Err(format!(
                "{order:?} order: scan says {fast}, oracle says {naive}"
            ));
        }
    }
    Ok(())
}

fn recognizers_agree_inverse_lyndon(word: &Word, alphabet: &Alphabet) -> CheckResult {
    let fast = lib(is_inverse_lyndon(word, alphabet))?;
    let naive = lib(oracle::is_inverse_lyndon_naive(word, alphabet))?;
    if fast != naive {
        return Err(format!("scan says {fast}, oracle says {naive}"));
    }
    Ok(())
}

fn shortest_violation_agrees(word: &Word, alphabet: &Alphabet) -> CheckResult {
    let fast = lib(shortest_non_inverse_lyndon_prefix(word, alphabet))?;
    let bytes = word.as_bytes();
    let mut naive = None;
    for len in 1..=bytes.len() {
        let prefix = Word::new(&bytes[..len]).expect("prefix lengths start at 1");
        if !lib(oracle::is_inverse_lyndon_naive(&prefix, alphabet))? {
            naive = Some(len);
            break;
        }
    }
    if fast != naive {
        return Err(format!("scan says {fast:?}, oracle says {naive:?}"));
    }
    Ok(())
}

fn duval_agrees_standard(word: &Word, alphabet: &Alphabet) -> CheckResult {
    let fast = lib(cfl(word, alphabet, Order::Standard))?;
    let naive = lib(oracle::cfl_naive(word, alphabet, Order::Standard))?;
    if fast != naive {
        return Err(format!(
            "scan {:?}, oracle {:?}",
            fast.factor_strings(),
            naive.factor_strings()
        ));
    }
    Ok(())
}

fn duval_agrees_inverse(word: &Word, alphabet: &Alphabet) -> CheckResult {
    let fast = lib(cfl_in(word, alphabet))?;
    let naive = lib(oracle::cfl_naive(word, alphabet, Order::Inverse))?;
    if fast != naive {
        return Err(format!(
            "scan {:?}, oracle {:?}",
            fast.factor_strings(),
            naive.factor_strings()
        ));
    }
    Ok(())
}

fn canonical_pair_agrees(word: &Word, alphabet: &Alphabet) -> CheckResult {
    let fast = lib(canonical_pair(word, alphabet))?;
    let naive = lib(oracle::canonical_pair_naive(word, alphabet))?;
    if fast != naive {
        return Err(format!("scan {fast:?}, oracle {naive:?}"));
    }
    Ok(())
}

fn icfl_agrees(word: &Word, alphabet: &Alphabet) -> CheckResult {
    let fast = lib(icfl(word, alphabet))?;
    let naive = lib(oracle::icfl_naive(word, alphabet))?;
    if fast != naive {
        return Err(format!(
            "scan {:?}, oracle {:?}",
            fast.factor_strings(),
            naive.factor_strings()
        ));
    }
    Ok(())
}

fn factorizations_validate(word: &Word, alphabet: &Alphabet) -> CheckResult {
    lib(lib(cfl(word, alphabet, Order::Standard))?.validate(alphabet))?;
    lib(lib(cfl_in(word, alphabet))?.validate(alphabet))?;
    lib(lib(icfl(word, alphabet))?.validate(alphabet))?;
    lib(nb(word).validate(alphabet))?;
    Ok(())
}

fn icfl_to_cfl_in_round_trip(word: &Word, alphabet: &Alphabet) -> CheckResult {
    let canonical = lib(icfl(word, alphabet))?;
    let converted = lib(cfl_in_from_icfl(&canonical, alphabet))?;
    let direct = lib(cfl_in(word, alphabet))?;
    if converted != direct {
        return Err(format!(
            "converted {:?}, direct {:?}",
            converted.factor_strings(),
            direct.factor_strings()
        ));
    }
    Ok(())
}

fn cfl_in_to_icfl_round_trip(word: &Word, alphabet: &Alphabet) -> CheckResult {
    let base = lib(cfl_in(word, alphabet))?;
    let converted = lib(icfl_from_cfl_in(&base, alphabet))?;
    let direct = lib(icfl(word, alphabet))?;
    if converted != direct {
        return Err(format!(
            "converted {:?}, direct {:?}",
            converted.factor_strings(),
            direct.factor_strings()
        ));
    }
    Ok(())
}

fn lyndon_factors_unbordered(word: &Word, alphabet: &Alphabet) -> CheckResult {
    for order in [Order::Standard, Order::Inverse] {
        let factorization = lib(cfl(word, alphabet, order))?;
        for factor in factorization.factors() {
            if !is_unbordered_naive(factor) {
                return Err(format!(
                    "{order:?} factor {:?} is bordered",
                    String::from_utf8_lossy(factor)
                ));
            }
        }
    }
    Ok(())
}

fn unbordered_border_unique(word: &Word, _alphabet: &Alphabet) -> CheckResult {
    let bytes = word.as_bytes();
    let borders = border_lengths_naive(bytes);
    let unbordered: Vec<usize> = borders
        .iter()
        .copied()
        .filter(|&len| is_unbordered_naive(&bytes[..len]))
        .collect();
    let fast = unbordered_border(word);
    match (&unbordered[..], fast, borders.is_empty()) {
        ([], None, true) => Ok(()),
        ([only], Some(length), false) if only == &length => Ok(()),
        _ => Err(format!(
            "naive unbordered borders {unbordered:?}, scan {fast:?}"
        )),
    }
}

fn anti_lyndon_characterization(word: &Word, alphabet: &Alphabet) -> CheckResult {
    let anti_lyndon = lib(is_lyndon(word, alphabet, Order::Inverse))?;
    let unbordered = is_unbordered_naive(word.as_bytes());
    let inverse_lyndon = lib(is_inverse_lyndon(word, alphabet))?;
    if anti_lyndon != (unbordered && inverse_lyndon) {
        return Err(format!(
            "anti-Lyndon {anti_lyndon}, unbordered {unbordered}, inverse Lyndon {inverse_lyndon}"
        ));
    }
    Ok(())
}

fn icfl_among_enumerated_factorizations(word: &Word, alphabet: &Alphabet) -> CheckResult {
    let canonical = lib(icfl(word, alphabet))?;
    let all = lib(oracle::enumerate_inverse_lyndon_factorizations(
        word, alphabet,
    ))?;
    if !all.iter().any(|candidate| candidate == &canonical) {
        return Err(format!(
            "{:?} missing from the {} enumerated factorizations",
            canonical.factor_strings(),
            all.len()
        ));
    }
    Ok(())
}

fn icfl_is_a_grouping(word: &Word, alphabet: &Alphabet) -> CheckResult {
    let canonical = lib(icfl(word, alphabet))?;
    let base = lib(cfl_in(word, alphabet))?;
    let groupings = lib(oracle::enumerate_groupings(&base, alphabet))?;
    if !groupings.iter().any(|candidate| candidate == &canonical) {
        return Err(format!(
            "{:?} missing from the {} enumerated groupings",
            canonical.factor_strings(),
            groupings.len()
        ));
    }
    if !lib(is_grouping(&canonical, &base, alphabet))? {
        return Err("membership test rejects the canonical factorization".into());
    }
    Ok(())
}

fn groupings_project_to_cfl_in(word: &Word, alphabet: &Alphabet) -> CheckResult {
    let base = lib(cfl_in(word, alphabet))?;
    let groupings = lib(oracle::enumerate_groupings(&base, alphabet))?;
    for grouping in &groupings {
        let mut stitched = vec![0];
        for index in 0..grouping.factor_count() {
            let (start, _) = grouping.factor_span(index);
            let factor = Word::new(grouping.factor(index)).expect("factors are nonempty");
            let stripped = nb(&factor);
            let direct = lib(cfl_in(&factor, alphabet))?;
            if stripped.cuts() != direct.cuts() {
                return Err(format!(
                    "factor {factor}: border stripping {:?}, factorization {:?}",
                    stripped.factor_strings(),
                    direct.factor_strings()
                ));
            }
            stitched.extend(stripped.cuts()[1..].iter().map(|cut| cut + start));
        }
        if stitched != base.cuts() {
            return Err(format!(
                "grouping {:?} restitches to {stitched:?}, expected {:?}",
                grouping.factor_strings(),
                base.cuts()
            ));
        }
    }
    Ok(())
}

fn grouping_membership_matches_enumeration(word: &Word, alphabet: &Alphabet) -> CheckResult {
    let base = lib(cfl_in(word, alphabet))?;
    let enumerated: HashSet<Vec<usize>> = lib(oracle::enumerate_groupings(&base, alphabet))?
        .iter()
        .map(|grouping| grouping.cuts().to_vec())
        .collect();
    let n = word.len();
    for mask in 0u32..(1 << (n - 1)) {
        let mut cuts = Vec::with_capacity(n + 1);
        cuts.push(0);
        for position in 1..n {
            if mask & (1 << (position - 1)) != 0 {
                cuts.push(position);
            }
        }
        cuts.push(n);
        let candidate = lib(Factorization::from_cuts(
            word,
            cuts,
            FactorizationKind::Generic,
        ))?;
        let member = lib(is_grouping(&candidate, &base, alphabet))?;
        let listed = enumerated.contains(candidate.cuts());
        if member != listed {
            return Err(format!(
                "cuts {:?}: membership test says {member}, enumeration says {listed}",
                candidate.cuts()
            ));
        }
    }
    Ok(())
}

fn inverse_lyndon_unique_grouping(word: &Word, alphabet: &Alphabet) -> CheckResult {
    if !lib(is_inverse_lyndon(word, alphabet))? {
        return Ok(());
    }
    let base = lib(cfl_in(word, alphabet))?;
    let groupings = lib(oracle::enumerate_groupings(&base, alphabet))?;
    let whole = [0, word.len()];
    if groupings.len() != 1 || groupings[0].cuts() != whole {
        return Err(format!(
            "expected the single grouping {whole:?}, found {} groupings",
            groupings.len()
        ));
    }
    Ok(())
}

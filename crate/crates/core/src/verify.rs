//! Independent checkers for candidate lists.
//!
//! Nothing here calls into the constructions: the oracle set is produced by
//! plain enumeration of all `q^n` strings, and every other check only looks
//! at the list it is given. Lists may come from anywhere, including files
//! read by the command-line tool.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::budget::Budget;
use crate::counting::count_qary;
use crate::error::{Error, Result};
use crate::string::{hamming_unchecked, trace_about, CodeList, QaryString, Symbol};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FindingKind {
    Adjacency,
    Avoidance,
    Duplicate,
    Missing,
    Surplus,
    TracePartition,
    CollapseMismatch,
    CountMismatch,
}

impl FindingKind {
    pub fn name(self) -> &'static str {
        match self {
            FindingKind::Adjacency => "adjacency",
            FindingKind::Avoidance => "avoidance",
            FindingKind::Duplicate => "duplicate",
            FindingKind::Missing => "missing",
            FindingKind::Surplus => "surplus",
            FindingKind::TracePartition => "trace-partition",
            FindingKind::CollapseMismatch => "collapse-mismatch",
            FindingKind::CountMismatch => "count-mismatch",
        }
    }
}

impl fmt::Display for FindingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One violated property.
///
/// `indices` are positions in the checked list; adjacency findings carry
/// the pair `i, i+1`, and findings about strings absent from the list
/// carry no index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Finding {
    pub kind: FindingKind,
    pub indices: Vec<usize>,
    pub strings: Vec<QaryString>,
    pub detail: String,
}

impl fmt::Display for Finding {
    /// `kind<TAB>indices<TAB>detail`, with `-` for an empty index list.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let indices = if self.indices.is_empty() {
            "-".to_string()
        } else {
            self.indices
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "{}\t{}\t{}", self.kind, indices, self.detail)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub violations: Vec<Finding>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.violations.extend(other.violations);
    }

    pub fn count(&self, kind: FindingKind) -> usize {
        self.violations.iter().filter(|f| f.kind == kind).count()
    }

    pub fn of_kind(&self, kind: FindingKind) -> impl Iterator<Item = &Finding> {
        self.violations.iter().filter(move |f| f.kind == kind)
    }

    fn push(
        &mut self,
        kind: FindingKind,
        indices: Vec<usize>,
        strings: Vec<QaryString>,
        detail: String,
    ) {
        self.violations.push(Finding {
            kind,
            indices,
            strings,
            detail,
        });
    }

    fn sort(&mut self) {
        self.violations.sort_by(|a, b| {
            let key = |f: &Finding| f.indices.first().copied().unwrap_or(usize::MAX);
            key(a).cmp(&key(b)).then(a.kind.cmp(&b.kind))
        });
    }
}

/// Every length-`n` string over `q` symbols with no run of `k` copies of
/// `forbidden`, by direct enumeration.
pub fn brute_force_set(
    n: usize,
    q: u32,
    k: usize,
    forbidden: Symbol,
) -> Result<HashSet<QaryString>> {
    brute_force_set_within(n, q, k, forbidden, Budget::default())
}

pub fn brute_force_set_within(
    n: usize,
    q: u32,
    k: usize,
    forbidden: Symbol,
    budget: Budget,
) -> Result<HashSet<QaryString>> {
    check_params(q, k, forbidden)?;
    budget.check_power(q, n)?;
    let mut set = HashSet::new();
    let mut digits = vec![0; n];
    loop {
        let s = QaryString::from_raw(digits.clone(), q);
        if !s.contains_run(forbidden, k) {
            set.insert(s);
        }
        // odometer increment, least significant digit last
        let mut pos = n;
        loop {
            if pos == 0 {
                return Ok(set);
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < q {
                break;
            }
            digits[pos] = 0;
        }
    }
}

fn check_params(q: u32, k: usize, forbidden: Symbol) -> Result<()> {
    if q < 2 {
        return Err(Error::InvalidAlphabet(q));
    }
    if k < 2 {
        return Err(Error::InvalidRunBound(k));
    }
    if forbidden >= q {
        return Err(Error::SymbolOutOfRange {
            symbol: forbidden,
            q,
        });
    }
    Ok(())
}

/// Reports every consecutive pair whose Hamming distance is not 1.
///
/// Lists of length 0 or 1 pass. Mixed string lengths cannot occur since
/// [`CodeList`] rejects them on construction.
pub fn check_gray(list: &CodeList) -> VerificationReport {
    let mut report = VerificationReport::default();
    for (i, w) in list.entries().windows(2).enumerate() {
        let d = hamming_unchecked(w[0].symbols(), w[1].symbols());
        if d != 1 {
            report.push(
                FindingKind::Adjacency,
                vec![i, i + 1],
                vec![w[0].clone(), w[1].clone()],
                format!("{} -> {} d_H={}", w[0], w[1], d),
            );
        }
    }
    report
}

/// Checks that `list` is a permutation of the oracle set for
/// `(n, q, k, forbidden)` and that its length matches `f_{n,q}^(k)`.
pub fn check_complete(
    list: &CodeList,
    n: usize,
    q: u32,
    k: usize,
    forbidden: Symbol,
) -> Result<VerificationReport> {
    check_complete_within(list, n, q, k, forbidden, Budget::default())
}

pub fn check_complete_within(
    list: &CodeList,
    n: usize,
    q: u32,
    k: usize,
    forbidden: Symbol,
    budget: Budget,
) -> Result<VerificationReport> {
    let oracle = brute_force_set_within(n, q, k, forbidden, budget)?;
    let oracle: HashSet<&[Symbol]> = oracle.iter().map(QaryString::symbols).collect();
    let mut report = VerificationReport::default();
    let mut seen: HashMap<&[Symbol], usize> = HashMap::new();

    for (i, s) in list.iter().enumerate() {
        let key = s.symbols();
        if let Some(&first) = seen.get(key) {
            report.push(
                FindingKind::Duplicate,
                vec![first, i],
                vec![s.clone()],
                format!("{s} at {first} and {i}"),
            );
            continue;
        }
        seen.insert(key, i);
        if !oracle.contains(key) {
            let kind = if s.len() == n && s.contains_run(forbidden, k) {
                FindingKind::Avoidance
            } else {
                FindingKind::Surplus
            };
            report.push(
                kind,
                vec![i],
                vec![s.clone()],
                format!("{s} is not in the target set"),
            );
        }
    }

    let mut missing: Vec<&[Symbol]> = oracle
        .iter()
        .copied()
        .filter(|s| !seen.contains_key(s))
        .collect();
    missing.sort();
    for s in missing {
        let s = QaryString::from_raw(s.to_vec(), q);
        report.push(
            FindingKind::Missing,
            Vec::new(),
            vec![s.clone()],
            format!("{s} never listed"),
        );
    }

    let expected = count_qary(n, q, k)?;
    if expected != list.len().into() {
        report.push(
            FindingKind::CountMismatch,
            Vec::new(),
            Vec::new(),
            format!("{} entries, expected {}", list.len(), expected),
        );
    }
    report.sort();
    Ok(report)
}

/// Checks that strings sharing a trace are contiguous and that each trace
/// run holds exactly `(q-1)^w` strings, `w` being the weight of the trace.
pub fn check_trace_partition(list: &CodeList) -> VerificationReport {
    check_trace_partition_about(list, 0)
}

/// [`check_trace_partition`] with traces taken relative to `symbol`.
pub fn check_trace_partition_about(list: &CodeList, symbol: Symbol) -> VerificationReport {
    let mut report = VerificationReport::default();
    let mut run_start: HashMap<QaryString, usize> = HashMap::new();
    let runs = trace_runs(list, symbol);
    for (start, len, t) in runs {
        if let Some(&earlier) = run_start.get(&t) {
            report.push(
                FindingKind::TracePartition,
                vec![earlier, start],
                vec![t.clone()],
                format!("trace {t} split: runs start at {earlier} and {start}"),
            );
            continue;
        }
        let expected = (list.q() as u128 - 1).checked_pow(t.weight() as u32);
        if expected != Some(len as u128) {
            report.push(
                FindingKind::TracePartition,
                vec![start],
                vec![t.clone()],
                format!(
                    "trace {t} run has {len} strings, expected {}",
                    expected.map_or("overflow".to_string(), |e| e.to_string())
                ),
            );
        }
        run_start.insert(t, start);
    }
    report.sort();
    report
}

fn trace_runs(list: &CodeList, symbol: Symbol) -> Vec<(usize, usize, QaryString)> {
    let mut runs: Vec<(usize, usize, QaryString)> = Vec::new();
    for (i, s) in list.iter().enumerate() {
        let t = trace_about(s, symbol);
        match runs.last_mut() {
            Some((_, len, last)) if *last == t => *len += 1,
            _ => runs.push((i, 1, t)),
        }
    }
    runs
}

/// Maps every entry to its trace and drops consecutive repeats.
pub fn collapse(list: &CodeList) -> CodeList {
    collapse_about(list, 0)
}

pub fn collapse_about(list: &CodeList, symbol: Symbol) -> CodeList {
    let entries = trace_runs(list, symbol)
        .into_iter()
        .map(|(_, _, t)| t)
        .collect();
    CodeList::from_raw(entries, 2, list.n())
}

/// Compares the collapse of `list` with an expected binary list.
pub fn check_collapse(list: &CodeList, expected: &CodeList, symbol: Symbol) -> VerificationReport {
    let collapsed = collapse_about(list, symbol);
    let mut report = VerificationReport::default();
    let got = collapsed.entries();
    let want = expected.entries();
    if let Some(i) = (0..got.len().min(want.len())).find(|&i| got[i].symbols() != want[i].symbols())
    {
        report.push(
            FindingKind::CollapseMismatch,
            vec![i],
            vec![got[i].clone(), want[i].clone()],
            format!("collapsed entry {i} is {}, expected {}", got[i], want[i]),
        );
    } else if got.len() != want.len() {
        report.push(
            FindingKind::CollapseMismatch,
            Vec::new(),
            Vec::new(),
            format!(
                "collapse has {} entries, expected {}",
                got.len(),
                want.len()
            ),
        );
    }
    report
}

//! Exact matchers over byte strings.
//!
//! Every matcher reports 1-based start positions in increasing order and
//! fills a [`SearchStats`] with the work it did. [`naive_search`] is the
//! reference the others are tested against.

mod distq;
mod hashq;
mod kmp;
mod naive;

use std::fmt;
use std::str::FromStr;

pub use distq::{distq_search, distq_search_traced, ldistq_search, ldistq_search_traced};
pub use hashq::{hashq_search, HashqProfile};
pub use kmp::{kmp_search, kmp_search_with_table};
pub use naive::{naive_search, naive_search_with_stats};

use crate::error::{Error, Result};
use crate::preprocess::{HashingMode, PatternProfile};

/// Sorted 1-based start positions of every occurrence of a pattern.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Occurrences(Vec<usize>);

impl Occurrences {
    pub(crate) fn from_sorted(positions: Vec<usize>) -> Self {
        debug_assert!(positions.windows(2).all(|w| w[0] < w[1]));
        Occurrences(positions)
    }

    pub fn positions(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, usize> {
        self.0.iter()
    }

    /// The same positions shifted to 0-based offsets.
    pub fn zero_based(&self) -> Vec<usize> {
        self.0.iter().map(|p| p - 1).collect()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl<'a> IntoIterator for &'a Occurrences {
    type Item = &'a usize;
    type IntoIter = std::slice::Iter<'a, usize>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Work counters collected by every search.
///
/// Only shifts that land on a window lying inside the text are counted; the
/// final shift that pushes the window past the end just terminates the search.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct SearchStats {
    /// Pattern-vs-text character tests in the comparison and KMP phases.
    pub char_comparisons: u64,
    /// `P[1]` tests made by the alignment phase before committing to a comparison.
    pub first_char_checks: u64,
    /// Text bytes consumed by hashing: `q` per full hash, 1 per rolling step.
    pub hashed_char_reads: u64,
    /// Shifts taken from a hash-indexed shift table.
    pub hq_shifts: u64,
    /// Shifts taken from `dist` (or, for HASHq, its fixed post-comparison shift).
    pub dist_shifts: u64,
    /// Shifts taken from the KMP table.
    pub kmp_shifts: u64,
    /// Alignments examined. DISTq counts each hash lookup and each KMP
    /// resumption; the baselines count every window they compare against.
    pub windows: u64,
}

impl SearchStats {
    pub fn accumulate(&mut self, other: &SearchStats) {
        self.char_comparisons += other.char_comparisons;
        self.first_char_checks += other.first_char_checks;
        self.hashed_char_reads += other.hashed_char_reads;
        self.hq_shifts += other.hq_shifts;
        self.dist_shifts += other.dist_shifts;
        self.kmp_shifts += other.kmp_shifts;
        self.windows += other.windows;
    }

    pub(crate) fn count_shift(&mut self, kind: ShiftKind) {
        match kind {
            ShiftKind::Hq => self.hq_shifts += 1,
            ShiftKind::Dist => self.dist_shifts += 1,
            ShiftKind::Kmp => self.kmp_shifts += 1,
        }
    }
}

/// Result of one completed search.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchOutcome {
    pub occurrences: Occurrences,
    pub stats: SearchStats,
}

/// Which table produced a shift.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ShiftKind {
    Hq,
    Dist,
    Kmp,
}

impl fmt::Display for ShiftKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ShiftKind::Hq => "HQ",
            ShiftKind::Dist => "dist",
            ShiftKind::Kmp => "KMP",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Shift {
    pub kind: ShiftKind,
    pub amount: usize,
}

impl fmt::Display for Shift {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.kind, self.amount)
    }
}

/// Step-by-step record of a DISTq/LDISTq search.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchTrace {
    /// Every shift in the order performed (zero-length HQ lookups excluded).
    pub shifts: Vec<Shift>,
    /// Each `pos` chosen by the alignment phase.
    pub positions: Vec<usize>,
    /// 1-based end position of every text q-gram whose hash was requested.
    pub hash_ends: Vec<usize>,
}

pub(crate) trait TraceSink {
    fn shift(&mut self, kind: ShiftKind, amount: usize);
    fn pos(&mut self, pos: usize);
    fn hash_end(&mut self, end: usize);
}

impl TraceSink for () {
    #[inline(always)]
    fn shift(&mut self, _: ShiftKind, _: usize) {}
    #[inline(always)]
    fn pos(&mut self, _: usize) {}
    #[inline(always)]
    fn hash_end(&mut self, _: usize) {}
}

impl TraceSink for SearchTrace {
    fn shift(&mut self, kind: ShiftKind, amount: usize) {
        self.shifts.push(Shift { kind, amount });
    }
    fn pos(&mut self, pos: usize) {
        self.positions.push(pos);
    }
    fn hash_end(&mut self, end: usize) {
        self.hash_ends.push(end);
    }
}

/// Search algorithms selectable by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    Naive,
    Kmp,
    Hashq,
    Distq,
    Ldistq,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [
        Algorithm::Naive,
        Algorithm::Kmp,
        Algorithm::Hashq,
        Algorithm::Distq,
        Algorithm::Ldistq,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Naive => "naive",
            Algorithm::Kmp => "kmp",
            Algorithm::Hashq => "hashq",
            Algorithm::Distq => "distq",
            Algorithm::Ldistq => "ldistq",
        }
    }

    /// Whether the algorithm is parameterised by a q-gram length.
    pub fn uses_q(self) -> bool {
        matches!(self, Algorithm::Hashq | Algorithm::Distq | Algorithm::Ldistq)
    }

    /// Preprocesses `pattern` and searches `text`. `q` is ignored by
    /// algorithms that do not use it. LDISTq builds its tables with rolling
    /// hashes; DISTq hashes each pattern q-gram directly.
    pub fn run(self, text: &[u8], pattern: &[u8], q: usize) -> Result<SearchOutcome> {
        match self {
            Algorithm::Naive => naive_search_with_stats(text, pattern),
            Algorithm::Kmp => kmp_search(text, pattern),
            Algorithm::Hashq => hashq_search(text, pattern, q),
            Algorithm::Distq => {
                let profile = PatternProfile::with_mode(pattern, q, HashingMode::Direct)?;
                Ok(distq_search(text, &profile))
            }
            Algorithm::Ldistq => {
                let profile = PatternProfile::with_mode(pattern, q, HashingMode::Rolling)?;
                Ok(ldistq_search(text, &profile))
            }
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                Error::Config(format!(
                    "unknown algorithm `{s}` (expected one of naive, kmp, hashq, distq, ldistq)"
                ))
            })
    }
}

//! HASHq baseline: Wu-Manber style single-pattern search on 8-bit q-gram hashes.

use super::{Occurrences, SearchOutcome, SearchStats, ShiftKind};
use crate::error::{Error, Result};
use crate::hashing::{check_q, hash8, HASH8_SPACE};

/// HASHq preprocessing for one pattern and q.
#[derive(Debug, Clone)]
pub struct HashqProfile {
    pattern: Vec<u8>,
    q: usize,
    shift: [usize; HASH8_SPACE],
    mismatch_shift: usize,
}

impl HashqProfile {
    pub fn new(pattern: &[u8], q: usize) -> Result<Self> {
        if pattern.is_empty() {
            return Err(Error::EmptyPattern);
        }
        check_q(q)?;
        let m = pattern.len();
        if q > m {
            return Err(Error::QExceedsPattern { q, m });
        }
        let mut shift = [m - q + 1; HASH8_SPACE];
        for j in q..=m {
            shift[hash8(&pattern[j - q..j]).index()] = m - j;
        }
        // Smallest k with h(P[m'-k : m-k]) = h(P[m' : m]), else m' (m' = m-q+1).
        let suffix = hash8(&pattern[m - q..]);
        let mismatch_shift = (1..=m - q)
            .find(|&k| hash8(&pattern[m - q - k..m - k]) == suffix)
            .unwrap_or(m - q + 1);
        Ok(HashqProfile {
            pattern: pattern.to_vec(),
            q,
            shift,
            mismatch_shift,
        })
    }

    pub fn pattern(&self) -> &[u8] {
        &self.pattern
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// Shift applied after every full comparison of a window.
    pub fn mismatch_shift(&self) -> usize {
        self.mismatch_shift
    }

    pub fn search(&self, text: &[u8]) -> SearchOutcome {
        let n = text.len();
        let m = self.pattern.len();
        let q = self.q;
        let mut stats = SearchStats::default();
        let mut found = Vec::new();
        // 1-based window end k.
        let mut k = m;
        'outer: while k <= n {
            loop {
                stats.windows += 1;
                stats.hashed_char_reads += q as u64;
                let sh = self.shift[hash8(&text[k - q..k]).index()];
                if sh == 0 {
                    break;
                }
                k += sh;
                if k > n {
                    break 'outer;
                }
                stats.count_shift(ShiftKind::Hq);
            }
            let start = k - m;
            let mut matched = 0;
            for (&a, &b) in self.pattern.iter().zip(&text[start..k]) {
                stats.char_comparisons += 1;
                if a != b {
                    break;
                }
                matched += 1;
            }
            if matched == m {
                found.push(start + 1);
            }
            k += self.mismatch_shift;
            if k <= n {
                stats.count_shift(ShiftKind::Dist);
            }
        }
        SearchOutcome {
            occurrences: Occurrences::from_sorted(found),
            stats,
        }
    }
}

/// Builds a [`HashqProfile`] and searches `text` with it.
pub fn hashq_search(text: &[u8], pattern: &[u8], q: usize) -> Result<SearchOutcome> {
    Ok(HashqProfile::new(pattern, q)?.search(text))
}

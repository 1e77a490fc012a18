use super::{Occurrences, SearchOutcome, SearchStats};
use crate::error::{Error, Result};

/// Compares every window left to right and slides by one.
pub fn naive_search(text: &[u8], pattern: &[u8]) -> Result<Occurrences> {
    naive_search_with_stats(text, pattern).map(|o| o.occurrences)
}

pub fn naive_search_with_stats(text: &[u8], pattern: &[u8]) -> Result<SearchOutcome> {
    if pattern.is_empty() {
        return Err(Error::EmptyPattern);
    }
    let m = pattern.len();
    let mut stats = SearchStats::default();
    let mut found = Vec::new();
    if text.len() < m {
        return Ok(SearchOutcome::default());
    }
    for start in 0..=text.len() - m {
        stats.windows += 1;
        let window = &text[start..start + m];
        let mut matched = 0;
        for (&a, &b) in pattern.iter().zip(window) {
            stats.char_comparisons += 1;
            if a != b {
                break;
            }
            matched += 1;
        }
        if matched == m {
            found.push(start + 1);
        }
    }
    Ok(SearchOutcome {
        occurrences: Occurrences::from_sorted(found),
        stats,
    })
}

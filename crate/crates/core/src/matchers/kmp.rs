use super::{Occurrences, SearchOutcome, SearchStats, ShiftKind};
use crate::error::Result;
use crate::preprocess::{kmp_shift_table, KmpShiftTable};

/// Knuth-Morris-Pratt with strong borders.
pub fn kmp_search(text: &[u8], pattern: &[u8]) -> Result<SearchOutcome> {
    let table = kmp_shift_table(pattern)?;
    Ok(kmp_search_with_table(text, pattern, &table))
}

/// KMP search with a prebuilt table. `table` must come from `pattern`.
pub fn kmp_search_with_table(text: &[u8], pattern: &[u8], table: &KmpShiftTable) -> SearchOutcome {
    let n = text.len();
    let m = pattern.len();
    let mut stats = SearchStats::default();
    let mut found = Vec::new();
    if n < m || m == 0 {
        return SearchOutcome::default();
    }
    // 1-based: text cursor i, pattern cursor j, window T[i-j+1 : i-j+m].
    let mut i = 1usize;
    let mut j = 1usize;
    stats.windows += 1;
    while i + m - j <= n {
        while j <= m {
            stats.char_comparisons += 1;
            if pattern[j - 1] != text[i - 1] {
                break;
            }
            i += 1;
            j += 1;
        }
        if j == m + 1 {
            found.push(i - m);
        }
        let shift = table.get(j);
        j -= shift;
        if j == 0 {
            // The mismatching text byte cannot start a match; restart after it.
            j = 1;
            i += 1;
        }
        if i + m - j <= n {
            stats.count_shift(ShiftKind::Kmp);
            stats.windows += 1;
        }
    }
    SearchOutcome {
        occurrences: Occurrences::from_sorted(found),
        stats,
    }
}

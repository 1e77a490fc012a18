//! DISTq and LDISTq.
//!
//! The search alternates between three phases:
//!
//! * **Alignment**: hash the window's suffix q-gram and jump by `HQ_Shift`
//!   until some pattern q-gram ending at `pos` has the same hash. If `P[1]`
//!   also matches, start comparing; otherwise jump by `dist[pos]` and
//!   re-hash.
//! * **Comparison**: test `P[2..]` left to right. On a mismatch at `j`, shift
//!   by `dist[pos]` if that resumes comparison at least as far right as the
//!   KMP shift would (`dist[pos] >= j-1` and `dist[pos] >= KMP_Shift[j]`),
//!   else by `KMP_Shift[j]`.
//! * **KMP**: after a KMP shift leaving a non-empty matched prefix, continue
//!   plain KMP until the prefix is exhausted.
//!
//! The text cursor never moves left, which bounds character comparisons by
//! `2n`. The two variants differ only in how alignment hashes are obtained:
//! DISTq rehashes `q` bytes each time, LDISTq rolls forward from the last
//! computed hash whenever the new q-gram overlaps it.

use super::{Occurrences, SearchOutcome, SearchStats, SearchTrace, ShiftKind, TraceSink};
use crate::hashing::{hash16, Hash16, RollContext};
use crate::preprocess::PatternProfile;

/// Supplies the hash of the text q-gram ending at a 1-based position.
trait WindowHasher {
    fn hash_ending_at(&mut self, text: &[u8], end: usize, stats: &mut SearchStats) -> Hash16;
}

struct FreshHasher {
    q: usize,
}

impl WindowHasher for FreshHasher {
    #[inline]
    fn hash_ending_at(&mut self, text: &[u8], end: usize, stats: &mut SearchStats) -> Hash16 {
        stats.hashed_char_reads += self.q as u64;
        hash16(&text[end - self.q..end])
    }
}

struct RollingHasher {
    ctx: RollContext,
    last: Option<(usize, Hash16)>,
}

impl WindowHasher for RollingHasher {
    #[inline]
    fn hash_ending_at(&mut self, text: &[u8], end: usize, stats: &mut SearchStats) -> Hash16 {
        let q = self.ctx.q();
        let h = match self.last {
            Some((prev_end, prev)) if end >= prev_end && end - prev_end < q => {
                let mut h = prev;
                for e in prev_end + 1..=end {
                    h = self.ctx.roll(h, text[e - q - 1], text[e - 1]);
                }
                stats.hashed_char_reads += (end - prev_end) as u64;
                h
            }
            _ => {
                stats.hashed_char_reads += q as u64;
                hash16(&text[end - q..end])
            }
        };
        self.last = Some((end, h));
        h
    }
}

/// DISTq search with a prebuilt profile.
pub fn distq_search(text: &[u8], profile: &PatternProfile) -> SearchOutcome {
    let mut hasher = FreshHasher { q: profile.q() };
    search(text, profile, &mut hasher, &mut ())
}

/// DISTq search that also records every shift, `pos` choice and hashed position.
pub fn distq_search_traced(text: &[u8], profile: &PatternProfile) -> (SearchOutcome, SearchTrace) {
    let mut hasher = FreshHasher { q: profile.q() };
    let mut trace = SearchTrace::default();
    let out = search(text, profile, &mut hasher, &mut trace);
    (out, trace)
}

/// LDISTq search: same decisions as [`distq_search`], with rolling alignment hashes.
pub fn ldistq_search(text: &[u8], profile: &PatternProfile) -> SearchOutcome {
    let mut hasher = RollingHasher {
        ctx: *profile.roll_context(),
        last: None,
    };
    search(text, profile, &mut hasher, &mut ())
}

pub fn ldistq_search_traced(text: &[u8], profile: &PatternProfile) -> (SearchOutcome, SearchTrace) {
    let mut hasher = RollingHasher {
        ctx: *profile.roll_context(),
        last: None,
    };
    let mut trace = SearchTrace::default();
    let out = search(text, profile, &mut hasher, &mut trace);
    (out, trace)
}

fn search<H: WindowHasher, S: TraceSink>(
    text: &[u8],
    profile: &PatternProfile,
    hasher: &mut H,
    sink: &mut S,
) -> SearchOutcome {
    let pattern = profile.pattern();
    let kmp = profile.kmp();
    let hq = profile.hq();
    let dist = profile.dist();
    let mut stats = SearchStats::default();
    let mut found = Vec::new();

    if text.len() < pattern.len() {
        return SearchOutcome::default();
    }
    // Signed 1-based positions: a dist shift may drive j below zero, and
    // k = i + m - j still lands the window correctly.
    let n = text.len() as isize;
    let m = pattern.len() as isize;
    let no_match_shift = hq.default_shift() as isize;
    let t = |x: isize| text[(x - 1) as usize];
    let p = |x: isize| pattern[(x - 1) as usize];

    let mut k = m;
    let mut i = 1isize;
    let mut j = 1isize;

    'search: while k <= n {
        let (kind, amount) = if j <= 1 {
            // Alignment phase; yields the pattern position of the aligned q-gram.
            let pos = loop {
                stats.windows += 1;
                sink.hash_end(k as usize);
                let h = hasher.hash_ending_at(text, k as usize, &mut stats);
                let sh = hq.get(h) as isize;
                k += sh;
                if k > n {
                    break 'search;
                }
                if sh > 0 {
                    stats.count_shift(ShiftKind::Hq);
                    sink.shift(ShiftKind::Hq, sh as usize);
                }
                if sh != no_match_shift {
                    let pos = (m - sh) as usize;
                    sink.pos(pos);
                    stats.first_char_checks += 1;
                    if p(1) == t(k - m + 1) {
                        break pos;
                    }
                    let d = dist.get(pos);
                    k += d as isize;
                    if k > n {
                        break 'search;
                    }
                    stats.count_shift(ShiftKind::Dist);
                    sink.shift(ShiftKind::Dist, d);
                }
            };

            // Comparison phase.
            j = 2;
            i = k - m + 2;
            while j <= m {
                stats.char_comparisons += 1;
                if p(j) != t(i) {
                    break;
                }
                i += 1;
                j += 1;
            }
            if j == m + 1 {
                found.push((i - m) as usize);
            }
            let d = dist.get(pos);
            let ks = kmp.get(j as usize);
            if d as isize >= j - 1 && d >= ks {
                (ShiftKind::Dist, d)
            } else {
                (ShiftKind::Kmp, ks)
            }
        } else {
            // KMP phase.
            stats.windows += 1;
            while j <= m {
                stats.char_comparisons += 1;
                if p(j) != t(i) {
                    break;
                }
                i += 1;
                j += 1;
            }
            if j == m + 1 {
                found.push((i - m) as usize);
            }
            (ShiftKind::Kmp, kmp.get(j as usize))
        };

        j -= amount as isize;
        k = i + m - j;
        if k <= n {
            stats.count_shift(kind);
            sink.shift(kind, amount);
        }
    }

    SearchOutcome {
        occurrences: Occurrences::from_sorted(found),
        stats,
    }
}

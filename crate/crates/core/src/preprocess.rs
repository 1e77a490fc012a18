//! Pattern preprocessing: the KMP shift table built from strong borders,
//! the hash-indexed `HQ_Shift` table, and the `dist` array giving, for each
//! pattern q-gram, the distance back to the nearest earlier q-gram with the
//! same hash.
//!
//! Tables are addressed with 1-based pattern positions (`j = 1..=m`, plus
//! `m + 1` for the KMP table); storage is 0-based with a dead slot at 0.

use crate::error::{Error, Result};
use crate::hashing::{
    check_q, qgram_hashes_direct, qgram_hashes_rolling, Hash16, RollContext, HASH16_SPACE, MAX_Q,
};

/// How the pattern q-gram hashes feeding `HQ_Shift` and `dist` are computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum HashingMode {
    /// Hash every q-gram from scratch, `O(mq)`.
    #[default]
    Direct,
    /// One full hash followed by rolling updates, `O(m)`.
    Rolling,
}

fn check_pattern(p: &[u8]) -> Result<()> {
    if p.is_empty() {
        return Err(Error::EmptyPattern);
    }
    if p.len() > u32::MAX as usize {
        return Err(Error::Config(format!(
            "pattern length {} exceeds the supported maximum {}",
            p.len(),
            u32::MAX
        )));
    }
    Ok(())
}

fn check_pattern_q(p: &[u8], q: usize) -> Result<()> {
    check_pattern(p)?;
    check_q(q)?;
    if q > p.len() {
        return Err(Error::QExceedsPattern { q, m: p.len() });
    }
    Ok(())
}

/// Strong border lengths for `j = 1..=m+1`, returned in that order
/// (element 0 is `j = 1`). Entry `m + 1` is the longest proper border of
/// the whole pattern; every other entry is the longest border `k` of
/// `P[1:j-1]` with `P[k+1] != P[j]`, or -1 if there is none.
pub fn strong_border_table(p: &[u8]) -> Result<Vec<isize>> {
    check_pattern(p)?;
    let m = p.len();
    // 0-based: next[i] is the strong border for 1-based j = i + 1.
    let mut next = vec![0isize; m + 1];
    next[0] = -1;
    let mut i = 0usize;
    let mut j: isize = -1;
    while i < m {
        while j > -1 && p[i] != p[j as usize] {
            j = next[j as usize];
        }
        i += 1;
        j += 1;
        next[i] = if i < m && p[i] == p[j as usize] {
            next[j as usize]
        } else {
            j
        };
    }
    Ok(next)
}

/// KMP shift amounts for `j = 1..=m+1`: `shift[j] = j - Strong_Bord(j) - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KmpShiftTable {
    shifts: Vec<usize>,
}

impl KmpShiftTable {
    /// Shift to apply after a mismatch at pattern position `j`, or after a
    /// full match when `j = m + 1`.
    #[inline]
    pub fn get(&self, j: usize) -> usize {
        self.shifts[j]
    }

    /// Pattern length the table was built for.
    pub fn pattern_len(&self) -> usize {
        self.shifts.len() - 2
    }

    /// Entries for `j = 1..=m+1`.
    pub fn to_vec(&self) -> Vec<usize> {
        self.shifts[1..].to_vec()
    }
}

/// Builds the KMP shift table in `O(m)`.
pub fn kmp_shift_table(p: &[u8]) -> Result<KmpShiftTable> {
    let borders = strong_border_table(p)?;
    let mut shifts = Vec::with_capacity(borders.len() + 1);
    shifts.push(0);
    shifts.extend(
        borders
            .iter()
            .enumerate()
            .map(|(idx, &b)| ((idx + 1) as isize - b - 1) as usize),
    );
    Ok(KmpShiftTable { shifts })
}

/// Shift keyed by the base-4 hash of the text window's suffix q-gram.
///
/// `get(c) = m - j` for the rightmost pattern q-gram ending at `j` with hash
/// `c`, and `m - q + 1` when no pattern q-gram hashes to `c`.
#[derive(Clone, PartialEq, Eq)]
pub struct HqShiftTable {
    shifts: Box<[u32]>,
    default_shift: usize,
}

impl std::fmt::Debug for HqShiftTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let set = self
            .shifts
            .iter()
            .filter(|&&s| s as usize != self.default_shift)
            .count();
        f.debug_struct("HqShiftTable")
            .field("default_shift", &self.default_shift)
            .field("non_default_entries", &set)
            .finish()
    }
}

impl HqShiftTable {
    fn from_hashes(m: usize, q: usize, hashes: &[Hash16]) -> Self {
        let default_shift = m - q + 1;
        let mut shifts = vec![default_shift as u32; HASH16_SPACE].into_boxed_slice();
        // hashes[idx] is the q-gram ending at 1-based j = idx + q.
        for (idx, h) in hashes.iter().enumerate() {
            shifts[h.index()] = (m - (idx + q)) as u32;
        }
        HqShiftTable {
            shifts,
            default_shift,
        }
    }

    #[inline]
    pub fn get(&self, c: Hash16) -> usize {
        self.shifts[c.index()] as usize
    }

    /// Shift for hash values that no pattern q-gram produces, `m - q + 1`.
    pub fn default_shift(&self) -> usize {
        self.default_shift
    }
}

/// Builds `HQ_Shift` by hashing each pattern q-gram directly.
pub fn hq_shift_table(p: &[u8], q: usize) -> Result<HqShiftTable> {
    check_pattern_q(p, q)?;
    Ok(HqShiftTable::from_hashes(
        p.len(),
        q,
        &qgram_hashes_direct(p, q),
    ))
}

/// `dist[j]` for `j = 1..=m`.
///
/// For `j >= q`, if the nearest earlier q-gram with the same hash as
/// `P[j-q+1:j]` ends at `j - k`, then `dist[j] = k`; otherwise
/// `dist[j] = j - q + 1`. Entries below `q` are 1 and never read by the
/// search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistTable {
    dists: Vec<usize>,
}

impl DistTable {
    fn from_hashes(m: usize, q: usize, hashes: &[Hash16]) -> Self {
        let mut dists = vec![1usize; m + 1];
        dists[0] = 0;
        // 0 means "not seen yet"; positions are 1-based so never collide.
        let mut prev_pos = vec![0u32; HASH16_SPACE];
        for (idx, h) in hashes.iter().enumerate() {
            let j = idx + q;
            let last = prev_pos[h.index()] as usize;
            dists[j] = if last == 0 { j - q + 1 } else { j - last };
            prev_pos[h.index()] = j as u32;
        }
        DistTable { dists }
    }

    #[inline]
    pub fn get(&self, j: usize) -> usize {
        self.dists[j]
    }

    /// Entries for `j = 1..=m`.
    pub fn to_vec(&self) -> Vec<usize> {
        self.dists[1..].to_vec()
    }
}

/// Builds the `dist` array in one left-to-right pass with a last-position table.
pub fn dist_table(p: &[u8], q: usize) -> Result<DistTable> {
    check_pattern_q(p, q)?;
    Ok(DistTable::from_hashes(
        p.len(),
        q,
        &qgram_hashes_direct(p, q),
    ))
}

/// A pattern together with every table the q-gram matchers need.
/// Immutable once built and safe to share between concurrent searches.
#[derive(Debug, Clone)]
pub struct PatternProfile {
    pattern: Vec<u8>,
    q: usize,
    mode: HashingMode,
    kmp: KmpShiftTable,
    hq: HqShiftTable,
    dist: DistTable,
    ctx: RollContext,
}

impl PatternProfile {
    /// Builds a profile hashing pattern q-grams directly.
    pub fn new(pattern: &[u8], q: usize) -> Result<Self> {
        Self::with_mode(pattern, q, HashingMode::Direct)
    }

    pub fn with_mode(pattern: &[u8], q: usize, mode: HashingMode) -> Result<Self> {
        check_pattern_q(pattern, q)?;
        let m = pattern.len();
        let ctx = RollContext::new(q)?;
        let hashes = match mode {
            HashingMode::Direct => qgram_hashes_direct(pattern, q),
            HashingMode::Rolling => qgram_hashes_rolling(pattern, &ctx),
        };
        Ok(PatternProfile {
            pattern: pattern.to_vec(),
            q,
            mode,
            kmp: kmp_shift_table(pattern)?,
            hq: HqShiftTable::from_hashes(m, q, &hashes),
            dist: DistTable::from_hashes(m, q, &hashes),
            ctx,
        })
    }

    pub fn pattern(&self) -> &[u8] {
        &self.pattern
    }

    pub fn m(&self) -> usize {
        self.pattern.len()
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn mode(&self) -> HashingMode {
        self.mode
    }

    pub fn kmp(&self) -> &KmpShiftTable {
        &self.kmp
    }

    pub fn hq(&self) -> &HqShiftTable {
        &self.hq
    }

    pub fn dist(&self) -> &DistTable {
        &self.dist
    }

    pub fn roll_context(&self) -> &RollContext {
        &self.ctx
    }
}

/// Convenience wrapper around [`PatternProfile::new`].
pub fn build_profile(pattern: &[u8], q: usize) -> Result<PatternProfile> {
    PatternProfile::new(pattern, q)
}

/// Largest q usable for a pattern of length `m`.
pub fn max_q_for(m: usize) -> usize {
    m.min(MAX_Q)
}

//! Experiment texts: Fibonacci strings, random texts with an exact number of
//! embedded pattern occurrences, pattern sampling and raw file loading.
//!
//! Randomness comes from `ChaCha8Rng` seeded with `seed_from_u64`, so every
//! generator is a pure function of its arguments.

use std::path::Path;

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Name of the generator backing every random corpus, recorded in reports.
pub const RNG_NAME: &str = "ChaCha8Rng(seed_from_u64)";

pub const MAX_FIBONACCI_INDEX: usize = 40;

/// Largest supported alphabet, the printable ASCII range.
pub const MAX_SIGMA: usize = 95;

pub(crate) fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `Fib_1 = "b"`, `Fib_2 = "a"`, `Fib_k = Fib_{k-1} · Fib_{k-2}`.
pub fn fibonacci_string(k: usize) -> Result<Vec<u8>> {
    if !(1..=MAX_FIBONACCI_INDEX).contains(&k) {
        return Err(Error::Config(format!(
            "Fibonacci index {k} outside 1..={MAX_FIBONACCI_INDEX}"
        )));
    }
    match k {
        1 => return Ok(b"b".to_vec()),
        2 => return Ok(b"a".to_vec()),
        _ => {}
    }
    // From Fib_3 on, Fib_{k-2} is a prefix of Fib_{k-1}, so each step appends
    // a prefix of the current buffer to itself.
    let mut s = b"ab".to_vec();
    let mut prev_len = 1;
    for _ in 4..=k {
        let cur_len = s.len();
        s.extend_from_within(..prev_len);
        prev_len = cur_len;
    }
    Ok(s)
}

/// The `sigma` letters used for generated corpora: consecutive bytes from
/// `b'a'` when `sigma <= 26`, otherwise from the space character (byte 32).
pub fn alphabet(sigma: usize) -> Result<Vec<u8>> {
    if !(2..=MAX_SIGMA).contains(&sigma) {
        return Err(Error::Config(format!(
            "alphabet size {sigma} outside 2..={MAX_SIGMA}"
        )));
    }
    let first = if sigma <= 26 { b'a' } else { b' ' };
    Ok((0..sigma as u8).map(|i| first + i).collect())
}

/// Parameters of a random text with embedded pattern occurrences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CorpusSpec {
    pub n: usize,
    pub sigma: usize,
    pub m: usize,
    pub occ: usize,
    pub seed: u64,
}

impl CorpusSpec {
    pub fn validate(&self) -> Result<()> {
        alphabet(self.sigma)?;
        if self.m == 0 {
            return Err(Error::Config("pattern length must be at least 1".into()));
        }
        if self.m > self.n {
            return Err(Error::Config(format!(
                "pattern length {} exceeds text length {}",
                self.m, self.n
            )));
        }
        match self.occ.checked_mul(self.m) {
            Some(total) if total <= self.n => Ok(()),
            _ => Err(Error::Config(format!(
                "{} non-overlapping copies of a length-{} pattern do not fit in {} bytes",
                self.occ, self.m, self.n
            ))),
        }
    }
}

/// Output of [`random_text_with_occurrences`]. `positions` are the 1-based
/// starts of the embedded copies, which are exactly the occurrences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratedCorpus {
    pub text: Vec<u8>,
    pub pattern: Vec<u8>,
    pub occ: usize,
    pub positions: Vec<usize>,
}

fn window_matches(text: &[u8], start: usize, pattern: &[u8]) -> bool {
    &text[start..start + pattern.len()] == pattern
}

/// Rewrites bytes of `text` until `pattern` no longer occurs. Each pass
/// redraws one uniformly chosen byte of the leftmost remaining occurrence,
/// then rescans from the first window that could contain the changed byte.
fn scrub(
    text: &mut [u8],
    pattern: &[u8],
    letters: &[u8],
    rng: &mut ChaCha8Rng,
    budget: &mut usize,
) -> Result<()> {
    let m = pattern.len();
    let n = text.len();
    let mut start = 0;
    while start + m <= n {
        if !window_matches(text, start, pattern) {
            start += 1;
            continue;
        }
        if *budget == 0 {
            return Err(Error::Generation(
                "character-change budget exhausted while removing pattern occurrences".into(),
            ));
        }
        *budget -= 1;
        let off = rng.gen_range(0..m);
        text[start + off] = letters[rng.gen_range(0..letters.len())];
        start = (start + off + 1).saturating_sub(m);
    }
    Ok(())
}

/// Like [`scrub`] but never touches bytes inside the embedded copies.
/// Returns `false` when an unwanted occurrence lies entirely within copies,
/// in which case the placement has to be redrawn.
fn scrub_around(
    text: &mut [u8],
    pattern: &[u8],
    letters: &[u8],
    embedded: &[bool],
    is_copy_start: &[bool],
    rng: &mut ChaCha8Rng,
    budget: &mut usize,
) -> Result<bool> {
    let m = pattern.len();
    let n = text.len();
    let mut start = 0;
    while start + m <= n {
        if is_copy_start[start] || !window_matches(text, start, pattern) {
            start += 1;
            continue;
        }
        let free: Vec<usize> = (start..start + m).filter(|&x| !embedded[x]).collect();
        if free.is_empty() {
            return Ok(false);
        }
        if *budget == 0 {
            return Err(Error::Generation(
                "character-change budget exhausted while removing stray occurrences".into(),
            ));
        }
        *budget -= 1;
        let at = free[rng.gen_range(0..free.len())];
        text[at] = letters[rng.gen_range(0..letters.len())];
        start = (at + 1).saturating_sub(m);
    }
    Ok(true)
}

const PLACEMENT_ATTEMPTS: usize = 100;

/// Draws a pattern and a text over the `sigma`-letter alphabet such that the
/// pattern occurs exactly `occ` times, at non-overlapping uniformly random
/// positions (adjacent copies are allowed).
pub fn random_text_with_occurrences(spec: &CorpusSpec) -> Result<GeneratedCorpus> {
    spec.validate()?;
    let letters = alphabet(spec.sigma)?;
    let CorpusSpec { n, m, occ, .. } = *spec;
    let mut rng = rng_for(spec.seed);
    let draw = |rng: &mut ChaCha8Rng, len: usize| -> Vec<u8> {
        (0..len)
            .map(|_| letters[rng.gen_range(0..letters.len())])
            .collect()
    };
    let pattern = draw(&mut rng, m);
    let mut base = draw(&mut rng, n);
    let mut budget = n.saturating_mul(100);
    scrub(&mut base, &pattern, &letters, &mut rng, &mut budget)?;

    for _ in 0..PLACEMENT_ATTEMPTS {
        // Stars and bars: occ sorted distinct slots in [0, n - occ*m + occ)
        // map to starts s_i + i*(m-1), which are pairwise at least m apart.
        let slots = n - occ * m + occ;
        let mut chosen = index::sample(&mut rng, slots, occ).into_vec();
        chosen.sort_unstable();
        let starts: Vec<usize> = chosen
            .iter()
            .enumerate()
            .map(|(i, s)| s + i * (m - 1))
            .collect();

        let mut text = base.clone();
        let mut embedded = vec![false; n];
        let mut is_copy_start = vec![false; n];
        for &s in &starts {
            text[s..s + m].copy_from_slice(&pattern);
            embedded[s..s + m].iter_mut().for_each(|b| *b = true);
            is_copy_start[s] = true;
        }
        let clean = scrub_around(
            &mut text,
            &pattern,
            &letters,
            &embedded,
            &is_copy_start,
            &mut rng,
            &mut budget,
        )?;
        if clean {
            let count = (0..=n - m)
                .filter(|&s| window_matches(&text, s, &pattern))
                .count();
            if count != occ {
                return Err(Error::Generation(format!(
                    "embedded {occ} copies but the text contains {count} occurrences"
                )));
            }
            return Ok(GeneratedCorpus {
                text,
                pattern,
                occ,
                positions: starts.iter().map(|s| s + 1).collect(),
            });
        }
    }
    Err(Error::Generation(format!(
        "could not place {occ} copies without creating extra occurrences after {PLACEMENT_ATTEMPTS} attempts"
    )))
}

/// `count` length-`m` substrings of `text` at uniformly random starts.
pub fn sample_patterns(text: &[u8], m: usize, count: usize, seed: u64) -> Result<Vec<Vec<u8>>> {
    if m == 0 {
        return Err(Error::Config("pattern length must be at least 1".into()));
    }
    if m > text.len() {
        return Err(Error::Config(format!(
            "pattern length {m} exceeds text length {}",
            text.len()
        )));
    }
    if count == 0 {
        return Err(Error::Config("pattern count must be at least 1".into()));
    }
    let mut rng = rng_for(seed);
    Ok((0..count)
        .map(|_| {
            let start = rng.gen_range(0..=text.len() - m);
            text[start..start + m].to_vec()
        })
        .collect())
}

/// Reads a file as raw bytes, optionally dropping every line-feed byte.
pub fn load_text(path: impl AsRef<Path>, strip_newlines: bool) -> Result<Vec<u8>> {
    let path = path.as_ref();
    let mut bytes = std::fs::read(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    if strip_newlines {
        bytes.retain(|&b| b != b'\n');
    }
    Ok(bytes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matchers::naive_search;

    #[test]
    fn fibonacci_small() {
        assert_eq!(fibonacci_string(1).unwrap(), b"b");
        assert_eq!(fibonacci_string(2).unwrap(), b"a");
        assert_eq!(fibonacci_string(3).unwrap(), b"ab");
        assert_eq!(fibonacci_string(4).unwrap(), b"aba");
        assert_eq!(fibonacci_string(5).unwrap(), b"abaab");
        assert!(fibonacci_string(0).is_err());
        assert!(fibonacci_string(41).is_err());
    }

    #[test]
    fn fibonacci_recurrence() {
        let mut prev2 = fibonacci_string(1).unwrap();
        let mut prev1 = fibonacci_string(2).unwrap();
        for k in 3..=24 {
            let cur = fibonacci_string(k).unwrap();
            let mut expect = prev1.clone();
            expect.extend_from_slice(&prev2);
            assert_eq!(cur, expect, "k = {k}");
            prev2 = prev1;
            prev1 = cur;
        }
    }

    #[test]
    fn alphabet_mapping() {
        assert_eq!(alphabet(4).unwrap(), b"abcd");
        assert_eq!(alphabet(26).unwrap().last(), Some(&b'z'));
        let full = alphabet(95).unwrap();
        assert_eq!((full[0], full[94]), (b' ', b'~'));
        assert!(alphabet(1).is_err());
        assert!(alphabet(96).is_err());
    }

    #[test]
    fn embedding_small_cases() {
        let spec = CorpusSpec {
            n: 10_000,
            sigma: 4,
            m: 8,
            occ: 128,
            seed: 3,
        };
        let c = random_text_with_occurrences(&spec).unwrap();
        let occ = naive_search(&c.text, &c.pattern).unwrap();
        assert_eq!(occ.len(), 128);
        assert_eq!(occ.positions(), c.positions.as_slice());

        let spec = CorpusSpec {
            n: 100,
            sigma: 95,
            m: 8,
            occ: 12,
            seed: 9,
        };
        let c = random_text_with_occurrences(&spec).unwrap();
        let occ = naive_search(&c.text, &c.pattern).unwrap();
        assert_eq!(occ.len(), 12);
        assert!(occ.positions().windows(2).all(|w| w[1] - w[0] >= 8));
        assert!(c.text.iter().all(|b| (b' '..=b'~').contains(b)));
    }

    #[test]
    fn embedding_fills_text_exactly() {
        // occ * m == n leaves no room between copies.
        let spec = CorpusSpec {
            n: 64,
            sigma: 2,
            m: 8,
            occ: 8,
            seed: 1,
        };
        match random_text_with_occurrences(&spec) {
            Ok(c) => assert_eq!(naive_search(&c.text, &c.pattern).unwrap().len(), 8),
            // A periodic pattern tiled end to end necessarily creates extras.
            Err(Error::Generation(_)) => {}
            Err(e) => panic!("unexpected error {e}"),
        }
    }

    #[test]
    fn generator_is_deterministic() {
        let spec = CorpusSpec {
            n: 5_000,
            sigma: 4,
            m: 6,
            occ: 40,
            seed: 77,
        };
        let a = random_text_with_occurrences(&spec).unwrap();
        let b = random_text_with_occurrences(&spec).unwrap();
        assert_eq!(a, b);
        let c = random_text_with_occurrences(&CorpusSpec { seed: 78, ..spec }).unwrap();
        assert_ne!(a.text, c.text);
    }

    #[test]
    fn corpus_spec_validation() {
        let ok = CorpusSpec {
            n: 10,
            sigma: 4,
            m: 5,
            occ: 2,
            seed: 0,
        };
        assert!(ok.validate().is_ok());
        assert!(CorpusSpec { occ: 3, ..ok }.validate().is_err());
        assert!(CorpusSpec { sigma: 1, ..ok }.validate().is_err());
        assert!(CorpusSpec { m: 0, ..ok }.validate().is_err());
        assert!(random_text_with_occurrences(&CorpusSpec { occ: 3, ..ok }).is_err());
    }

    #[test]
    fn sampling() {
        assert_eq!(sample_patterns(b"abaab", 5, 1, 0).unwrap(), vec![b"abaab".to_vec()]);
        let fib = fibonacci_string(10).unwrap();
        let pats = sample_patterns(&fib, 4, 3, 7).unwrap();
        assert_eq!(pats.len(), 3);
        for p in &pats {
            assert_eq!(p.len(), 4);
            assert!(!naive_search(&fib, p).unwrap().is_empty());
        }
        assert_eq!(pats, sample_patterns(&fib, 4, 3, 7).unwrap());
        assert!(sample_patterns(&[b'a'; 10], 11, 1, 0).is_err());
        assert!(sample_patterns(b"abc", 2, 0, 0).is_err());
    }

    #[test]
    fn loading() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("t.txt");
        std::fs::write(&path, b"abc\n").unwrap();
        assert_eq!(load_text(&path, true).unwrap(), b"abc");
        assert_eq!(load_text(&path, false).unwrap(), b"abc\n");
        let empty = dir.path().join("empty.txt");
        std::fs::write(&empty, b"").unwrap();
        let text = load_text(&empty, false).unwrap();
        assert!(text.is_empty());
        assert!(naive_search(&text, b"a").unwrap().is_empty());
        let err = load_text(dir.path().join("missing"), false).unwrap_err();
        assert!(matches!(err, Error::Io { .. }));
        assert!(err.to_string().contains("missing"));
    }
}

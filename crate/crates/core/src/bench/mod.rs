//! Benchmark harness.
//!
//! A [`BenchSpec`] describes a grid of cells (corpus × pattern length, plus
//! the occurrence count for generated corpora). In every cell each requested
//! algorithm/q pair is timed over `repetitions` full runs (preprocessing and
//! search for every pattern), the best of `trials` is kept, and all
//! algorithms must report the same number of occurrences before any row is
//! emitted.

mod report;
mod search_cmd;

use std::hint::black_box;
use std::path::PathBuf;
use std::time::Instant;

pub use report::{emit_report, parse_csv, ReportFormat, ReportRow, CSV_HEADER};
pub use search_cmd::{run_search_command, SearchRequest};

use crate::corpus::{
    fibonacci_string, load_text, random_text_with_occurrences, sample_patterns, CorpusSpec,
};
use crate::error::{Error, Result};
use crate::hashing::MAX_Q;
use crate::matchers::{Algorithm, SearchStats};

/// Where benchmark texts come from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CorpusSource {
    /// A file read as raw bytes; patterns are sampled from it.
    File { path: PathBuf, strip_newlines: bool },
    /// `Fib_k`; patterns are sampled from it.
    Fibonacci { k: usize },
    /// One generated text per (pattern length, occurrence count), each with
    /// its own random pattern embedded exactly `occ` times.
    Embedded {
        n: usize,
        sigma: usize,
        occs: Vec<usize>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchSpec {
    pub source: CorpusSource,
    pub algorithms: Vec<Algorithm>,
    /// q values tried for q-gram algorithms, clamped to the pattern length per cell.
    pub qs: Vec<usize>,
    pub pattern_lengths: Vec<usize>,
    /// Patterns sampled per length. Ignored for [`CorpusSource::Embedded`].
    pub patterns_per_length: usize,
    pub repetitions: usize,
    pub trials: usize,
    pub seed: u64,
}

impl BenchSpec {
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Config(msg));
        if self.repetitions == 0 {
            return fail("repetitions must be at least 1".into());
        }
        if self.trials == 0 {
            return fail("trials must be at least 1".into());
        }
        if self.algorithms.is_empty() {
            return fail("no algorithms selected".into());
        }
        if self.pattern_lengths.is_empty() || self.pattern_lengths.contains(&0) {
            return fail("pattern lengths must be non-empty and positive".into());
        }
        if self.algorithms.iter().any(|a| a.uses_q()) {
            if self.qs.is_empty() {
                return fail("q-gram algorithms selected but no q values given".into());
            }
            if let Some(&q) = self.qs.iter().find(|&&q| q == 0 || q > MAX_Q) {
                return fail(format!("q = {q} outside 1..={MAX_Q}"));
            }
        }
        match &self.source {
            CorpusSource::Embedded { occs, .. } if occs.is_empty() => {
                fail("no occurrence counts given for the generated corpus".into())
            }
            CorpusSource::Embedded { .. } => Ok(()),
            _ if self.patterns_per_length == 0 => {
                fail("patterns per length must be at least 1".into())
            }
            _ => Ok(()),
        }
    }
}

/// SplitMix64 finalizer over the base seed and a few cell coordinates.
fn derive_seed(base: u64, parts: &[u64]) -> u64 {
    let mut z = base;
    for &p in parts {
        z = z.wrapping_add(0x9E37_79B9_7F4A_7C15).wrapping_add(p);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^= z >> 31;
    }
    z
}

struct Cell {
    label: String,
    text: Vec<u8>,
    patterns: Vec<Vec<u8>>,
    m: usize,
    /// Occurrence count the generator guarantees, when known.
    expected_occ: Option<u64>,
}

fn build_cells(spec: &BenchSpec) -> Result<Vec<Cell>> {
    let mut cells = Vec::new();
    match &spec.source {
        CorpusSource::File { .. } | CorpusSource::Fibonacci { .. } => {
            let (text, name) = match &spec.source {
                CorpusSource::File {
                    path,
                    strip_newlines,
                } => (load_text(path, *strip_newlines)?, path.display().to_string()),
                CorpusSource::Fibonacci { k } => (fibonacci_string(*k)?, format!("Fib_{k}")),
                CorpusSource::Embedded { .. } => unreachable!(),
            };
            for &m in &spec.pattern_lengths {
                let seed = derive_seed(spec.seed, &[m as u64]);
                let patterns = sample_patterns(&text, m, spec.patterns_per_length, seed)?;
                cells.push(Cell {
                    label: format!("{name} m={m}"),
                    text: text.clone(),
                    patterns,
                    m,
                    expected_occ: None,
                });
            }
        }
        CorpusSource::Embedded { n, sigma, occs } => {
            for &m in &spec.pattern_lengths {
                for &occ in occs {
                    let corpus = random_text_with_occurrences(&CorpusSpec {
                        n: *n,
                        sigma: *sigma,
                        m,
                        occ,
                        seed: derive_seed(spec.seed, &[m as u64, occ as u64]),
                    })?;
                    cells.push(Cell {
                        label: format!("generated n={n} sigma={sigma} m={m} occ={occ}"),
                        text: corpus.text,
                        patterns: vec![corpus.pattern],
                        m,
                        expected_occ: Some(occ as u64),
                    });
                }
            }
        }
    }
    Ok(cells)
}

/// (algorithm, q) pairs to run in a cell; q is 0 for algorithms without one.
fn variants(spec: &BenchSpec, m: usize) -> Vec<(Algorithm, usize)> {
    let mut out = Vec::new();
    for &algo in &spec.algorithms {
        if algo.uses_q() {
            let mut qs: Vec<usize> = spec.qs.iter().map(|&q| q.min(m)).collect();
            qs.sort_unstable();
            qs.dedup();
            out.extend(qs.into_iter().map(|q| (algo, q)));
        } else {
            out.push((algo, 0));
        }
    }
    out.dedup();
    out
}

struct Measurement {
    best_ms: f64,
    occ: u64,
    stats: SearchStats,
}

fn measure(spec: &BenchSpec, cell: &Cell, algo: Algorithm, q: usize) -> Result<Measurement> {
    let mut best: Option<Measurement> = None;
    for _ in 0..spec.trials {
        let mut occ = 0u64;
        let mut stats = SearchStats::default();
        let start = Instant::now();
        for _ in 0..spec.repetitions {
            occ = 0;
            stats = SearchStats::default();
            for p in &cell.patterns {
                let out = algo.run(black_box(&cell.text), black_box(p), q)?;
                occ += out.occurrences.len() as u64;
                stats.accumulate(&out.stats);
                black_box(&out);
            }
        }
        let ms = start.elapsed().as_secs_f64() * 1e3;
        match &mut best {
            None => {
                best = Some(Measurement {
                    best_ms: ms,
                    occ,
                    stats,
                })
            }
            Some(b) => {
                if b.occ != occ || b.stats != stats {
                    return Err(Error::CountMismatch {
                        cell: cell.label.clone(),
                        details: format!("{algo} q={q} produced different counters across trials"),
                    });
                }
                b.best_ms = b.best_ms.min(ms);
            }
        }
    }
    Ok(best.expect("trials >= 1"))
}

/// Runs every cell of `spec` sequentially and returns one row per
/// (cell, algorithm, q).
pub fn run_benchmark(spec: &BenchSpec) -> Result<Vec<ReportRow>> {
    spec.validate()?;
    let mut rows = Vec::new();
    for cell in build_cells(spec)? {
        let mut cell_rows: Vec<ReportRow> = Vec::new();
        for (algo, q) in variants(spec, cell.m) {
            let meas = measure(spec, &cell, algo, q)?;
            cell_rows.push(ReportRow {
                algorithm: algo,
                q,
                m: cell.m,
                n: cell.text.len(),
                occ: meas.occ,
                reps: spec.repetitions,
                total_ms: meas.best_ms,
                stats: meas.stats,
                seed: spec.seed,
            });
        }
        check_agreement(&cell, &cell_rows)?;
        rows.extend(cell_rows);
    }
    Ok(rows)
}

fn check_agreement(cell: &Cell, rows: &[ReportRow]) -> Result<()> {
    let reference = cell.expected_occ.or_else(|| rows.first().map(|r| r.occ));
    let Some(reference) = reference else {
        return Ok(());
    };
    if rows.iter().all(|r| r.occ == reference) {
        return Ok(());
    }
    let details = rows
        .iter()
        .map(|r| format!("{} q={} -> {}", r.algorithm, r.q, r.occ))
        .chain(cell.expected_occ.map(|e| format!("expected {e}")))
        .collect::<Vec<_>>()
        .join(", ");
    Err(Error::CountMismatch {
        cell: cell.label.clone(),
        details,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fib_spec() -> BenchSpec {
        BenchSpec {
            source: CorpusSource::Fibonacci { k: 20 },
            algorithms: vec![Algorithm::Kmp, Algorithm::Distq],
            qs: vec![3],
            pattern_lengths: vec![8],
            patterns_per_length: 4,
            repetitions: 10,
            trials: 3,
            seed: 1,
        }
    }

    #[test]
    fn fibonacci_cell() {
        let rows = run_benchmark(&fib_spec()).unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0].occ, rows[1].occ);
        assert!(rows[0].occ > 0);
        assert_eq!((rows[0].q, rows[1].q), (0, 3));
        assert_eq!(rows[0].n, 6765);

        let fib = fibonacci_string(20).unwrap();
        let pats = sample_patterns(&fib, 8, 4, derive_seed(1, &[8])).unwrap();
        let naive: usize = pats
            .iter()
            .map(|p| crate::matchers::naive_search(&fib, p).unwrap().len())
            .sum();
        assert_eq!(rows[0].occ, naive as u64);
    }

    #[test]
    fn invalid_specs() {
        let base = fib_spec();
        for bad in [
            BenchSpec {
                repetitions: 0,
                ..base.clone()
            },
            BenchSpec {
                trials: 0,
                ..base.clone()
            },
            BenchSpec {
                qs: vec![9],
                ..base.clone()
            },
            BenchSpec {
                algorithms: vec![],
                ..base.clone()
            },
            BenchSpec {
                pattern_lengths: vec![0],
                ..base.clone()
            },
        ] {
            assert!(matches!(run_benchmark(&bad), Err(Error::Config(_))), "{bad:?}");
        }
    }

    #[test]
    fn q_is_clamped_and_deduplicated() {
        let spec = BenchSpec {
            algorithms: vec![Algorithm::Naive, Algorithm::Ldistq],
            qs: vec![2, 4, 8],
            ..fib_spec()
        };
        let v = variants(&spec, 3);
        assert_eq!(
            v,
            vec![(Algorithm::Naive, 0), (Algorithm::Ldistq, 2), (Algorithm::Ldistq, 3)]
        );
    }

    #[test]
    fn disagreement_is_an_error() {
        let cell = Cell {
            label: "x".into(),
            text: vec![],
            patterns: vec![],
            m: 1,
            expected_occ: Some(3),
        };
        let row = |occ| ReportRow {
            algorithm: Algorithm::Kmp,
            q: 0,
            m: 1,
            n: 0,
            occ,
            reps: 1,
            total_ms: 0.0,
            stats: SearchStats::default(),
            seed: 0,
        };
        assert!(check_agreement(&cell, &[row(3), row(3)]).is_ok());
        let err = check_agreement(&cell, &[row(3), row(2)]).unwrap_err();
        assert!(matches!(err, Error::CountMismatch { .. }));
        assert!(err.to_string().contains("expected 3"));
    }

    #[test]
    fn embedded_cells() {
        let spec = BenchSpec {
            source: CorpusSource::Embedded {
                n: 20_000,
                sigma: 4,
                occs: vec![0, 64],
            },
            algorithms: vec![Algorithm::Hashq, Algorithm::Distq],
            qs: vec![3],
            pattern_lengths: vec![8],
            patterns_per_length: 0,
            repetitions: 2,
            trials: 2,
            seed: 5,
        };
        let rows = run_benchmark(&spec).unwrap();
        let occs: Vec<u64> = rows.iter().map(|r| r.occ).collect();
        assert_eq!(occs, vec![0, 0, 64, 64]);
    }

    #[test]
    fn seeds_differ_per_cell() {
        assert_ne!(derive_seed(1, &[8]), derive_seed(1, &[16]));
        assert_ne!(derive_seed(1, &[8, 0]), derive_seed(1, &[8, 1]));
        assert_eq!(derive_seed(7, &[8, 1]), derive_seed(7, &[8, 1]));
    }
}

use std::fmt::Write as _;
use std::str::FromStr;

use crate::corpus::RNG_NAME;
use crate::error::{Error, Result};
use crate::matchers::{Algorithm, SearchStats};

pub const CSV_HEADER: [&str; 14] = [
    "algo",
    "q",
    "m",
    "n",
    "occ",
    "reps",
    "total_ms",
    "char_cmp",
    "first_char_checks",
    "hash_char_reads",
    "hq_shifts",
    "dist_shifts",
    "kmp_shifts",
    "seed",
];

/// One benchmark measurement. `q` is 0 for algorithms without a q parameter;
/// `total_ms` is the best trial's wall time summed over all repetitions;
/// `occ` and `stats` cover one repetition over the cell's patterns.
#[derive(Debug, Clone, PartialEq)]
pub struct ReportRow {
    pub algorithm: Algorithm,
    pub q: usize,
    pub m: usize,
    pub n: usize,
    pub occ: u64,
    pub reps: usize,
    pub total_ms: f64,
    pub stats: SearchStats,
    pub seed: u64,
}

impl ReportRow {
    fn fields(&self) -> [String; 14] {
        let s = &self.stats;
        [
            self.algorithm.name().to_string(),
            self.q.to_string(),
            self.m.to_string(),
            self.n.to_string(),
            self.occ.to_string(),
            self.reps.to_string(),
            format!("{:.3}", self.total_ms),
            s.char_comparisons.to_string(),
            s.first_char_checks.to_string(),
            s.hashed_char_reads.to_string(),
            s.hq_shifts.to_string(),
            s.dist_shifts.to_string(),
            s.kmp_shifts.to_string(),
            self.seed.to_string(),
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Markdown,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(ReportFormat::Csv),
            "markdown" | "md" => Ok(ReportFormat::Markdown),
            other => Err(Error::Config(format!(
                "unknown report format `{other}` (expected csv or markdown)"
            ))),
        }
    }
}

pub fn emit_report(rows: &[ReportRow], format: ReportFormat) -> Result<String> {
    if rows.is_empty() {
        return Err(Error::EmptyReport);
    }
    match format {
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(CSV_HEADER)?;
            for row in rows {
                w.write_record(row.fields())?;
            }
            let bytes = w
                .into_inner()
                .map_err(|e| Error::Csv(e.into_error().into()))?;
            Ok(String::from_utf8(bytes).expect("report fields are ASCII"))
        }
        ReportFormat::Markdown => {
            let mut out = String::new();
            let _ = writeln!(out, "| {} |", CSV_HEADER.join(" | "));
            let _ = writeln!(out, "|{}", "---|".repeat(CSV_HEADER.len()));
            for row in rows {
                let _ = writeln!(out, "| {} |", row.fields().join(" | "));
            }
            let _ = writeln!(out, "\nCorpus generator: {RNG_NAME}");
            Ok(out)
        }
    }
}

fn field<T: FromStr>(record: &csv::StringRecord, idx: usize) -> Result<T> {
    let raw = record.get(idx).unwrap_or("");
    raw.parse().map_err(|_| {
        Error::Config(format!(
            "bad value `{raw}` in column {} of report",
            CSV_HEADER[idx]
        ))
    })
}

/// Parses a CSV report produced by [`emit_report`].
pub fn parse_csv(text: &str) -> Result<Vec<ReportRow>> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let header = reader.headers()?.clone();
    if header.iter().ne(CSV_HEADER.iter().copied()) {
        return Err(Error::Config(format!(
            "unexpected report header: {}",
            header.iter().collect::<Vec<_>>().join(",")
        )));
    }
    reader
        .records()
        .map(|rec| {
            let rec = rec?;
            Ok(ReportRow {
                algorithm: field(&rec, 0)?,
                q: field(&rec, 1)?,
                m: field(&rec, 2)?,
                n: field(&rec, 3)?,
                occ: field(&rec, 4)?,
                reps: field(&rec, 5)?,
                total_ms: field(&rec, 6)?,
                stats: SearchStats {
                    char_comparisons: field(&rec, 7)?,
                    first_char_checks: field(&rec, 8)?,
                    hashed_char_reads: field(&rec, 9)?,
                    hq_shifts: field(&rec, 10)?,
                    dist_shifts: field(&rec, 11)?,
                    kmp_shifts: field(&rec, 12)?,
                    windows: 0,
                },
                seed: field(&rec, 13)?,
            })
        })
        .collect()
}

use std::io::Write;

use crate::error::{Error, Result};
use crate::hashing::MAX_Q;
use crate::matchers::Algorithm;

#[derive(Debug, Clone)]
pub struct SearchRequest<'a> {
    pub text: &'a [u8],
    pub pattern: &'a [u8],
    pub algorithm: Algorithm,
    pub q: usize,
    pub zero_based: bool,
}

/// Runs one search and prints a position per line to `out`.
///
/// q is clamped to `min(q, m, 8)` with a warning on `diag`. Returns the
/// process exit status: 0 when something matched, 1 when nothing did.
/// Errors map to status 2 at the call site.
pub fn run_search_command(
    req: &SearchRequest<'_>,
    out: &mut dyn Write,
    diag: &mut dyn Write,
) -> Result<i32> {
    if req.pattern.is_empty() {
        return Err(Error::EmptyPattern);
    }
    let io_err = |source| Error::Io {
        path: "<stdout>".into(),
        source,
    };
    let mut q = req.q;
    if req.algorithm.uses_q() {
        if q == 0 {
            return Err(Error::QOutOfRange { q, max: MAX_Q });
        }
        let clamped = q.min(req.pattern.len()).min(MAX_Q);
        if clamped != q {
            let _ = writeln!(
                diag,
                "warning: q={q} clamped to {clamped} (pattern length {}, maximum {MAX_Q})",
                req.pattern.len()
            );
            q = clamped;
        }
    }
    let outcome = req.algorithm.run(req.text, req.pattern, q)?;
    for &p in outcome.occurrences.positions() {
        let p = if req.zero_based { p - 1 } else { p };
        writeln!(out, "{p}").map_err(io_err)?;
    }
    Ok(if outcome.occurrences.is_empty() { 1 } else { 0 })
}

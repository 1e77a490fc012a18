//! Python bindings: `import pydistq`.
//!
//! Byte arguments accept `bytes`; positions are 1-based like the Rust API.

use pyo3::exceptions::{PyOSError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyBytes;

use distq::corpus::{self, CorpusSpec};
use distq::{Algorithm, Error, HashingMode};

fn to_py_err(e: Error) -> PyErr {
    match e {
        Error::Io { .. } => PyOSError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

/// Work counters of one search.
#[pyclass(name = "SearchStats", frozen, get_all, skip_from_py_object)]
#[derive(Clone)]
pub struct PySearchStats {
    char_comparisons: u64,
    first_char_checks: u64,
    hashed_char_reads: u64,
    hq_shifts: u64,
    dist_shifts: u64,
    kmp_shifts: u64,
    windows: u64,
}

impl From<distq::SearchStats> for PySearchStats {
    fn from(s: distq::SearchStats) -> Self {
        PySearchStats {
            char_comparisons: s.char_comparisons,
            first_char_checks: s.first_char_checks,
            hashed_char_reads: s.hashed_char_reads,
            hq_shifts: s.hq_shifts,
            dist_shifts: s.dist_shifts,
            kmp_shifts: s.kmp_shifts,
            windows: s.windows,
        }
    }
}

#[pymethods]
impl PySearchStats {
    fn __repr__(&self) -> String {
        format!(
            "SearchStats(char_comparisons={}, first_char_checks={}, hashed_char_reads={}, \
             hq_shifts={}, dist_shifts={}, kmp_shifts={}, windows={})",
            self.char_comparisons,
            self.first_char_checks,
            self.hashed_char_reads,
            self.hq_shifts,
            self.dist_shifts,
            self.kmp_shifts,
            self.windows
        )
    }
}

type Outcome = (Vec<usize>, PySearchStats);

fn outcome(o: distq::SearchOutcome) -> Outcome {
    (o.occurrences.into_vec(), o.stats.into())
}

/// Pattern preprocessed for DISTq/LDISTq.
#[pyclass(name = "PatternProfile", frozen)]
pub struct PyPatternProfile {
    inner: distq::PatternProfile,
}

#[pymethods]
impl PyPatternProfile {
    #[new]
    #[pyo3(signature = (pattern, q, rolling = false))]
    fn new(pattern: &[u8], q: usize, rolling: bool) -> PyResult<Self> {
        let mode = if rolling {
            HashingMode::Rolling
        } else {
            HashingMode::Direct
        };
        distq::PatternProfile::with_mode(pattern, q, mode)
            .map(|inner| PyPatternProfile { inner })
            .map_err(to_py_err)
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    #[getter]
    fn q(&self) -> usize {
        self.inner.q()
    }

    #[getter]
    fn pattern<'py>(&self, py: Python<'py>) -> Bound<'py, PyBytes> {
        PyBytes::new(py, self.inner.pattern())
    }

    /// KMP shifts for j = 1..=m+1.
    fn kmp_shifts(&self) -> Vec<usize> {
        self.inner.kmp().to_vec()
    }

    /// dist for j = 1..=m.
    fn dist(&self) -> Vec<usize> {
        self.inner.dist().to_vec()
    }

    fn hq_shift(&self, hash: u16) -> usize {
        self.inner.hq().get(hash.into())
    }

    #[getter]
    fn hq_default_shift(&self) -> usize {
        self.inner.hq().default_shift()
    }

    fn __repr__(&self) -> String {
        format!("PatternProfile(m={}, q={})", self.inner.m(), self.inner.q())
    }
}

#[pyfunction]
fn qgram_hash16(gram: &[u8]) -> PyResult<u16> {
    distq::qgram_hash16(gram, gram.len())
        .map(|h| h.value())
        .map_err(to_py_err)
}

#[pyfunction]
fn qgram_hash8(gram: &[u8]) -> PyResult<u8> {
    distq::qgram_hash8(gram, gram.len())
        .map(|h| h.value())
        .map_err(to_py_err)
}

#[pyfunction]
fn roll_hash16(prev: u16, out_byte: u8, in_byte: u8, q: usize) -> PyResult<u16> {
    let ctx = distq::RollContext::new(q).map_err(to_py_err)?;
    Ok(ctx.roll(prev.into(), out_byte, in_byte).value())
}

#[pyfunction]
fn naive_search(text: &[u8], pattern: &[u8]) -> PyResult<Vec<usize>> {
    distq::naive_search(text, pattern)
        .map(|o| o.into_vec())
        .map_err(to_py_err)
}

#[pyfunction]
fn kmp_search(text: &[u8], pattern: &[u8]) -> PyResult<Outcome> {
    distq::kmp_search(text, pattern)
        .map(outcome)
        .map_err(to_py_err)
}

#[pyfunction]
fn hashq_search(text: &[u8], pattern: &[u8], q: usize) -> PyResult<Outcome> {
    distq::hashq_search(text, pattern, q)
        .map(outcome)
        .map_err(to_py_err)
}

#[pyfunction]
fn distq_search(py: Python<'_>, text: &[u8], profile: &PyPatternProfile) -> Outcome {
    py.detach(|| outcome(distq::distq_search(text, &profile.inner)))
}

#[pyfunction]
fn ldistq_search(py: Python<'_>, text: &[u8], profile: &PyPatternProfile) -> Outcome {
    py.detach(|| outcome(distq::ldistq_search(text, &profile.inner)))
}

/// Returns `(positions, shifts, pos_values)` where each shift is `(kind, amount)`.
#[pyfunction]
#[pyo3(signature = (text, profile, rolling = false))]
fn distq_trace(
    text: &[u8],
    profile: &PyPatternProfile,
    rolling: bool,
) -> (Vec<usize>, Vec<(String, usize)>, Vec<usize>) {
    let (out, trace) = if rolling {
        distq::ldistq_search_traced(text, &profile.inner)
    } else {
        distq::distq_search_traced(text, &profile.inner)
    };
    let shifts = trace
        .shifts
        .iter()
        .map(|s| (s.kind.to_string(), s.amount))
        .collect();
    (out.occurrences.into_vec(), shifts, trace.positions)
}

/// Preprocess and search with any algorithm by name.
#[pyfunction]
#[pyo3(signature = (text, pattern, algorithm = "distq", q = 4))]
fn search(py: Python<'_>, text: &[u8], pattern: &[u8], algorithm: &str, q: usize) -> PyResult<Outcome> {
    let algo: Algorithm = algorithm.parse().map_err(to_py_err)?;
    py.detach(|| algo.run(text, pattern, q))
        .map(outcome)
        .map_err(to_py_err)
}

#[pyfunction]
fn fibonacci_string(py: Python<'_>, k: usize) -> PyResult<Bound<'_, PyBytes>> {
    let s = corpus::fibonacci_string(k).map_err(to_py_err)?;
    Ok(PyBytes::new(py, &s))
}

/// Returns `(text, pattern, positions)`.
#[pyfunction]
fn random_text_with_occurrences(
    py: Python<'_>,
    n: usize,
    sigma: usize,
    m: usize,
    occ: usize,
    seed: u64,
) -> PyResult<(Bound<'_, PyBytes>, Bound<'_, PyBytes>, Vec<usize>)> {
    let spec = CorpusSpec {
        n,
        sigma,
        m,
        occ,
        seed,
    };
    let c = corpus::random_text_with_occurrences(&spec).map_err(to_py_err)?;
    Ok((
        PyBytes::new(py, &c.text),
        PyBytes::new(py, &c.pattern),
        c.positions,
    ))
}

#[pyfunction]
fn sample_patterns<'py>(
    py: Python<'py>,
    text: &[u8],
    m: usize,
    count: usize,
    seed: u64,
) -> PyResult<Vec<Bound<'py, PyBytes>>> {
    let pats = corpus::sample_patterns(text, m, count, seed).map_err(to_py_err)?;
    Ok(pats.iter().map(|p| PyBytes::new(py, p)).collect())
}

#[pyfunction]
#[pyo3(signature = (path, strip_newlines = false))]
fn load_text(py: Python<'_>, path: std::path::PathBuf, strip_newlines: bool) -> PyResult<Bound<'_, PyBytes>> {
    let bytes = corpus::load_text(path, strip_newlines).map_err(to_py_err)?;
    Ok(PyBytes::new(py, &bytes))
}

#[pymodule]
pub fn pydistq(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPatternProfile>()?;
    m.add_class::<PySearchStats>()?;
    m.add_function(wrap_pyfunction!(qgram_hash16, m)?)?;
    m.add_function(wrap_pyfunction!(qgram_hash8, m)?)?;
    m.add_function(wrap_pyfunction!(roll_hash16, m)?)?;
    m.add_function(wrap_pyfunction!(naive_search, m)?)?;
    m.add_function(wrap_pyfunction!(kmp_search, m)?)?;
    m.add_function(wrap_pyfunction!(hashq_search, m)?)?;
    m.add_function(wrap_pyfunction!(distq_search, m)?)?;
    m.add_function(wrap_pyfunction!(ldistq_search, m)?)?;
    m.add_function(wrap_pyfunction!(distq_trace, m)?)?;
    m.add_function(wrap_pyfunction!(search, m)?)?;
    m.add_function(wrap_pyfunction!(fibonacci_string, m)?)?;
    m.add_function(wrap_pyfunction!(random_text_with_occurrences, m)?)?;
    m.add_function(wrap_pyfunction!(sample_patterns, m)?)?;
    m.add_function(wrap_pyfunction!(load_text, m)?)?;
    m.add("MAX_Q", distq::MAX_Q)?;
    Ok(())
}

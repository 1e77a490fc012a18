use pyo3::prelude::*;
use pyo3::types::PyModule;

fn run(code: &std::ffi::CStr) {
    Python::attach(|py| {
        let m = PyModule::new(py, "pydistq").unwrap();
        pydistq::pydistq(&m).unwrap();
        let globals = pyo3::types::PyDict::new(py);
        globals.set_item("pydistq", m).unwrap();
        if let Err(e) = py.run(code, Some(&globals), None) {
            e.print(py);
            panic!("python check failed");
        }
    });
}

#[test]
fn example_search_and_trace() {
    run(c"
T = b'abbaabbaababbabbaaabaabaabbaaa'
prof = pydistq.PatternProfile(b'abaabbaaa', 3)
occ, stats = pydistq.distq_search(T, prof)
assert occ == [22], occ
assert stats.hq_shifts == 3 and stats.kmp_shifts == 1
positions, shifts, pos = pydistq.distq_trace(T, prof)
assert shifts == [('HQ', 1), ('dist', 4), ('HQ', 2), ('dist', 5), ('HQ', 6), ('KMP', 3)], shifts
assert pos == [8, 7, 3]
assert pydistq.distq_trace(T, pydistq.PatternProfile(b'abaabbaaa', 3, rolling=True), rolling=True)[1] == shifts
assert prof.kmp_shifts() == [1, 1, 3, 2, 4, 3, 7, 6, 7, 8]
assert prof.dist()[2:] == [1, 2, 3, 4, 5, 4, 7]
assert prof.hq_shift(2037) == 0 and prof.hq_default_shift == 7
");
}

#[test]
fn hashes_and_baselines() {
    run(c"
assert pydistq.qgram_hash16(b'aba') == 2041
assert pydistq.roll_hash16(2041, ord('a'), ord('a'), 3) == 2053
for algo in ['naive', 'kmp', 'hashq', 'distq', 'ldistq']:
    occ, _ = pydistq.search(b'banana', b'ana', algo, 2)
    assert occ == [2, 4], (algo, occ)
assert pydistq.naive_search(b'banana', b'na') == [3, 5]
assert pydistq.fibonacci_string(5) == b'abaab'
text, pat, pos = pydistq.random_text_with_occurrences(3000, 4, 8, 10, 1)
assert len(text) == 3000 and len(pos) == 10
assert pydistq.naive_search(text, pat) == pos
assert pydistq.MAX_Q == 8
");
}

#[test]
fn errors_map_to_python_exceptions() {
    run(c"
for bad in [lambda: pydistq.PatternProfile(b'abc', 9), lambda: pydistq.kmp_search(b'abc', b''),
            lambda: pydistq.search(b'abc', b'a', 'nope')]:
    try:
        bad()
    except ValueError:
        pass
    else:
        raise AssertionError('expected ValueError')
try:
    pydistq.load_text('/nonexistent/path')
except OSError:
    pass
else:
    raise AssertionError('expected OSError')
");
}

use proptest::prelude::*;

use distq::{
    distq_search, hashq_search, kmp_search, ldistq_search, naive_search, HashingMode,
    PatternProfile,
};

fn brute_force(text: &[u8], pattern: &[u8]) -> Vec<usize> {
    (0..text.len().saturating_sub(pattern.len() - 1))
        .filter(|&i| text[i..].starts_with(pattern))
        .map(|i| i + 1)
        .collect()
}

fn text_and_pattern() -> impl Strategy<Value = (Vec<u8>, Vec<u8>, usize)> {
    (2u8..=4, 0usize..300, 1usize..20).prop_flat_map(|(sigma, n, m)| {
        let byte = b'a'..b'a' + sigma;
        (
            proptest::collection::vec(byte.clone(), n),
            proptest::collection::vec(byte, m),
            1..=m.min(8),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn all_matchers_agree((text, pattern, q) in text_and_pattern()) {
        let want = brute_force(&text, &pattern);
        let direct = PatternProfile::with_mode(&pattern, q, HashingMode::Direct).unwrap();
        let rolling = PatternProfile::with_mode(&pattern, q, HashingMode::Rolling).unwrap();
        let results = [
            ("naive", naive_search(&text, &pattern).unwrap().into_vec()),
            ("kmp", kmp_search(&text, &pattern).unwrap().occurrences.into_vec()),
            ("hashq", hashq_search(&text, &pattern, q).unwrap().occurrences.into_vec()),
            ("distq", distq_search(&text, &direct).occurrences.into_vec()),
            ("ldistq", ldistq_search(&text, &rolling).occurrences.into_vec()),
        ];
        for (name, got) in results {
            prop_assert_eq!(&got, &want, "{}", name);
        }
    }

    #[test]
    fn embedded_pattern_is_found(
        prefix in proptest::collection::vec(b'a'..b'c', 0..100),
        pattern in proptest::collection::vec(b'a'..b'c', 1..30),
        suffix in proptest::collection::vec(b'a'..b'c', 0..100),
        q in 1usize..=8,
    ) {
        let q = q.min(pattern.len());
        let text = [prefix.as_slice(), &pattern, &suffix].concat();
        let profile = PatternProfile::new(&pattern, q).unwrap();
        let out = distq_search(&text, &profile);
        prop_assert!(out.occurrences.positions().contains(&(prefix.len() + 1)));
    }
}

#[test]
fn pattern_longer_than_text() {
    let profile = PatternProfile::new(b"abcdefgh", 4).unwrap();
    assert!(distq_search(b"abc", &profile).occurrences.is_empty());
    assert!(ldistq_search(b"", &profile).occurrences.is_empty());
    assert!(kmp_search(b"abc", b"abcd").unwrap().occurrences.is_empty());
    assert!(hashq_search(b"abc", b"abcd", 2).unwrap().occurrences.is_empty());
}

#[test]
fn full_byte_range() {
    let text: Vec<u8> = (0..=255u8).cycle().take(2000).collect();
    let pattern: Vec<u8> = (250..=255u8).chain(0..4).collect();
    let want = brute_force(&text, &pattern);
    assert_eq!(want.len(), 7);
    for q in 1..=8 {
        let profile = PatternProfile::new(&pattern, q).unwrap();
        assert_eq!(distq_search(&text, &profile).occurrences.positions(), &want[..]);
        assert_eq!(ldistq_search(&text, &profile).occurrences.positions(), &want[..]);
    }
}

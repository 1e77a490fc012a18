//! q-gram hash functions.
//!
//! Two hashes are used. [`qgram_hash16`] weights byte `x[i]` by `4^(q-i)`
//! and reduces mod 2^16; it drives the `HQ_Shift` and `dist` tables and
//! supports a constant-time rolling update ([`RollContext::roll`]).
//! [`qgram_hash8`] weights by powers of two and reduces mod 2^8; it is only
//! used by the HASHq baseline.
//!
//! All arithmetic stays inside `u32` and masks explicitly, so no step depends
//! on machine wrap-around.

use crate::error::{Error, Result};

/// Largest supported q-gram length. For q >= 9 the leading weight
/// `4^(q-1)` is a multiple of 2^16 and the first byte would vanish.
pub const MAX_Q: usize = 8;

/// Number of distinct [`Hash16`] values, i.e. the size of the hash-indexed tables.
pub const HASH16_SPACE: usize = 1 << 16;

/// Number of distinct [`Hash8`] values.
pub const HASH8_SPACE: usize = 1 << 8;

const MASK16: u32 = 0xFFFF;
const MASK8: u32 = 0xFF;

/// Value of the base-4 q-gram hash, always below 2^16.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hash16(u16);

impl Hash16 {
    pub const fn value(self) -> u16 {
        self.0
    }

    pub const fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<u16> for Hash16 {
    fn from(v: u16) -> Self {
        Hash16(v)
    }
}

/// Value of the base-2 q-gram hash, always below 2^8.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hash8(u8);

impl Hash8 {
    pub const fn value(self) -> u8 {
        self.0
    }

    pub const fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<u8> for Hash8 {
    fn from(v: u8) -> Self {
        Hash8(v)
    }
}

/// Checks `1 <= q <= MAX_Q`.
pub fn check_q(q: usize) -> Result<()> {
    if (1..=MAX_Q).contains(&q) {
        Ok(())
    } else {
        Err(Error::QOutOfRange { q, max: MAX_Q })
    }
}

fn check_gram(x: &[u8], q: usize) -> Result<()> {
    check_q(q)?;
    if x.len() != q {
        return Err(Error::LengthMismatch {
            expected: q,
            got: x.len(),
        });
    }
    Ok(())
}

/// `(4^(q-1)·x[1] + … + 4·x[q-1] + x[q]) mod 2^16` for `q = x.len()`.
pub fn qgram_hash16(x: &[u8], q: usize) -> Result<Hash16> {
    check_gram(x, q)?;
    Ok(hash16(x))
}

/// `(2^(q-1)·x[1] + … + 2·x[q-1] + x[q]) mod 2^8` for `q = x.len()`.
pub fn qgram_hash8(x: &[u8], q: usize) -> Result<Hash8> {
    check_gram(x, q)?;
    Ok(hash8(x))
}

/// Unchecked base-4 hash of the whole slice (Horner form).
#[inline]
pub(crate) fn hash16(x: &[u8]) -> Hash16 {
    let mut h: u32 = 0;
    for &b in x {
        h = ((h << 2) + b as u32) & MASK16;
    }
    Hash16(h as u16)
}

/// Unchecked base-2 hash of the whole slice (Horner form).
#[inline]
pub(crate) fn hash8(x: &[u8]) -> Hash8 {
    let mut h: u32 = 0;
    for &b in x {
        h = ((h << 1) + b as u32) & MASK8;
    }
    Hash8(h as u8)
}

/// Precomputed leading-term weight for rolling the base-4 hash one byte to the right.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RollContext {
    q: usize,
    pow4: u16,
}

impl RollContext {
    pub fn new(q: usize) -> Result<Self> {
        check_q(q)?;
        // 4^(q-1) <= 4^7 = 16384, no reduction needed for q <= 8.
        let pow4 = 1u32 << (2 * (q - 1));
        Ok(RollContext {
            q,
            pow4: (pow4 & MASK16) as u16,
        })
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// `4^(q-1) mod 2^16`.
    pub fn pow4(&self) -> u16 {
        self.pow4
    }

    /// Hash of the window shifted right by one: drops `out_byte` on the
    /// left and appends `in_byte` on the right.
    #[inline]
    pub fn roll(&self, prev: Hash16, out_byte: u8, in_byte: u8) -> Hash16 {
        // Adding 2^24 keeps the difference non-negative: pow4 * 255 < 2^22.
        let lead = self.pow4 as u32 * out_byte as u32;
        let diff = (prev.0 as u32 + (1 << 24) - lead) & MASK16;
        Hash16((((diff << 2) + in_byte as u32) & MASK16) as u16)
    }
}

/// Free-function form of [`RollContext::roll`].
pub fn roll_hash16(prev: Hash16, out_byte: u8, in_byte: u8, ctx: &RollContext) -> Hash16 {
    ctx.roll(prev, out_byte, in_byte)
}

/// Base-4 hashes of every q-gram of `p`, in order of their end position.
/// Costs `O(|p|·q)`.
pub(crate) fn qgram_hashes_direct(p: &[u8], q: usize) -> Vec<Hash16> {
    p.windows(q).map(hash16).collect()
}

/// Same values as [`qgram_hashes_direct`] with one full hash and rolling
/// updates afterwards; costs `O(|p|)`.
pub(crate) fn qgram_hashes_rolling(p: &[u8], ctx: &RollContext) -> Vec<Hash16> {
    let q = ctx.q();
    if p.len() < q {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(p.len() - q + 1);
    let mut h = hash16(&p[..q]);
    out.push(h);
    for e in q..p.len() {
        h = ctx.roll(h, p[e - q], p[e]);
        out.push(h);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Evaluates the weighted sum exactly, reducing only at the end.
    fn oracle(x: &[u8], base: u128, modulus: u128) -> u128 {
        let q = x.len() as u32;
        x.iter()
            .enumerate()
            .map(|(i, &b)| base.pow(q - 1 - i as u32) * b as u128)
            .sum::<u128>()
            % modulus
    }

    #[test]
    fn hash16_example_table() {
        let table = [
            ("aba", 2041),
            ("baa", 2053),
            ("aab", 2038),
            ("abb", 2042),
            ("bba", 2057),
            ("aaa", 2037),
        ];
        for (gram, expected) in table {
            assert_eq!(qgram_hash16(gram.as_bytes(), 3).unwrap().value(), expected, "{gram}");
        }
        assert_eq!(qgram_hash16(b"a", 1).unwrap().value(), 97);
    }

    #[test]
    fn hash8_values() {
        assert_eq!(qgram_hash8(b"a", 1).unwrap().value(), 97);
        assert_eq!(oracle(b"ab", 2, 256), 36);
        assert_eq!(qgram_hash8(b"ab", 2).unwrap().value(), 36);
        assert_eq!(oracle(b"aaa", 2, 256), 167);
        assert_eq!(qgram_hash8(b"aaa", 3).unwrap().value(), 167);
    }

    #[test]
    fn length_and_range_errors() {
        assert!(matches!(
            qgram_hash16(b"ab", 3),
            Err(Error::LengthMismatch { expected: 3, got: 2 })
        ));
        assert!(matches!(qgram_hash8(b"", 0), Err(Error::QOutOfRange { .. })));
        assert!(matches!(
            qgram_hash16(b"aaaaaaaaa", 9),
            Err(Error::QOutOfRange { q: 9, .. })
        ));
        assert!(RollContext::new(0).is_err());
        assert!(RollContext::new(9).is_err());
    }

    #[test]
    fn pow4_values() {
        for q in 1..=MAX_Q {
            let ctx = RollContext::new(q).unwrap();
            assert_eq!(ctx.pow4() as u128, 4u128.pow(q as u32 - 1) % 65536);
            assert_ne!(ctx.pow4(), 0);
        }
    }

    #[test]
    fn roll_examples() {
        let ctx3 = RollContext::new(3).unwrap();
        assert_eq!(ctx3.roll(Hash16(2041), b'a', b'a').value(), 2053);
        assert_eq!(ctx3.roll(Hash16(2037), b'a', b'b').value(), 2038);
        let ctx1 = RollContext::new(1).unwrap();
        assert_eq!(roll_hash16(Hash16(97), b'a', b'b', &ctx1).value(), 98);
    }

    #[test]
    fn rolling_and_direct_pattern_hashes_agree() {
        let p = b"abaabbaaa";
        let ctx = RollContext::new(3).unwrap();
        assert_eq!(qgram_hashes_direct(p, 3), qgram_hashes_rolling(p, &ctx));
        assert!(qgram_hashes_rolling(b"ab", &ctx).is_empty());
    }

    proptest! {
        #[test]
        fn hashes_match_oracle(x in proptest::collection::vec(any::<u8>(), 1..=MAX_Q)) {
            let q = x.len();
            prop_assert_eq!(qgram_hash16(&x, q).unwrap().value() as u128, oracle(&x, 4, 1 << 16));
            prop_assert_eq!(qgram_hash8(&x, q).unwrap().value() as u128, oracle(&x, 2, 1 << 8));
        }

        #[test]
        fn roll_equals_recompute(
            w in proptest::collection::vec(any::<u8>(), 9..64),
            q in 1usize..=MAX_Q,
        ) {
            let ctx = RollContext::new(q).unwrap();
            for i in 0..w.len() - q {
                let prev = qgram_hash16(&w[i..i + q], q).unwrap();
                let next = qgram_hash16(&w[i + 1..i + 1 + q], q).unwrap();
                prop_assert_eq!(ctx.roll(prev, w[i], w[i + q]), next);
            }
        }
    }
}

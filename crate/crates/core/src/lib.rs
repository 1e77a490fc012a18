//! Exact byte-string matching with q-gram distance shifts.
//!
//! The two main searchers, [`distq_search`] and [`ldistq_search`], combine
//! three shift functions computed from the pattern:
//!
//! * `HQ_Shift`, indexed by a 16-bit hash of the text window's suffix q-gram,
//!   aligns it with the rightmost pattern q-gram of equal hash;
//! * `dist`, which for every pattern q-gram gives the distance back to the
//!   previous q-gram with the same hash, so a window that failed after a
//!   hash match can be shifted without hashing again;
//! * the KMP strong-border shift, which keeps the character comparison cursor
//!   from moving left and makes the search linear in the text length.
//!
//! LDISTq computes the alignment hashes with a rolling update, bringing the
//! worst case from `O(q(n+m))` down to `O(n+m)`.
//!
//! ```
//! use distq::{distq_search, PatternProfile};
//!
//! let profile = PatternProfile::new(b"abaabbaaa", 3).unwrap();
//! let out = distq_search(b"abbaabbaababbabbaaabaabaabbaaa", &profile);
//! assert_eq!(out.occurrences.positions(), &[22]);
//! ```
//!
//! Positions are 1-based throughout. The crate also ships the naive, KMP and
//! HASHq baselines, experiment corpus generators ([`corpus`]) and a
//! benchmark harness ([`bench`]) used by the `distq` binary.

pub mod bench;
pub mod corpus;
pub mod error;
pub mod hashing;
pub mod matchers;
pub mod preprocess;

pub use error::{Error, Result};
pub use hashing::{qgram_hash16, qgram_hash8, roll_hash16, Hash16, Hash8, RollContext, MAX_Q};
pub use matchers::{
    distq_search, distq_search_traced, hashq_search, kmp_search, ldistq_search,
    ldistq_search_traced, naive_search, Algorithm, Occurrences, SearchOutcome, SearchStats,
    SearchTrace, Shift, ShiftKind,
};
pub use preprocess::{build_profile, HashingMode, PatternProfile};

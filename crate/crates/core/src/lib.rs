//! Exact-arithmetic toolkit for matroid basis counting and spanning-tree
//! constructions.
//!
//! Everything here is computed over big integers and big rationals; there is
//! no floating point on any verdict path. All values are immutable after
//! construction and all operations are pure functions of their inputs, so
//! they can be shared and sent between threads freely.

pub mod atlas;
pub mod bits;
pub mod cfrac;
pub mod counting;
pub mod equality;
pub mod error;
pub mod graph;
pub mod io;
pub mod matroid;
pub mod reductions;
pub mod rng;
pub mod suite;
pub mod treesmith;
pub mod vanishing;

pub use error::{Error, Result};

/// Exact integer type used for all counts.
pub type Int = num::BigInt;
/// Exact rational type used for all normalized values and verdicts.
pub type Rat = num::BigRational;

pub(crate) fn int(v: u64) -> Int {
    Int::from(v)
}

pub(crate) fn rat_int(v: u64) -> Rat {
    Rat::from_integer(Int::from(v))
}

/// Default cap on ground-set size for operations that enumerate bases or
/// independent sets exhaustively.
pub const DEFAULT_BRUTE_LIMIT: usize = 24;

/// Effective enumeration cap: `SY_LAB_BRUTE_LIMIT` overrides the default.
/// Read once; the representation itself supports up to 64 elements.
pub fn brute_limit() -> usize {
    use std::sync::OnceLock;
    static LIMIT: OnceLock<usize> = OnceLock::new();
    *LIMIT.get_or_init(|| {
        std::env::var("SY_LAB_BRUTE_LIMIT")
            .ok()
            .and_then(|s| s.parse().ok())
            .filter(|&v| v > 0 && v <= 64)
            .unwrap_or(DEFAULT_BRUTE_LIMIT)
    })
}

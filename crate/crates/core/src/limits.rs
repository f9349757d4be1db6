//! Process-wide resource guards.
//!
//! Every criterion in this crate enumerates faces or vertex subsets, so the
//! guards are checked up front and turn runaway inputs into errors instead of
//! exhausting memory.

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};

/// Default cap on the total number of faces (including the empty face).
pub const DEFAULT_MAX_FACES: usize = 1 << 22;
/// Default cap on the number of vertex subsets an m-check may enumerate.
pub const DEFAULT_MAX_SUBSETS: u64 = 1_000_000;
/// Default cap on the bit length of any intermediate integer in exact
/// rational elimination.
pub const DEFAULT_MAX_BITS: u64 = 1 << 20;

static MAX_FACES: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_FACES);
static MAX_SUBSETS: AtomicU64 = AtomicU64::new(DEFAULT_MAX_SUBSETS);
static MAX_BITS: AtomicU64 = AtomicU64::new(DEFAULT_MAX_BITS);

pub fn max_faces() -> usize {
    MAX_FACES.load(Ordering::Relaxed)
}

pub fn set_max_faces(limit: usize) {
    MAX_FACES.store(limit, Ordering::Relaxed);
}

pub fn max_subsets() -> u64 {
    MAX_SUBSETS.load(Ordering::Relaxed)
}

pub fn set_max_subsets(limit: u64) {
    MAX_SUBSETS.store(limit, Ordering::Relaxed);
}

pub fn max_bits() -> u64 {
    MAX_BITS.load(Ordering::Relaxed)
}

pub fn set_max_bits(limit: u64) {
    MAX_BITS.store(limit, Ordering::Relaxed);
}

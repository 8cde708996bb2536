//! The single random-number generator type used by every seeded routine.
//!
//! ChaCha8 is portable and its stream is stable across platforms and crate
//! releases, which the golden-trace tests rely on.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type SimRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SimRng {
    SimRng::seed_from_u64(seed)
}

//! Seeded randomness for the verification suites.
//!
//! All random inputs come from ChaCha8 seeded with a `u64`, so every failing
//! case can be replayed from its seed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactnum::{rat, Rational};

pub type SeedRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SeedRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A small rational with numerator in `-5..=5` and denominator in `1..=3`.
pub fn small_rational(rng: &mut SeedRng) -> Rational {
    rat(rng.gen_range(-5..=5), rng.gen_range(1..=3))
}

/// A small nonzero rational.
pub fn small_nonzero(rng: &mut SeedRng) -> Rational {
    loop {
        let r = small_rational(rng);
        if r != rat(0, 1) {
            return r;
        }
    }
}

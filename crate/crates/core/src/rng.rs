//! Seeded randomness shared by the randomized procedures.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::{Scalar, Vector};

/// Deterministic generator used throughout the crate.
pub type SeededRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A rational `p/q` with `|p| <= 6`, `1 <= q <= 3`.
pub fn small_scalar<F: Scalar, R: Rng + ?Sized>(rng: &mut R) -> F {
    F::from_ratio(rng.random_range(-6..=6), rng.random_range(1..=3))
}

pub fn small_vector<F: Scalar, R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vector<F> {
    (0..n).map(|_| small_scalar(rng)).collect()
}

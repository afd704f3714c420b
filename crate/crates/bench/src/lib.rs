//! Inputs shared by the benchmarks.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use singeq_core::{Field, Mat};

pub fn gf(p: u64) -> Field {
    Field::new(p).expect("prime")
}

/// A seeded `n × n` matrix of rank at most `rank`.
pub fn low_rank(field: Field, n: usize, rank: usize, seed: u64) -> Mat {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = Mat::random(field, n, rank, &mut rng);
    let b = Mat::random(field, rank, n, &mut rng);
    a.mul(&b)
}

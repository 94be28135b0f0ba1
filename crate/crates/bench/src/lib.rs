//! Seeded inputs shared by the benchmarks.

use rand::Rng;
use wfrec_core::harness::seeded_rng;
use wfrec_core::ordinal::{random_ordinal, Ordinal};

pub fn random_lists(seed: u64, count: usize, len: usize) -> Vec<Vec<i64>> {
    let mut rng = seeded_rng(seed);
    (0..count)
        .map(|_| (0..len).map(|_| rng.gen_range(-1000..1000)).collect())
        .collect()
}

pub fn ordinal_pairs(seed: u64, count: usize, height: usize) -> Vec<(Ordinal, Ordinal)> {
    let mut rng = seeded_rng(seed);
    (0..count)
        .map(|_| (random_ordinal(&mut rng, height, 3, 4), random_ordinal(&mut rng, height, 3, 4)))
        .collect()
}

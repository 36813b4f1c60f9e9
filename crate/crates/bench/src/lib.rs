//! Seeded inputs shared by the benchmarks in `benches/`.

use hypquat::sampling::{random_boundary_triple, random_isometry, Field};
use hypquat::{Isometry, Triple};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn quaternionic_triples(count: usize, seed: u64) -> Vec<Triple> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_boundary_triple(&mut rng, 2, Field::Quaternion)).collect()
}

pub fn quaternionic_isometries(count: usize, seed: u64) -> Vec<Isometry> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_isometry(&mut rng, 2, Field::Quaternion, 1.5)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inputs_are_reproducible() {
        assert_eq!(quaternionic_triples(3, 1), quaternionic_triples(3, 1));
        assert_eq!(quaternionic_isometries(2, 1).len(), 2);
    }
}

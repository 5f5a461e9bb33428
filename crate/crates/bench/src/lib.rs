//! Seeded inputs shared by the benchmarks.

use axb_core::ktheory::IntMatrix;
use axb_core::word::random_word;
use axb_core::{Letter, Mode};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn words(count: usize, len: usize, mode: Mode, seed: u64) -> Vec<Vec<Letter>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_word(&mut rng, len, 10, mode))
        .collect()
}

/// A square matrix with entries in `[-bound, bound]`.
pub fn matrix(n: usize, bound: i64, seed: u64) -> IntMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|_| (0..n).map(|_| rng.gen_range(-bound..=bound)).collect())
        .collect();
    IntMatrix::from_rows(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_seeded() {
        assert_eq!(words(5, 8, Mode::Z, 1), words(5, 8, Mode::Z, 1));
        assert_eq!(matrix(4, 9, 2), matrix(4, 9, 2));
        assert_eq!(matrix(4, 9, 2).rows(), 4);
    }
}

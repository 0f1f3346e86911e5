//! Seeded workloads shared by the criterion benches.

use braid_core::BraidWord;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// `count` words of length `len` in `B_n` with uniformly drawn letters.
pub fn uniform_words(n: usize, len: usize, count: usize, seed: u64) -> Vec<BraidWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| BraidWord::random(&mut rng, n, len))
        .collect()
}

/// `w · w⁻¹` with `w` uniform: trivial words that force full reduction.
pub fn trivial_words(n: usize, half_len: usize, count: usize, seed: u64) -> Vec<BraidWord> {
    uniform_words(n, half_len, count, seed)
        .into_iter()
        .map(|w| w.concat(&w.inverse()).expect("same strand count"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn workloads_are_seeded() {
        assert_eq!(uniform_words(4, 10, 3, 5), uniform_words(4, 10, 3, 5));
        assert_ne!(uniform_words(4, 10, 3, 5), uniform_words(4, 10, 3, 6));
        for w in trivial_words(4, 6, 3, 1) {
            assert_eq!(w.len(), 12);
            assert!(braid_core::is_trivial(&w).unwrap());
        }
    }
}

//! Deterministic workloads for the benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use twin_core::CoxWord;

/// `count` random words of length `len` over `s_1..s_{n-1}`, fixed seed.
pub fn random_words(n: usize, len: usize, count: usize, seed: u64) -> Vec<CoxWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let letters: Vec<u8> = (0..len).map(|_| rng.gen_range(1..n as u8)).collect();
            CoxWord::from_indices(&letters)
        })
        .collect()
}

/// Random conjugates of `(s1 s2)^3`, all lying in `PT_4`.
pub fn random_pure_words(len: usize, count: usize, seed: u64) -> Vec<CoxWord> {
    let cube = CoxWord::from_indices(&[1, 2, 1, 2, 1, 2]);
    random_words(4, len, count, seed).into_iter().map(|w| twin_core::word::conjugate(&cube, &w)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn workloads_are_deterministic_and_pure() {
        assert_eq!(random_words(5, 10, 3, 1), random_words(5, 10, 3, 1));
        for w in random_pure_words(8, 20, 2) {
            assert!(twin_core::twin::is_pure(&w, 4).unwrap());
        }
    }
}

//! Benchmark inputs shared by the criterion targets under `benches/`.

use hyperkirchhoff_core::random::random_bidirected;
use hyperkirchhoff_core::{ExactMatrix, OrientedHypergraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Bidirected graph on `n` vertices with `n + n/2` edges and no isolated
/// vertices.
pub fn graph(n: usize, seed: u64) -> OrientedHypergraph {
    random_bidirected(&mut seeded(seed), n, n + n / 2, 0.1, true)
}

/// `n x n` matrix with entries in `-3..=3`.
pub fn matrix(n: usize, seed: u64) -> ExactMatrix {
    let mut rng = seeded(seed);
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|_| (0..n).map(|_| rng.gen_range(-3..=3)).collect())
        .collect();
    ExactMatrix::from_rows(&rows)
}

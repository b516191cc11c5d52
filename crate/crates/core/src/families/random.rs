use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graphcore::{is_bridgeless, Graph};

/// Rejection cap for the pairing-model samplers.
pub const MAX_ATTEMPTS: usize = 100_000;

fn check_order(n: usize) -> Result<()> {
    if n < 4 && n != 2 || n % 2 == 1 {
        return Err(Error::Parameter(format!("random cubic graphs need even n >= 2, got {n}")));
    }
    Ok(())
}

/// One draw of the pairing model: three half-edges per vertex, paired by a
/// uniform random shuffle.
fn pairing_draw(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut points: Vec<usize> = (0..3 * n).map(|p| p / 3).collect();
    points.shuffle(rng);
    Graph::from_edges(n, points.chunks_exact(2).map(|c| (c[0], c[1]))).expect("in range")
}

fn sample(n: usize, seed: u64, accept: impl Fn(&Graph) -> bool) -> Result<Graph> {
    check_order(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let g = pairing_draw(n, &mut rng);
        if accept(&g) {
            return Ok(g);
        }
    }
    Err(Error::AttemptsExhausted(MAX_ATTEMPTS))
}

/// Loop-free bridgeless cubic multigraph from the pairing model, resampled
/// until accepted. Deterministic in `(n, seed)`.
pub fn random_bridgeless_cubic(n: usize, seed: u64) -> Result<Graph> {
    sample(n, seed, |g| !g.has_loops() && is_bridgeless(g))
}

/// Simple bridgeless cubic graph (no loops, no parallel edges).
pub fn random_simple_cubic(n: usize, seed: u64) -> Result<Graph> {
    if n < 4 {
        return Err(Error::Parameter(format!("simple cubic graphs need n >= 4, got {n}")));
    }
    sample(n, seed, |g| g.is_simple() && is_bridgeless(g))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_under_seed() {
        assert_eq!(
            random_bridgeless_cubic(16, 7).unwrap(),
            random_bridgeless_cubic(16, 7).unwrap()
        );
        assert_ne!(
            random_simple_cubic(16, 7).unwrap(),
            random_simple_cubic(16, 8).unwrap()
        );
    }

    #[test]
    fn gate_holds_on_many_samples() {
        for seed in 0..200 {
            let g = random_bridgeless_cubic(16, seed).unwrap();
            assert!(g.is_cubic() && is_bridgeless(&g) && !g.has_loops());
        }
        for seed in 0..20 {
            let g = random_bridgeless_cubic(4, seed).unwrap();
            assert!(g.is_cubic() && is_bridgeless(&g));
        }
    }

    #[test]
    fn bad_orders() {
        assert!(random_bridgeless_cubic(7, 0).is_err());
        assert!(random_simple_cubic(2, 0).is_err());
        assert!(random_bridgeless_cubic(2, 0).unwrap().is_cubic());
    }
}

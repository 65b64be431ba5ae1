//! Seeded random instances for verification runs.

use alloc::vec::Vec;

use rand::Rng;

use crate::combin::Combinations;
use crate::{Coloring, Hypergraph, Multigraph};

/// Each pair becomes an edge with probability `density`, with a uniform
/// multiplicity in `1..=max_multiplicity`.
pub fn random_multigraph<R: Rng>(rng: &mut R, n: usize, density: f64, max_multiplicity: u32) -> Multigraph {
    let mut g = Multigraph::new(n);
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(density) {
                g.bump(u, v, rng.gen_range(1..=max_multiplicity.max(1)));
            }
        }
    }
    g
}

/// Keeps each `r`-subset of `0..n` with probability `density`, duplicating
/// a kept edge with probability `duplicate`. At least one edge is kept.
pub fn random_uniform_hypergraph<R: Rng>(
    rng: &mut R,
    n: usize,
    r: usize,
    density: f64,
    duplicate: f64,
) -> Hypergraph {
    let all: Vec<Vec<u32>> = Combinations::new(n, r)
        .map(|s| s.into_iter().map(|v| v as u32).collect())
        .collect();
    let mut edges = Vec::new();
    for e in &all {
        if rng.gen_bool(density) {
            edges.push(e.clone());
            if rng.gen_bool(duplicate) {
                edges.push(e.clone());
            }
        }
    }
    if edges.is_empty() && !all.is_empty() {
        edges.push(all[rng.gen_range(0..all.len())].clone());
    }
    Hypergraph::uniform(n, r, edges).expect("subsets of 0..n are valid edges")
}

/// Uniformly random coloring of `n` vertices with colors `0..k`.
pub fn random_coloring<R: Rng>(rng: &mut R, n: usize, k: u32) -> Coloring {
    let colors = (0..n).map(|_| rng.gen_range(0..k)).collect();
    Coloring::new(colors, k).expect("colors drawn below k")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn seeded_instances_repeat() {
        let a = random_uniform_hypergraph(&mut ChaCha8Rng::seed_from_u64(4), 8, 4, 0.3, 0.1);
        let b = random_uniform_hypergraph(&mut ChaCha8Rng::seed_from_u64(4), 8, 4, 0.3, 0.1);
        assert_eq!(a, b);
        assert!(a.edge_count() > 0);
        assert_eq!(a.uniformity(), Some(4));
        let g = random_multigraph(&mut ChaCha8Rng::seed_from_u64(1), 7, 1.0, 1);
        assert_eq!(g, Multigraph::complete(7, 1));
    }
}

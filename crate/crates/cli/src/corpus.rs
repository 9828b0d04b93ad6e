//! Seeded random instances for the property suites.

use ofrac_core::OrientedGraph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 7;

/// Arc probability 1/3 per ordered pair in lexicographic order; a draw
/// whose reverse is already present is rejected, so the result is
/// always an oriented graph.
pub fn random_graph(rng: &mut impl Rng, n: usize) -> OrientedGraph {
    let mut arcs: Vec<(u32, u32)> = Vec::new();
    for u in 0..n as u32 {
        for v in 0..n as u32 {
            if u != v && rng.gen_ratio(1, 3) && !arcs.contains(&(v, u)) {
                arcs.push((u, v));
            }
        }
    }
    OrientedGraph::new(n, arcs).expect("loops and 2-cycles are rejected at draw time")
}

/// `count` graphs with sizes cycling through 4..=8.
pub fn sandwich_corpus(seed: u64, count: usize) -> Vec<OrientedGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| random_graph(&mut rng, 4 + i % 5))
        .collect()
}

/// A graph, a target, and a map that is a homomorphism by construction.
#[derive(Clone, Debug)]
pub struct HomPair {
    pub g: OrientedGraph,
    pub h: OrientedGraph,
    pub map: Vec<u32>,
}

/// `count` pairs: a random target `h`, a random vertex map into it, and
/// a source whose arcs are a coin-filtered subset of the map's arc
/// preimages — so the map is a homomorphism and `g` inherits
/// orientedness from `h`.
pub fn hom_corpus(seed: u64, count: usize) -> Vec<HomPair> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    (0..count)
        .map(|i| {
            let h = random_graph(&mut rng, 4 + i % 3);
            let n_g = 4 + i % 5;
            let map: Vec<u32> = (0..n_g)
                .map(|_| rng.gen_range(0..h.vertex_count() as u32))
                .collect();
            let mut arcs = Vec::new();
            for u in 0..n_g as u32 {
                for v in 0..n_g as u32 {
                    if u != v && h.has_arc(map[u as usize], map[v as usize]) && rng.gen_bool(0.5) {
                        arcs.push((u, v));
                    }
                }
            }
            let g = OrientedGraph::new(n_g, arcs)
                .expect("arc preimages of an oriented graph are oriented");
            HomPair { g, h, map }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use ofrac_core::verify_hom;

    #[test]
    fn corpus_is_reproducible() {
        let a = sandwich_corpus(DEFAULT_SEED, 20);
        let b = sandwich_corpus(DEFAULT_SEED, 20);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.arcs(), y.arcs());
        }
        let sizes: Vec<usize> = a.iter().map(|g| g.vertex_count()).collect();
        assert_eq!(&sizes[..5], &[4, 5, 6, 7, 8]);
    }

    #[test]
    fn different_seeds_differ() {
        let a = sandwich_corpus(1, 50);
        let b = sandwich_corpus(2, 50);
        assert!(a.iter().zip(&b).any(|(x, y)| x.arcs() != y.arcs()));
    }

    #[test]
    fn hom_pairs_come_with_valid_maps() {
        for pair in hom_corpus(DEFAULT_SEED, 50) {
            assert!(verify_hom(&pair.g, &pair.h, &pair.map));
        }
    }
}

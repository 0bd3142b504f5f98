//! Seeded random instances for property tests and sweeps.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{rooted_tree, WeightedOrientedGraph};
use crate::homology::SimplicialComplex;
use crate::ideal::{Monomial, MonomialIdeal};

pub const DEFAULT_SEED: u64 = 20_260_101;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A proper nonzero ideal with `1..=max_gens` generators drawn from
/// exponents `0..=max_exp`.
pub fn monomial_ideal(
    rng: &mut impl Rng,
    n: usize,
    max_gens: usize,
    max_exp: u32,
) -> MonomialIdeal {
    let count = rng.gen_range(1..=max_gens);
    let gens = (0..count)
        .map(|_| loop {
            let e: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=max_exp)).collect();
            if e.iter().any(|&x| x > 0) {
                break Monomial::new(e);
            }
        })
        .collect();
    MonomialIdeal::new(n, gens).expect("exponent vectors have the ring's length")
}

/// Each pair is joined with probability `p`, in a uniformly random direction.
pub fn graph(rng: &mut impl Rng, n: usize, p: f64, max_weight: u32) -> WeightedOrientedGraph {
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.gen_bool(p) {
                edges.push(if rng.gen_bool(0.5) { (u, v) } else { (v, u) });
            }
        }
    }
    build(rng, n, &edges, max_weight)
}

/// A random graph on `n - 1` vertices plus a vertex `n` attached by a single
/// edge pointing into it, so `n` is a leaf and a sink.
pub fn leaf_sink_graph(rng: &mut impl Rng, n: usize, max_weight: u32) -> WeightedOrientedGraph {
    assert!(n >= 2);
    let base = graph(rng, n - 1, 0.5, max_weight);
    let mut edges: Vec<_> = base.edges().collect();
    edges.push((rng.gen_range(1..n), n));
    let weights: Vec<_> = (1..n)
        .map(|v| (v, base.weight(v)))
        .chain([(n, rng.gen_range(1..=max_weight))])
        .collect();
    WeightedOrientedGraph::new(n, &edges, &weights).expect("simple by construction")
}

/// Tree rooted at 1 with every other weight drawn from `weights`.
pub fn rooted(rng: &mut impl Rng, n: usize, weights: &[u32]) -> WeightedOrientedGraph {
    let parents: Vec<usize> = (2..=n).map(|k| rng.gen_range(1..k)).collect();
    let w: Vec<u32> = (1..=n)
        .map(|v| {
            if v == 1 {
                1
            } else {
                *weights.choose(rng).unwrap()
            }
        })
        .collect();
    rooted_tree(&w, &parents).expect("parents precede children")
}

fn build(
    rng: &mut impl Rng,
    n: usize,
    edges: &[(usize, usize)],
    max_weight: u32,
) -> WeightedOrientedGraph {
    let weights: Vec<_> = (1..=n)
        .filter(|&v| edges.iter().any(|&(_, t)| t == v))
        .map(|v| (v, rng.gen_range(1..=max_weight)))
        .collect();
    WeightedOrientedGraph::new(n, edges, &weights).expect("simple by construction")
}

/// Complex on `1..=n` generated by up to `max_facets` random faces.
pub fn complex(rng: &mut impl Rng, n: usize, max_facets: usize) -> SimplicialComplex {
    let universe: Vec<usize> = (1..=n).collect();
    let count = rng.gen_range(0..=max_facets);
    let faces: Vec<Vec<usize>> = (0..count)
        .map(|_| {
            universe
                .iter()
                .copied()
                .filter(|_| rng.gen_bool(0.45))
                .collect()
        })
        .collect();
    SimplicialComplex::from_faces(&universe, &faces).expect("faces lie in the universe")
}

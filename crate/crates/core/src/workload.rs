//! Seeded instance generators for benchmarks and randomized checks.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::bipartite::BipartiteGraph;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// `n` letters drawn uniformly from the first `sigma` lowercase letters.
pub fn random_text<R: Rng>(rng: &mut R, n: usize, sigma: u8) -> Vec<u8> {
    assert!((1..=26).contains(&sigma));
    (0..n).map(|_| b'a' + rng.random_range(0..sigma)).collect()
}

pub fn unary_text(n: usize) -> Vec<u8> {
    vec![b'a'; n]
}

/// A small instance: up to `max_nodes` per side, labels of length
/// `1..=max_label`, each U×V pair an edge with probability 1/2, and a pattern
/// of length `1..=max_pattern`, all over `sigma` letters.
pub fn small_bipartite<R: Rng>(
    rng: &mut R,
    max_nodes: usize,
    max_label: usize,
    max_pattern: usize,
    sigma: u8,
) -> (BipartiteGraph, Vec<u8>) {
    let mut g = BipartiteGraph::new();
    let nu = rng.random_range(1..=max_nodes);
    let nv = rng.random_range(1..=max_nodes);
    for k in 0..nu {
        let len = rng.random_range(1..=max_label);
        g.add_u(format!("u{k}"), random_text(rng, len, sigma))
            .unwrap();
    }
    for k in 0..nv {
        let len = rng.random_range(1..=max_label);
        g.add_v(format!("v{k}"), random_text(rng, len, sigma))
            .unwrap();
    }
    for u in 0..nu {
        for v in 0..nv {
            if rng.random_bool(0.5) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    let m = rng.random_range(1..=max_pattern);
    (g, random_text(rng, m, sigma))
}

/// A large instance for timing: `nodes` nodes per side sharing `total_len`
/// label letters evenly, and `edges` random edges.
///
/// Every U label ends with a nonempty prefix of `pattern` and every V label
/// starts with a nonempty suffix of it, so each edge needs a prefix-suffix
/// query.
pub fn spanning_bipartite<R: Rng>(
    rng: &mut R,
    pattern: &[u8],
    total_len: usize,
    nodes: usize,
    edges: usize,
) -> BipartiteGraph {
    let m = pattern.len();
    let per_label = (total_len / (2 * nodes)).max(1);
    let mut g = BipartiteGraph::new();
    for k in 0..nodes {
        let tail = rng.random_range(1..=m.min(per_label));
        let mut label = random_text(rng, per_label - tail, 2);
        label.extend_from_slice(&pattern[..tail]);
        g.add_u(format!("u{k}"), label).unwrap();
    }
    for k in 0..nodes {
        let head = rng.random_range(1..=m.min(per_label));
        let mut label = pattern[m - head..].to_vec();
        label.extend(random_text(rng, per_label - head, 2));
        g.add_v(format!("v{k}"), label).unwrap();
    }
    for _ in 0..edges {
        let (u, v) = (rng.random_range(0..nodes), rng.random_range(0..nodes));
        g.add_edge(u, v).unwrap();
    }
    g
}

/// `root` repeated to length `n`.
pub fn periodic_text(root: &[u8], n: usize) -> Vec<u8> {
    root.iter().copied().cycle().take(n).collect()
}

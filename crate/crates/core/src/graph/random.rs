use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::VecDeque;

use super::Graph;
use crate::error::{Error, Result};

/// Random greedy bipartite graph of girth greater than `k` on parts
/// `0..n/2` and `n/2..n`.
pub fn high_girth_bipartite(n: usize, k: usize, seed: u64) -> Result<Graph> {
    high_girth_bipartite_with_rng(n, k, &mut ChaCha8Rng::seed_from_u64(seed))
}

pub fn high_girth_bipartite_with_rng<R: Rng + ?Sized>(n: usize, k: usize, rng: &mut R) -> Result<Graph> {
    if n < 4 || k < 3 {
        return Err(Error::BadParameter(format!(
            "high-girth generator needs n >= 4 and k >= 3, got n={n}, k={k}"
        )));
    }
    Ok(greedy_bipartite(n, k, rng))
}

/// Greedy insertion without the size preconditions; tiny inputs give
/// correspondingly tiny graphs.
pub(crate) fn greedy_bipartite<R: Rng + ?Sized>(n: usize, k: usize, rng: &mut R) -> Graph {
    let split = n / 2;
    let mut pairs: Vec<(usize, usize)> = (0..split).flat_map(|a| (split..n).map(move |b| (a, b))).collect();
    pairs.shuffle(rng);
    let mut g = Graph::empty(n);
    for (a, b) in pairs {
        if !within_distance(&g, a, b, k - 1) {
            g.add_edge(a, b);
        }
    }
    g
}

/// Whether `dist(from, to) <= limit`.
fn within_distance(g: &Graph, from: usize, to: usize, limit: usize) -> bool {
    let mut dist = vec![usize::MAX; g.n()];
    dist[from] = 0;
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if u == to {
            return true;
        }
        if dist[u] == limit {
            continue;
        }
        for w in g.neighbors(u).ones() {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    false
}

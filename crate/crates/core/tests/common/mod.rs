//! Brute-force reference implementations shared by the integration tests.
//! Deliberately naive: adjacency matrices, full enumeration, union-find.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::{BTreeMap, VecDeque};

use rand::Rng;
use turan3::graph::Graph;
use turan3::triples::TripleSystem;

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let mut a = vec![vec![false; g.n()]; g.n()];
    for (u, v) in g.edges() {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

/// trace(A^3) / 6.
pub fn trace_triangles(g: &Graph) -> u64 {
    let a = adjacency(g);
    let n = g.n();
    let mut a2 = vec![vec![0u64; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] {
                for j in 0..n {
                    if a[k][j] {
                        a2[i][j] += 1;
                    }
                }
            }
        }
    }
    let mut trace = 0;
    for i in 0..n {
        for k in 0..n {
            if a[k][i] {
                trace += a2[i][k];
            }
        }
    }
    trace / 6
}

/// Length of the shortest cycle, by BFS from every vertex.
pub fn girth(n: usize, edges: &[(usize, usize)]) -> Option<usize> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut best: Option<usize> = None;
    for root in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[root] = 0;
        let mut q = VecDeque::from([root]);
        while let Some(u) = q.pop_front() {
            for &w in &adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

fn find(p: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while p[r] != r {
        r = p[r];
    }
    let mut y = x;
    while p[y] != r {
        let next = p[y];
        p[y] = r;
        y = next;
    }
    r
}

pub fn is_forest(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut p: Vec<usize> = (0..n).collect();
    for &(u, v) in edges {
        let (a, b) = (find(&mut p, u), find(&mut p, v));
        if a == b {
            return false;
        }
        p[a] = b;
    }
    true
}

/// All proper 3-colorings, by enumerating all `3^n` assignments.
pub fn brute_colorings(g: &Graph) -> Vec<Vec<u8>> {
    let n = g.n();
    let edges = g.edges();
    let mut out = Vec::new();
    for code in 0..3u64.pow(n as u32) {
        let mut c = vec![0u8; n];
        let mut k = code;
        for x in c.iter_mut() {
            *x = (k % 3) as u8;
            k /= 3;
        }
        if edges.iter().all(|&(u, v)| c[u] != c[v]) {
            out.push(c);
        }
    }
    out
}

/// Edges of `g` with both ends coloured `a` or `b`.
pub fn two_color_edges(g: &Graph, c: &[u8], a: u8, b: u8) -> Vec<(usize, usize)> {
    g.edges()
        .into_iter()
        .filter(|&(u, v)| [c[u], c[v]].iter().all(|&x| x == a || x == b))
        .collect()
}

pub fn is_acyclic_coloring(g: &Graph, c: &[u8]) -> bool {
    g.edges().iter().all(|&(u, v)| c[u] != c[v])
        && [(0, 1), (0, 2), (1, 2)]
            .iter()
            .all(|&(a, b)| is_forest(g.n(), &two_color_edges(g, c, a, b)))
}

pub fn brute_has_acyclic_coloring(g: &Graph) -> bool {
    brute_colorings(g).iter().any(|c| is_acyclic_coloring(g, c))
}

pub fn codegrees(h: &TripleSystem) -> BTreeMap<(usize, usize), usize> {
    let mut m = BTreeMap::new();
    for &[a, b, c] in h.triples() {
        for key in [(a, b), (a, c), (b, c)] {
            *m.entry(key).or_insert(0) += 1;
        }
    }
    m
}

/// Every pair lying in some triple lies in at least `k` triples.
pub fn is_full(h: &TripleSystem, k: usize) -> bool {
    codegrees(h).values().all(|&c| c >= k)
}

pub fn shadow_size(h: &TripleSystem) -> usize {
    codegrees(h).len()
}

pub fn meets_each_once(h: &TripleSystem, set: &[usize]) -> bool {
    h.triples()
        .iter()
        .all(|t| t.iter().filter(|v| set.contains(v)).count() == 1)
}

/// Smallest crosscut size by trying all vertex subsets in order of size.
pub fn brute_min_crosscut(h: &TripleSystem) -> Option<usize> {
    let n = h.n();
    let mut by_size: Vec<u32> = (0..1u32 << n).collect();
    by_size.sort_by_key(|m| m.count_ones());
    by_size.into_iter().find_map(|mask| {
        let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        meets_each_once(h, &set).then_some(set.len())
    })
}

/// Calls `f` on every injective map `0..k -> 0..n` until it returns true.
pub fn any_injection(k: usize, n: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
    fn go(k: usize, n: usize, map: &mut Vec<usize>, used: &mut [bool], f: &mut impl FnMut(&[usize]) -> bool) -> bool {
        if map.len() == k {
            return f(map);
        }
        for h in 0..n {
            if !used[h] {
                used[h] = true;
                map.push(h);
                let hit = go(k, n, map, used, f);
                map.pop();
                used[h] = false;
                if hit {
                    return true;
                }
            }
        }
        false
    }
    k <= n && go(k, n, &mut Vec::new(), &mut vec![false; n], f)
}

pub fn brute_graph_contains(p: &Graph, h: &Graph) -> bool {
    let a = adjacency(h);
    let edges = p.edges();
    any_injection(p.n(), h.n(), &mut |m| edges.iter().all(|&(u, v)| a[m[u]][m[v]]))
}

pub fn brute_triple_contains(p: &TripleSystem, h: &TripleSystem) -> bool {
    let present: std::collections::HashSet<[usize; 3]> = h.triples().iter().copied().collect();
    any_injection(p.n(), h.n(), &mut |m| {
        p.triples().iter().all(|t| {
            let mut img = t.map(|v| m[v]);
            img.sort_unstable();
            present.contains(&img)
        })
    })
}

pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                g.add_edge(u, v);
            }
        }
    }
    g
}

pub fn random_triples<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> TripleSystem {
    let mut t = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if rng.gen::<f64>() < p {
                    t.push([a, b, c]);
                }
            }
        }
    }
    TripleSystem::new(n, t).unwrap()
}

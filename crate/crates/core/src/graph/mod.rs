//! Simple undirected graphs on `0..n` with bitset adjacency rows.

mod coloring;
mod named;
mod random;

pub use coloring::{
    bichromatic_cycle_profile, has_acyclic_3_coloring, proper_3_colorings, Coloring, ProperColorings, CLASS_PAIRS,
    COLORING_VERTEX_CAP,
};
pub use named::NamedGraph;
pub(crate) use random::greedy_bipartite;
pub use random::{high_girth_bipartite, high_girth_bipartite_with_rng};

use fixedbitset::FixedBitSet;
use serde::Serialize;
use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::triples::TripleSystem;

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<FixedBitSet>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    /// Builds a graph from an edge list; repeated edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::BadParameter(format!(
                "edge {u}-{v} out of range for {} vertices",
                self.n
            )));
        }
        if u == v {
            return Err(Error::BadParameter(format!("loop at vertex {u}")));
        }
        self.add_edge(u, v);
        Ok(())
    }

    /// Panics on loops or out-of-range endpoints.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "loop at {u}");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].set(v, false);
        self.adj[v].set(u, false);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn neighbors(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    /// Edges `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            out.extend(self.adj[u].ones().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// Keeps only edges with both ends in `keep`; vertex labels are unchanged.
    pub fn restrict_to(&self, keep: &FixedBitSet) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in keep.ones().filter(|&u| u < self.n) {
            let mut row = self.adj[u].clone();
            row.intersect_with(keep);
            g.adj[u] = row;
        }
        g
    }

    /// Graph text format: `g <n> <m>` then one sorted `<u> <v>` line per edge.
    pub fn to_text(&self) -> String {
        let edges = self.edges();
        let mut s = format!("g {} {}\n", self.n, edges.len());
        for (u, v) in edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "missing header".into(),
        })?;
        let head: Vec<&str> = header.split_whitespace().collect();
        if head.len() != 3 || head[0] != "g" {
            return Err(Error::Parse {
                line: 1,
                msg: format!("expected `g <n> <m>`, got `{header}`"),
            });
        }
        let n = parse_num(head[1], 1)?;
        let m = parse_num(head[2], 1)?;
        let mut g = Graph::empty(n);
        let mut count = 0;
        for (i, line) in lines {
            let f: Vec<&str> = line.split_whitespace().collect();
            if f.len() != 2 {
                return Err(Error::Parse {
                    line: i + 1,
                    msg: format!("expected `<u> <v>`, got `{line}`"),
                });
            }
            let (u, v) = (parse_num(f[0], i + 1)?, parse_num(f[1], i + 1)?);
            g.try_add_edge(u, v).map_err(|e| Error::Parse {
                line: i + 1,
                msg: e.to_string(),
            })?;
            count += 1;
        }
        if count != m || g.edge_count() != m {
            return Err(Error::Parse {
                line: 1,
                msg: format!("header promises {m} distinct edges, found {}", g.edge_count()),
            });
        }
        Ok(g)
    }
}

pub(crate) fn parse_num(s: &str, line: usize) -> Result<usize> {
    s.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("`{s}` is not a nonnegative integer"),
    })
}

/// Shortest cycle length, or `Infinite` for forests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(k) => Some(k),
            Girth::Infinite => None,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(k) => write!(f, "{k}"),
            Girth::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(k) => s.serialize_u64(*k as u64),
            Girth::Infinite => s.serialize_str("inf"),
        }
    }
}

/// BFS from every vertex; a non-tree edge `uw` closes a walk of length
/// `dist[u] + dist[w] + 1`, and the minimum over all roots is the girth.
pub fn girth(g: &Graph) -> Girth {
    let n = g.n();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        'bfs: while let Some(u) = queue.pop_front() {
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for w in g.neighbors(u).ones() {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                    if best == 3 {
                        break 'bfs;
                    }
                }
            }
        }
        if best == 3 {
            break;
        }
    }
    if best == usize::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best)
    }
}

/// The triple system whose triples are the vertex sets of triangles of `g`.
pub fn triangles_of_graph(g: &Graph) -> TripleSystem {
    let mut triples = Vec::new();
    for (u, v) in g.edges() {
        let mut common = g.neighbors(u).clone();
        common.intersect_with(g.neighbors(v));
        triples.extend(common.ones().filter(|&w| w > v).map(|w| [u, v, w]));
    }
    TripleSystem::from_sorted_unchecked(g.n(), triples)
}

/// Series-parallel reduction: delete vertices of degree at most one and
/// suppress degree-two vertices (joining their neighbours, never doubling an
/// edge). The graph has treewidth at most two iff nothing survives.
pub fn treewidth_le_two(g: &Graph) -> bool {
    let mut h = g.clone();
    let mut alive = vec![true; g.n()];
    let mut remaining = g.n();
    let mut stack: Vec<usize> = (0..g.n()).rev().collect();
    while let Some(v) = stack.pop() {
        if !alive[v] {
            continue;
        }
        let nbrs: Vec<usize> = h.neighbors(v).ones().collect();
        match nbrs.len() {
            0 | 1 => {}
            2 => {
                h.add_edge(nbrs[0], nbrs[1]);
            }
            _ => continue,
        }
        for &u in &nbrs {
            h.remove_edge(u, v);
        }
        alive[v] = false;
        remaining -= 1;
        stack.extend(nbrs.into_iter().filter(|&u| h.degree(u) <= 2));
    }
    remaining == 0
}

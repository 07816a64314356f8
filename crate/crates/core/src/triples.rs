//! 3-uniform hypergraphs: shadows, codegrees, expansions, full subgraphs
//! and exact transversals (crosscuts).

use fixedbitset::FixedBitSet;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{parse_num, Graph};

pub type Triple = [usize; 3];

/// A 3-graph on `0..n`: sorted, deduplicated triples of distinct vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TripleSystem {
    n: usize,
    triples: Vec<Triple>,
}

impl fmt::Debug for TripleSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TripleSystem")
            .field("n", &self.n)
            .field("triples", &self.triples)
            .finish()
    }
}

fn sort3(mut t: Triple) -> Triple {
    t.sort_unstable();
    t
}

impl TripleSystem {
    pub fn empty(n: usize) -> Self {
        TripleSystem { n, triples: Vec::new() }
    }

    pub fn new(n: usize, triples: impl IntoIterator<Item = Triple>) -> Result<Self> {
        let mut out = Vec::new();
        for t in triples {
            let t = sort3(t);
            if t[2] >= n {
                return Err(Error::BadParameter(format!(
                    "triple {t:?} out of range for {n} vertices"
                )));
            }
            if t[0] == t[1] || t[1] == t[2] {
                return Err(Error::BadParameter(format!("triple {t:?} repeats a vertex")));
            }
            out.push(t);
        }
        out.sort_unstable();
        out.dedup();
        Ok(TripleSystem { n, triples: out })
    }

    pub(crate) fn from_sorted_unchecked(n: usize, triples: Vec<Triple>) -> Self {
        debug_assert!(triples.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(triples.iter().all(|t| t[0] < t[1] && t[1] < t[2] && t[2] < n));
        TripleSystem { n, triples }
    }

    /// All `C(n, 3)` triples on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let mut t = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    t.push([a, b, c]);
                }
            }
        }
        TripleSystem { n, triples: t }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    pub fn triples(&self) -> &[Triple] {
        &self.triples
    }

    pub fn contains(&self, t: Triple) -> bool {
        self.triples.binary_search(&sort3(t)).is_ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.triples.iter().filter(|t| t.contains(&v)).count()
    }

    /// Subsystem keeping the triples for which `keep` is true.
    pub fn filter(&self, mut keep: impl FnMut(&Triple) -> bool) -> TripleSystem {
        TripleSystem {
            n: self.n,
            triples: self.triples.iter().copied().filter(|t| keep(t)).collect(),
        }
    }

    /// For every pair with positive codegree, the set of third vertices.
    pub fn co_neighborhoods(&self) -> BTreeMap<(usize, usize), FixedBitSet> {
        let mut map: BTreeMap<(usize, usize), FixedBitSet> = BTreeMap::new();
        for &[a, b, c] in &self.triples {
            for (x, y, z) in [(a, b, c), (a, c, b), (b, c, a)] {
                map.entry((x, y))
                    .or_insert_with(|| FixedBitSet::with_capacity(self.n))
                    .insert(z);
            }
        }
        map
    }

    /// Hypergraph text format: `h3 <n> <m>` then one sorted `<u> <v> <w>` line per triple.
    pub fn to_text(&self) -> String {
        let mut s = format!("h3 {} {}\n", self.n, self.triples.len());
        for [a, b, c] in &self.triples {
            s.push_str(&format!("{a} {b} {c}\n"));
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
        if head.len() != 3 || head[0] != "h3" {
            return Err(Error::Parse {
                line: 1,
                msg: format!("expected `h3 <n> <m>`, got `{header}`"),
            });
        }
        let n = parse_num(head[1], 1)?;
        let m = parse_num(head[2], 1)?;
        let mut triples = Vec::with_capacity(m);
        for (i, line) in lines {
            let f: Vec<&str> = line.split_whitespace().collect();
            if f.len() != 3 {
                return Err(Error::Parse {
                    line: i + 1,
                    msg: format!("expected `<u> <v> <w>`, got `{line}`"),
                });
            }
            let t = [
                parse_num(f[0], i + 1)?,
                parse_num(f[1], i + 1)?,
                parse_num(f[2], i + 1)?,
            ];
            triples.push(t);
        }
        let count = triples.len();
        let h = TripleSystem::new(n, triples).map_err(|e| Error::Parse {
            line: 1,
            msg: e.to_string(),
        })?;
        if count != m || h.len() != m {
            return Err(Error::Parse {
                line: 1,
                msg: format!("header promises {m} distinct triples, found {}", h.len()),
            });
        }
        Ok(h)
    }
}

/// `G+`: each edge of `g`, in sorted order, gets its own apex `n + i`.
pub fn expand(g: &Graph) -> TripleSystem {
    let n = g.n();
    let triples = g
        .edges()
        .into_iter()
        .enumerate()
        .map(|(i, (u, v))| [u, v, n + i])
        .collect::<Vec<_>>();
    let mut triples = triples;
    triples.sort_unstable();
    TripleSystem::from_sorted_unchecked(n + g.edge_count(), triples)
}

/// The graph of all pairs covered by some triple.
pub fn shadow(h: &TripleSystem) -> Graph {
    let mut g = Graph::empty(h.n());
    for &[a, b, c] in h.triples() {
        g.add_edge(a, b);
        g.add_edge(a, c);
        g.add_edge(b, c);
    }
    g
}

pub fn codegree(h: &TripleSystem, u: usize, v: usize) -> Result<usize> {
    if u == v {
        return Err(Error::SameVertex(u));
    }
    Ok(h.triples().iter().filter(|t| t.contains(&u) && t.contains(&v)).count())
}

/// Smallest positive codegree, or `None` when the system is empty.
pub fn min_positive_codegree(h: &TripleSystem) -> Option<usize> {
    h.co_neighborhoods().values().map(|s| s.count_ones(..)).min()
}

/// A `(d+1)`-full subsystem with at least `|h| - d |shadow(h)|` triples.
///
/// Shadow pairs are scanned in lexicographic order; the first pair lying in
/// between 1 and `d` surviving triples has those triples deleted and the
/// scan restarts. The deleted pairs form a maximal d-sparse sequence.
pub fn full_subgraph(h: &TripleSystem, d: usize) -> TripleSystem {
    let pairs: Vec<(usize, usize)> = shadow(h).edges();
    let mut holders: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (i, &[a, b, c]) in h.triples().iter().enumerate() {
        for key in [(a, b), (a, c), (b, c)] {
            holders.entry(key).or_default().push(i);
        }
    }
    let mut alive = vec![true; h.len()];
    'restart: loop {
        for pair in &pairs {
            let live: Vec<usize> = holders[pair].iter().copied().filter(|&i| alive[i]).collect();
            if !live.is_empty() && live.len() <= d {
                for i in live {
                    alive[i] = false;
                }
                continue 'restart;
            }
        }
        break;
    }
    let mut idx = 0;
    h.filter(|_| {
        idx += 1;
        alive[idx - 1]
    })
}

/// Minimum exact transversal search result.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrosscutResult {
    pub exists: bool,
    /// Size of the witness; meaningful when `exists`.
    pub size: usize,
    /// Lexicographically smallest minimum crosscut, sorted.
    pub witness: Vec<usize>,
    /// No crosscut within the cap, but a larger one exists.
    pub cap_exceeded: bool,
}

pub const CROSSCUT_CAP_LIMIT: usize = 8;
pub const DEFAULT_CROSSCUT_CAP: usize = 6;

struct CrosscutSearch<'a> {
    h: &'a TripleSystem,
    incident: Vec<Vec<usize>>,
    chosen: Vec<usize>,
    excluded: Vec<u32>,
    hits: Vec<u8>,
    best: Option<Vec<usize>>,
    bound: usize,
}

impl CrosscutSearch<'_> {
    fn better(&self, cand: &[usize]) -> bool {
        match &self.best {
            None => true,
            Some(b) => cand.len() < b.len() || (cand.len() == b.len() && cand < b.as_slice()),
        }
    }

    fn run(&mut self, stop_at_first: bool) -> bool {
        let Some(open) = self.hits.iter().position(|&k| k == 0) else {
            let mut cand = self.chosen.clone();
            cand.sort_unstable();
            if self.better(&cand) {
                self.bound = cand.len();
                self.best = Some(cand);
            }
            return stop_at_first;
        };
        if self.chosen.len() + 1 > self.bound {
            return false;
        }
        for v in self.h.triples()[open] {
            if self.excluded[v] > 0 {
                continue;
            }
            // Choosing v hits every incident triple once and bars the other
            // vertices of those triples.
            let touched = self.incident[v].clone();
            if touched.iter().any(|&t| self.hits[t] > 0) {
                continue;
            }
            self.chosen.push(v);
            for &t in &touched {
                self.hits[t] = 1;
                for u in self.h.triples()[t] {
                    if u != v {
                        self.excluded[u] += 1;
                    }
                }
            }
            let dead = self
                .hits
                .iter()
                .zip(self.h.triples())
                .any(|(&k, t)| k == 0 && t.iter().all(|&u| self.excluded[u] > 0));
            let stop = !dead && self.run(stop_at_first);
            for &t in &touched {
                self.hits[t] = 0;
                for u in self.h.triples()[t] {
                    if u != v {
                        self.excluded[u] -= 1;
                    }
                }
            }
            self.chosen.pop();
            if stop {
                return true;
            }
        }
        false
    }
}

fn crosscut_search(h: &TripleSystem, bound: usize, stop_at_first: bool) -> Option<Vec<usize>> {
    let mut incident = vec![Vec::new(); h.n()];
    for (i, t) in h.triples().iter().enumerate() {
        for &v in t {
            incident[v].push(i);
        }
    }
    let mut s = CrosscutSearch {
        h,
        incident,
        chosen: Vec::new(),
        excluded: vec![0; h.n()],
        hits: vec![0; h.len()],
        best: None,
        bound,
    };
    s.run(stop_at_first);
    s.best
}

/// Branch and bound over triples: the first unhit triple must receive
/// exactly one chosen vertex. Returns the lexicographically smallest
/// crosscut of minimum size, if one of size at most `cap` exists.
pub fn crosscut(h: &TripleSystem, cap: usize) -> Result<CrosscutResult> {
    if cap > CROSSCUT_CAP_LIMIT {
        return Err(Error::TooLarge {
            what: "crosscut size cap",
            value: cap as u64,
            limit: CROSSCUT_CAP_LIMIT as u64,
        });
    }
    Ok(match crosscut_search(h, cap, false) {
        Some(w) => CrosscutResult {
            exists: true,
            size: w.len(),
            witness: w,
            cap_exceeded: false,
        },
        None => CrosscutResult {
            exists: false,
            size: 0,
            witness: Vec::new(),
            cap_exceeded: crosscut_search(h, h.n(), true).is_some(),
        },
    })
}

/// Whether `x` meets every triple of `h` in exactly one vertex.
pub fn is_crosscut(h: &TripleSystem, x: &[usize]) -> bool {
    h.triples()
        .iter()
        .all(|t| t.iter().filter(|v| x.contains(v)).count() == 1)
}

/// `H_t`: vertices `a = 0`, `b = 1`, `x_i = 2i`, `y_i = 2i + 1` for
/// `i = 1..=t`, with triples `x_i y_i a` and `x_i y_i b`.
pub fn h_t_pattern(t: usize) -> Result<TripleSystem> {
    if t == 0 {
        return Err(Error::BadParameter("H_t needs t >= 1".into()));
    }
    let triples = (1..=t).flat_map(|i| [[0, 2 * i, 2 * i + 1], [1, 2 * i, 2 * i + 1]]);
    TripleSystem::new(2 * t + 2, triples)
}

/// `k` pairwise disjoint triples on `3k` vertices.
pub fn triple_matching(k: usize) -> TripleSystem {
    TripleSystem::from_sorted_unchecked(3 * k, (0..k).map(|i| [3 * i, 3 * i + 1, 3 * i + 2]).collect())
}

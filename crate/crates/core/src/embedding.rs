//! Backtracking containment search: graphs in graphs, triple systems in
//! triple systems, and expansions `G+` in triple systems.
//!
//! Searches are sequential and deterministic. `None` is only reported after
//! the tree has been exhausted; running out of budget is a separate outcome.

use fixedbitset::FixedBitSet;
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};
use std::ops::ControlFlow;

use crate::graph::Graph;
use crate::triples::{expand, shadow, TripleSystem};

/// Node-expansion budget used when the caller has no preference.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Patterns up to this size get automorphism-based symmetry breaking.
const SYMMETRY_VERTEX_CAP: usize = 16;

/// Injective map from pattern vertices to host vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    fn injective(&self, host_n: usize) -> bool {
        let mut seen = FixedBitSet::with_capacity(host_n);
        self.map.iter().all(|&v| v < host_n && !seen.put(v))
    }

    /// Re-checks injectivity and edge preservation.
    pub fn is_valid_graph_embedding(&self, pattern: &Graph, host: &Graph) -> bool {
        self.map.len() == pattern.n()
            && self.injective(host.n())
            && pattern
                .edges()
                .iter()
                .all(|&(u, v)| host.has_edge(self.map[u], self.map[v]))
    }

    /// Re-checks injectivity and triple preservation.
    pub fn is_valid_triple_embedding(&self, pattern: &TripleSystem, host: &TripleSystem) -> bool {
        self.map.len() == pattern.n()
            && self.injective(host.n())
            && pattern.triples().iter().all(|t| host.contains(t.map(|v| self.map[v])))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum SearchOutcome {
    Found { embedding: Embedding, nodes: u64 },
    None { nodes: u64 },
    BudgetExhausted { nodes: u64 },
}

impl SearchOutcome {
    pub fn embedding(&self) -> Option<&Embedding> {
        match self {
            SearchOutcome::Found { embedding, .. } => Some(embedding),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found { .. })
    }

    /// Exhaustive negative verdict.
    pub fn is_none(&self) -> bool {
        matches!(self, SearchOutcome::None { .. })
    }

    pub fn is_budget_exhausted(&self) -> bool {
        matches!(self, SearchOutcome::BudgetExhausted { .. })
    }

    pub fn nodes(&self) -> u64 {
        match self {
            SearchOutcome::Found { nodes, .. }
            | SearchOutcome::None { nodes }
            | SearchOutcome::BudgetExhausted { nodes } => *nodes,
        }
    }

    pub fn verdict(&self) -> &'static str {
        match self {
            SearchOutcome::Found { .. } => "found",
            SearchOutcome::None { .. } => "none",
            SearchOutcome::BudgetExhausted { .. } => "budget",
        }
    }
}

/// Per-position constraints on the pattern vertex placed there.
struct Step {
    vertex: usize,
    min_degree: usize,
    /// Earlier pattern vertices adjacent (graph) or sharing a triple (3-graph).
    linked: Vec<usize>,
    /// Earlier pairs completing a pattern triple with this vertex.
    closing: Vec<(usize, usize)>,
    /// Must map above the image of the first vertex (same automorphism orbit).
    above_first: bool,
}

/// Host-side adjacency in the form the matcher consumes.
struct HostView<'a> {
    n: usize,
    degree: Vec<usize>,
    rows: Vec<FixedBitSet>,
    co: Option<&'a HashMap<(usize, usize), FixedBitSet>>,
}

struct Matcher<'a> {
    steps: Vec<Step>,
    host: HostView<'a>,
    pattern_n: usize,
    budget: u64,
    nodes: u64,
    /// Forced images for the first `pins.len()` search positions.
    pins: Vec<usize>,
}

enum Halt {
    Budget,
    Stop,
}

impl Matcher<'_> {
    fn search<F>(&mut self, visit: &mut F) -> Option<Halt>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        if self.pattern_n > self.host.n {
            return None;
        }
        let mut map = vec![usize::MAX; self.pattern_n];
        let mut used = FixedBitSet::with_capacity(self.host.n);
        self.extend(0, &mut map, &mut used, visit)
    }

    fn candidates(&self, step: &Step, map: &[usize], used: &FixedBitSet) -> FixedBitSet {
        let n = self.host.n;
        let mut cand = FixedBitSet::with_capacity(n);
        cand.insert_range(..);
        for &u in &step.linked {
            cand.intersect_with(&self.host.rows[map[u]]);
        }
        if let Some(co) = self.host.co {
            for &(a, b) in &step.closing {
                let (x, y) = (map[a].min(map[b]), map[a].max(map[b]));
                match co.get(&(x, y)) {
                    Some(s) => cand.intersect_with(s),
                    None => return FixedBitSet::with_capacity(n),
                }
            }
        }
        cand.difference_with(used);
        cand
    }

    fn extend<F>(&mut self, depth: usize, map: &mut [usize], used: &mut FixedBitSet, visit: &mut F) -> Option<Halt>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        if depth == self.steps.len() {
            return match visit(map) {
                ControlFlow::Break(()) => Some(Halt::Stop),
                ControlFlow::Continue(()) => None,
            };
        }
        let step = &self.steps[depth];
        let (vertex, min_degree) = (step.vertex, step.min_degree);
        let floor = if step.above_first {
            map[self.steps[0].vertex] + 1
        } else {
            0
        };
        let cand = self.candidates(step, map, used);
        for h in cand.ones().filter(|&h| h >= floor) {
            if self.pins.get(depth).is_some_and(|&p| p != h) {
                continue;
            }
            if self.host.degree[h] < min_degree {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Some(Halt::Budget);
            }
            map[vertex] = h;
            used.insert(h);
            let halt = self.extend(depth + 1, map, used, visit);
            used.set(h, false);
            map[vertex] = usize::MAX;
            if halt.is_some() {
                return halt;
            }
        }
        None
    }
}

/// Orders pattern vertices: highest degree first, then repeatedly the vertex
/// most connected to those already placed (ties: degree, then index).
/// `prefix` is placed first, as given.
fn search_order(n: usize, degree: &[usize], links: &[FixedBitSet], prefix: &[usize]) -> Vec<usize> {
    let mut placed = FixedBitSet::with_capacity(n);
    let mut order = prefix.to_vec();
    prefix.iter().for_each(|&v| placed.insert(v));
    for _ in prefix.len()..n {
        let next = (0..n)
            .filter(|&v| !placed.contains(v))
            .max_by_key(|&v| (links[v].intersection_count(&placed), degree[v], std::cmp::Reverse(v)))
            .expect("unplaced vertex");
        placed.insert(next);
        order.push(next);
    }
    order
}

fn graph_steps(pattern: &Graph, orbit: Option<&[usize]>, prefix: &[usize]) -> Vec<Step> {
    let n = pattern.n();
    let degree = pattern.degrees();
    let rows: Vec<FixedBitSet> = (0..n).map(|v| pattern.neighbors(v).clone()).collect();
    let order = search_order(n, &degree, &rows, prefix);
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    order
        .iter()
        .enumerate()
        .map(|(i, &v)| Step {
            vertex: v,
            min_degree: degree[v],
            linked: rows[v].ones().filter(|&u| pos[u] < i).collect(),
            closing: Vec::new(),
            above_first: i > 0 && orbit.is_some_and(|o| o.contains(&v)),
        })
        .collect()
}

fn triple_steps(pattern: &TripleSystem, orbit: Option<&[usize]>, prefix: &[usize]) -> Vec<Step> {
    let n = pattern.n();
    let degree: Vec<usize> = (0..n).map(|v| pattern.degree(v)).collect();
    let sh = shadow(pattern);
    let rows: Vec<FixedBitSet> = (0..n).map(|v| sh.neighbors(v).clone()).collect();
    let order = search_order(n, &degree, &rows, prefix);
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    order
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            let mut closing = Vec::new();
            for t in pattern.triples().iter().filter(|t| t.contains(&v)) {
                let others: Vec<usize> = t.iter().copied().filter(|&u| u != v).collect();
                if others.iter().all(|&u| pos[u] < i) {
                    closing.push((others[0], others[1]));
                }
            }
            Step {
                vertex: v,
                min_degree: degree[v],
                linked: rows[v].ones().filter(|&u| pos[u] < i).collect(),
                closing,
                above_first: i > 0 && orbit.is_some_and(|o| o.contains(&v)),
            }
        })
        .collect()
}

fn graph_host(host: &Graph) -> HostView<'static> {
    HostView {
        n: host.n(),
        degree: host.degrees(),
        rows: (0..host.n()).map(|v| host.neighbors(v).clone()).collect(),
        co: None,
    }
}

fn co_map(host: &TripleSystem) -> HashMap<(usize, usize), FixedBitSet> {
    host.co_neighborhoods().into_iter().collect()
}

fn triple_host<'a>(host: &TripleSystem, co: &'a HashMap<(usize, usize), FixedBitSet>) -> HostView<'a> {
    let sh = shadow(host);
    HostView {
        n: host.n(),
        degree: (0..host.n()).map(|v| host.degree(v)).collect(),
        rows: (0..host.n()).map(|v| sh.neighbors(v).clone()).collect(),
        co: Some(co),
    }
}

/// Pattern vertices sharing an automorphism orbit with the first searched vertex.
fn graph_orbit_of_first(pattern: &Graph) -> Option<Vec<usize>> {
    if pattern.n() == 0 || pattern.n() > SYMMETRY_VERTEX_CAP {
        return None;
    }
    let first = graph_steps(pattern, None, &[])[0].vertex;
    let orbit = (0..pattern.n())
        .filter(|&u| {
            let mut m = Matcher {
                steps: graph_steps(pattern, None, &[]),
                host: graph_host(pattern),
                pattern_n: pattern.n(),
                budget: u64::MAX,
                nodes: 0,
                pins: vec![u],
            };
            let mut found = false;
            m.search(&mut |_| {
                found = true;
                ControlFlow::Break(())
            });
            found
        })
        .collect::<Vec<_>>();
    debug_assert!(orbit.contains(&first));
    Some(orbit)
}

fn triple_orbit_of_first(pattern: &TripleSystem) -> Option<Vec<usize>> {
    if pattern.n() == 0 || pattern.n() > SYMMETRY_VERTEX_CAP {
        return None;
    }
    let co = co_map(pattern);
    let orbit = (0..pattern.n())
        .filter(|&u| {
            let mut m = Matcher {
                steps: triple_steps(pattern, None, &[]),
                host: triple_host(pattern, &co),
                pattern_n: pattern.n(),
                budget: u64::MAX,
                nodes: 0,
                pins: vec![u],
            };
            let mut found = false;
            m.search(&mut |_| {
                found = true;
                ControlFlow::Break(())
            });
            found
        })
        .collect();
    Some(orbit)
}

fn run<'a>(mut m: Matcher<'a>, mut on_match: impl FnMut(&[usize]) -> Option<Embedding>) -> SearchOutcome {
    let mut result = None;
    let halt = m.search(&mut |map| match on_match(map) {
        Some(e) => {
            result = Some(e);
            ControlFlow::Break(())
        }
        None => ControlFlow::Continue(()),
    });
    match (halt, result) {
        (_, Some(embedding)) => SearchOutcome::Found {
            embedding,
            nodes: m.nodes,
        },
        (Some(Halt::Budget), None) => SearchOutcome::BudgetExhausted { nodes: m.nodes },
        _ => SearchOutcome::None { nodes: m.nodes },
    }
}

/// Subgraph (not necessarily induced) containment of `pattern` in `host`.
pub fn graph_embed(pattern: &Graph, host: &Graph, budget: u64) -> SearchOutcome {
    let orbit = graph_orbit_of_first(pattern);
    let m = Matcher {
        steps: graph_steps(pattern, orbit.as_deref(), &[]),
        host: graph_host(host),
        pattern_n: pattern.n(),
        budget,
        nodes: 0,
        pins: Vec::new(),
    };
    run(m, |map| Some(Embedding { map: map.to_vec() }))
}

/// A copy of `pattern` in `host` whose image uses the host edge `uv`.
/// Without symmetry breaking; `budget` bounds the total over all pinnings.
pub fn graph_embed_through_edge(pattern: &Graph, host: &Graph, (u, v): (usize, usize), budget: u64) -> SearchOutcome {
    let mut nodes = 0;
    if !host.has_edge(u, v) {
        return SearchOutcome::None { nodes };
    }
    for (a, b) in pattern.edges() {
        for (x, y) in [(a, b), (b, a)] {
            let m = Matcher {
                steps: graph_steps(pattern, None, &[x, y]),
                host: graph_host(host),
                pattern_n: pattern.n(),
                budget: budget - nodes,
                nodes: 0,
                pins: vec![u, v],
            };
            match run(m, |map| Some(Embedding { map: map.to_vec() })) {
                SearchOutcome::Found { embedding, nodes: k } => {
                    return SearchOutcome::Found {
                        embedding,
                        nodes: nodes + k,
                    }
                }
                SearchOutcome::BudgetExhausted { nodes: k } => {
                    return SearchOutcome::BudgetExhausted { nodes: nodes + k }
                }
                SearchOutcome::None { nodes: k } => nodes += k,
            }
        }
    }
    SearchOutcome::None { nodes }
}

/// Containment of one triple system in another.
pub fn triple_embed(pattern: &TripleSystem, host: &TripleSystem, budget: u64) -> SearchOutcome {
    let orbit = triple_orbit_of_first(pattern);
    let co = co_map(host);
    let m = Matcher {
        steps: triple_steps(pattern, orbit.as_deref(), &[]),
        host: triple_host(host, &co),
        pattern_n: pattern.n(),
        budget,
        nodes: 0,
        pins: Vec::new(),
    };
    run(m, |map| Some(Embedding { map: map.to_vec() }))
}

/// Containment of `g+` in `host`: embed `g` into the shadow of `host`, then
/// pick distinct apexes for the edges by bipartite matching. The returned
/// map is on the vertices of `expand(g)`.
pub fn contains_expansion(g: &Graph, host: &TripleSystem, budget: u64) -> SearchOutcome {
    if g.n() + g.edge_count() > host.n() {
        return SearchOutcome::None { nodes: 0 };
    }
    let sh = shadow(host);
    let co: BTreeMap<(usize, usize), FixedBitSet> = host.co_neighborhoods();
    let edges = g.edges();
    let orbit = graph_orbit_of_first(g);
    let m = Matcher {
        steps: graph_steps(g, orbit.as_deref(), &[]),
        host: graph_host(&sh),
        pattern_n: g.n(),
        budget,
        nodes: 0,
        pins: Vec::new(),
    };
    run(m, |core| {
        let mut used = FixedBitSet::with_capacity(host.n());
        core.iter().for_each(|&v| used.insert(v));
        let options: Vec<Vec<usize>> = edges
            .iter()
            .map(|&(u, v)| {
                let (x, y) = (core[u].min(core[v]), core[u].max(core[v]));
                co.get(&(x, y))
                    .map(|s| s.ones().filter(|&z| !used.contains(z)).collect())
                    .unwrap_or_default()
            })
            .collect();
        let apexes = distinct_representatives(&options, host.n())?;
        let mut map = core.to_vec();
        map.extend(apexes);
        Some(Embedding { map })
    })
}

/// A system of distinct representatives by augmenting paths, if one exists.
pub fn distinct_representatives(options: &[Vec<usize>], universe: usize) -> Option<Vec<usize>> {
    fn augment(i: usize, options: &[Vec<usize>], owner: &mut [usize], seen: &mut FixedBitSet) -> bool {
        for &z in &options[i] {
            if seen.put(z) {
                continue;
            }
            if owner[z] == usize::MAX || augment(owner[z], options, owner, seen) {
                owner[z] = i;
                return true;
            }
        }
        false
    }
    let mut owner = vec![usize::MAX; universe];
    for i in 0..options.len() {
        let mut seen = FixedBitSet::with_capacity(universe);
        if !augment(i, options, &mut owner, &mut seen) {
            return None;
        }
    }
    let mut pick = vec![usize::MAX; options.len()];
    for (z, &i) in owner.iter().enumerate() {
        if i != usize::MAX {
            pick[i] = z;
        }
    }
    Some(pick)
}

/// `triple_embed(expand(g), host)`, for cross-checking [`contains_expansion`].
pub fn expansion_by_triple_search(g: &Graph, host: &TripleSystem, budget: u64) -> SearchOutcome {
    triple_embed(&expand(g), host, budget)
}

//! The extremal constructions: projective norm graphs `PG(q, s)`, their
//! quotients `H_r(q)`, triangle hypergraphs, the crosscut construction, the
//! girth-layered construction and the random-deletion construction.

use fixedbitset::FixedBitSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

use crate::embedding::{graph_embed, graph_embed_through_edge, SearchOutcome};
use crate::error::{Error, Result};
use crate::field::{prime_power, FieldElement, NormTower};
use crate::graph::{girth, greedy_bipartite, triangles_of_graph, Girth, Graph};
use crate::report::{Anchor, Check, ConstructionReport};
use crate::triples::TripleSystem;

/// Largest extension order `q^(s-1)` accepted by the norm-graph builders.
pub const NORM_GRAPH_EXT_CAP: u64 = 4096;
pub const QUOTIENT_Q_CAP: u64 = 64;
pub const RANDOM_DELETION_N_CAP: usize = 200;
/// Above this many vertices the `K_{3,t}` audit of `H_r(q)` is skipped.
const K3T_AUDIT_CAP: usize = 400;

pub const RNG_NAME: &str = "chacha8";

/// Claim text of the exact-degree comparison in `H_r(q)` reports.
pub const EXACT_DEGREE_CLAIM: &str = "every vertex has degree exactly q^2-1";

/// A constructed object together with its report.
#[derive(Clone, Debug)]
pub struct Built<T> {
    pub object: T,
    pub report: ConstructionReport,
}

pub fn degree_histogram(g: &Graph) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for d in g.degrees() {
        *h.entry(d).or_insert(0) += 1;
    }
    h
}

/// Extension elements in vertex-label order: zero, then `g^0, g^1, ...`.
fn ext_in_log_order(t: &NormTower) -> Vec<FieldElement> {
    let e = t.ext();
    std::iter::once(FieldElement::ZERO)
        .chain((0..e.order() as u64 - 1).map(|k| e.exp(k).expect("log tables")))
        .collect()
}

/// Vertices `(A, class)` with index `pos(A) * classes + class`, where the
/// class of a unit `a` is `log(a) mod classes`; adjacency is
/// `class(N(A + B)) = class(a) + class(b)`. Returns the graph and the number
/// of self-adjacent vertices that were dropped.
fn norm_type_graph(t: &NormTower, classes: usize) -> (Graph, usize) {
    let ext = ext_in_log_order(t);
    let (e, base) = (t.ext(), t.base());
    let mut g = Graph::empty(ext.len() * classes);
    let mut loops = 0;
    for (pa, &a) in ext.iter().enumerate() {
        for (pb, &b) in ext.iter().enumerate().skip(pa) {
            let sum = e.add(a, b);
            if sum.is_zero() {
                continue;
            }
            let norm = t.norm(sum).expect("nonzero");
            let x = base.log(norm).expect("unit") as usize % classes;
            for alpha in 0..classes {
                let beta = (x + classes - alpha) % classes;
                let (u, v) = (pa * classes + alpha, pb * classes + beta);
                if u == v {
                    loops += 1;
                } else {
                    g.add_edge(u, v);
                }
            }
        }
    }
    (g, loops)
}

fn checked_prime_power(q: u64) -> Result<()> {
    prime_power(q)
        .map(|_| ())
        .ok_or_else(|| Error::BadParameter(format!("q = {q} is not a prime power")))
}

/// `PG(q, s)` on `GF(q^(s-1)) x GF(q)^*` with `(A,a) ~ (B,b)` iff `N(A+B) = ab`.
pub fn projective_norm_graph(q: u64, s: u32) -> Result<Built<Graph>> {
    if s < 3 {
        return Err(Error::BadParameter(format!("PG(q, s) needs s >= 3, got {s}")));
    }
    checked_prime_power(q)?;
    let big_q = (q as u128).pow(s - 1);
    if big_q > NORM_GRAPH_EXT_CAP as u128 {
        return Err(Error::TooLarge {
            what: "q^(s-1)",
            value: big_q.min(u64::MAX as u128) as u64,
            limit: NORM_GRAPH_EXT_CAP,
        });
    }
    let big_q = big_q as usize;
    let tower = NormTower::for_prime_power(q, s)?;
    let (g, loops) = norm_type_graph(&tower, q as usize - 1);
    let mut report = ConstructionReport::new(format!("pg_{q}_{s}"), g.n(), g.edge_count())
        .param("q", q)
        .param("s", s);
    let expected_n = big_q * (q as usize - 1);
    report.push(Check::new(
        "vertex count is q^(s-1)(q-1)",
        Anchor::NormGraphDefinition,
        g.n(),
        expected_n,
        g.n() == expected_n,
    ));
    let hist = degree_histogram(&g);
    let in_range = hist.keys().all(|&d| d + 2 >= big_q && d < big_q);
    report.push(Check::new(
        "degrees lie in {q^(s-1)-2, q^(s-1)-1} after dropping loops",
        Anchor::NormGraphDefinition,
        &hist,
        [big_q - 2, big_q - 1],
        in_range,
    ));
    report.push(Check::new(
        "self-adjacent vertices dropped",
        Anchor::NormGraphDefinition,
        loops,
        serde_json::Value::Null,
        true,
    ));
    Ok(Built { object: g, report })
}

/// Largest common neighbourhood over all vertex triples.
pub fn max_triple_common_neighborhood(g: &Graph) -> usize {
    let n = g.n();
    let mut best = 0;
    let mut pair = FixedBitSet::with_capacity(n);
    for a in 0..n {
        for b in a + 1..n {
            pair.clone_from(g.neighbors(a));
            pair.intersect_with(g.neighbors(b));
            if pair.count_ones(..) <= best {
                continue;
            }
            for c in b + 1..n {
                best = best.max(pair.intersection_count(g.neighbors(c)));
            }
        }
    }
    best
}

/// Minimum common neighbourhood over pairs whose first coordinates differ.
pub fn min_common_neighbors_distinct_first(g: &Graph, classes: usize) -> Option<usize> {
    let n = g.n();
    let mut best: Option<usize> = None;
    for u in 0..n {
        for v in u + 1..n {
            if u / classes == v / classes {
                continue;
            }
            let c = g.neighbors(u).intersection_count(g.neighbors(v));
            best = Some(best.map_or(c, |b| b.min(c)));
        }
    }
    best
}

/// `H_r(q)` on `GF(q^2) x GF(q)^*/Q_r` with `(A, aQ) ~ (B, bQ)` iff `N(A+B) in abQ`.
/// Vertex index is `pos(A) * (q-1)/r + coset label`.
pub fn quotient_norm_graph(q: u64, r: u64) -> Result<Built<Graph>> {
    checked_prime_power(q)?;
    if q > QUOTIENT_Q_CAP {
        return Err(Error::TooLarge {
            what: "q for H_r(q)",
            value: q,
            limit: QUOTIENT_Q_CAP,
        });
    }
    if r == 0 || !(q - 1).is_multiple_of(r) {
        return Err(Error::NotDivisor { r, order: q - 1 });
    }
    let tower = NormTower::for_prime_power(q, 3)?;
    let subgroup = tower.mult_subgroup(r as u32)?;
    let classes = subgroup.coset_count() as usize;
    let (g, loops) = norm_type_graph(&tower, classes);
    let (qu, ru) = (q as usize, r as usize);
    let mut report = ConstructionReport::new(format!("hrq_{q}_{r}"), g.n(), g.edge_count())
        .param("q", q)
        .param("r", r)
        .param("s", 3);
    let expected_n = (qu.pow(3) - qu.pow(2)) / ru;
    report.push(Check::new(
        "vertex count is (q^3 - q^2)/r",
        Anchor::QuotientNormGraph,
        g.n(),
        expected_n,
        g.n() == expected_n,
    ));
    let hist = degree_histogram(&g);
    let full = qu * qu - 1;
    report.push(Check::new(
        "degrees lie in {q^2-2, q^2-1} after dropping loops",
        Anchor::QuotientNormGraph,
        &hist,
        [full - 1, full],
        hist.keys().all(|&d| d + 1 >= full && d <= full),
    ));
    let deviating: usize = hist.iter().filter(|(&d, _)| d != full).map(|(_, &c)| c).sum();
    report.push(Check::new(
        EXACT_DEGREE_CLAIM,
        Anchor::QuotientNormGraph,
        deviating,
        0,
        deviating == 0,
    ));
    report.push(Check::new(
        "self-adjacent vertices dropped",
        Anchor::QuotientNormGraph,
        loops,
        serde_json::Value::Null,
        true,
    ));
    let min_common = min_common_neighbors_distinct_first(&g, classes).unwrap_or(0);
    let floor = ru * (qu - 2);
    report.push(Check::new(
        "pairs with distinct first coordinates have at least r(q-2) common neighbours",
        Anchor::QuotientNormGraph,
        min_common,
        floor,
        min_common >= floor,
    ));
    if g.n() <= K3T_AUDIT_CAP {
        let t = 2 * ru * ru + 1;
        let max_common = max_triple_common_neighborhood(&g);
        report.push(Check::new(
            "no K_{3,t} with t = 2r^2+1: every vertex triple has fewer than t common neighbours",
            Anchor::QuotientNormGraphK3tFree,
            max_common,
            t,
            max_common < t,
        ));
    }
    Ok(Built { object: g, report })
}

/// Parameters of the norm graph a host came from, for the triangle floor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NormGraphOrigin {
    pub q: u64,
    pub s: u32,
}

impl NormGraphOrigin {
    /// Six times the triangle floor from the counting argument:
    /// `q^(s-1) (q-1) (q^(s-1)-1) (q^(s-2)-2)`.
    pub fn six_times_triangle_floor(self) -> u128 {
        let q = self.q as u128;
        let big = q.pow(self.s - 1);
        big * (q - 1) * (big - 1) * (q.pow(self.s - 2) - 2)
    }
}

/// The 3-graph of triangles of `g`.
pub fn triangle_hypergraph(g: &Graph, origin: Option<NormGraphOrigin>) -> Built<TripleSystem> {
    let h = triangles_of_graph(g);
    let mut report = ConstructionReport::new("triangle_hypergraph", h.n(), h.len());
    if let Some(o) = origin {
        report = report.param("q", o.q).param("s", o.s);
        let six = o.six_times_triangle_floor();
        report.push(Check::new(
            "triangle count is at least q^(s-1)(q-1)(q^(s-1)-1)(q^(s-2)-2)/6",
            Anchor::NormGraphTriangleCount,
            h.len(),
            (six as f64) / 6.0,
            6 * h.len() as u128 >= six,
        ));
    }
    Built { object: h, report }
}

/// All triples meeting the core `{0, ..., sigma-2}` in exactly one vertex.
pub fn sigma_construction(n: usize, sigma: usize) -> Result<TripleSystem> {
    if sigma == 0 || n < sigma + 2 {
        return Err(Error::BadParameter(format!(
            "crosscut construction needs sigma >= 1 and n >= sigma + 2, got n={n}, sigma={sigma}"
        )));
    }
    let core = sigma - 1;
    let mut triples = Vec::new();
    for c in 0..core {
        for a in core..n {
            for b in a + 1..n {
                triples.push([c, a, b]);
            }
        }
    }
    TripleSystem::new(n, triples)
}

pub fn sigma_construction_count(n: usize, sigma: usize) -> usize {
    let outside = n + 1 - sigma;
    (sigma - 1) * outside * (outside - 1) / 2
}

pub fn sigma_construction_report(n: usize, sigma: usize) -> Result<Built<TripleSystem>> {
    let h = sigma_construction(n, sigma)?;
    let mut report = ConstructionReport::new(format!("sigma_{n}_{sigma}"), h.n(), h.len())
        .param("n", n)
        .param("sigma", sigma);
    let expected = sigma_construction_count(n, sigma);
    report.push(Check::new(
        "triple count is (sigma-1) C(n-sigma+1, 2)",
        Anchor::CrosscutConstruction,
        h.len(),
        expected,
        h.len() == expected,
    ));
    let core = sigma - 1;
    let exact = h.triples().iter().all(|t| t.iter().filter(|&&v| v < core).count() == 1);
    report.push(Check::new(
        "every triple meets the core in exactly one vertex",
        Anchor::CrosscutConstruction,
        exact,
        true,
        exact,
    ));
    Ok(Built { object: h, report })
}

/// Triples `{u, v, x}` for every edge `uv` of a random greedy bipartite graph
/// of girth above `k` on `0..n/2` and every `x` in the apex layer `n/2..n`.
pub fn layered_girth_construction(n: usize, k: usize, seed: u64) -> Result<Built<TripleSystem>> {
    if n < 6 || k < 3 {
        return Err(Error::BadParameter(format!(
            "layered construction needs n >= 6 and k >= 3, got n={n}, k={k}"
        )));
    }
    let layer_n = n / 2;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let layer = greedy_bipartite(layer_n, k, &mut rng);
    let apexes = n - layer_n;
    let mut triples = Vec::with_capacity(layer.edge_count() * apexes);
    for (u, v) in layer.edges() {
        for x in layer_n..n {
            triples.push([u, v, x]);
        }
    }
    let h = TripleSystem::new(n, triples)?;
    let mut report = ConstructionReport::new(format!("girth_layers_{n}_{k}_{seed}"), h.n(), h.len())
        .param("n", n)
        .param("k", k)
        .param("seed", seed)
        .param("rng", RNG_NAME);
    let layer_girth = girth(&layer);
    report.push(Check::new(
        "girth of the bipartite layer exceeds k",
        Anchor::GirthLayeredConstruction,
        layer_girth,
        k,
        layer_girth > Girth::Finite(k),
    ));
    report.push(Check::new(
        "bipartite layer edge count (greedy stand-in for g(n/2, k))",
        Anchor::GirthLayeredConstruction,
        layer.edge_count(),
        serde_json::Value::Null,
        true,
    ));
    let product = apexes * layer.edge_count();
    report.push(Check::new(
        "triple count equals |X| |F|",
        Anchor::GirthLayeredConstruction,
        h.len(),
        product,
        h.len() == product,
    ));
    let split = layer_n / 2;
    let tripartite = h
        .triples()
        .iter()
        .all(|&[u, v, x]| u < split && (split..layer_n).contains(&v) && x >= layer_n);
    report.push(Check::new(
        "every triple meets U, V and X once each",
        Anchor::GirthLayeredConstruction,
        tripartite,
        true,
        tripartite,
    ));
    Ok(Built { object: h, report })
}

/// Edge probability `0.1 n^(-(v-3)/(f-3))` for a pattern with `v` vertices and `f` edges.
pub fn deletion_probability(n: usize, v: usize, f: usize) -> f64 {
    let exponent = (v as f64 - 3.0) / (f as f64 - 3.0);
    (0.1 * (n as f64).powf(-exponent)).clamp(0.0, 1.0)
}

/// Deletes edges until `g` has no copy of `pattern`. Copies are compared by
/// their sorted edge lists; the smallest copy loses its smallest edge.
/// Returns the number of deleted edges and the node count of the final,
/// exhaustive search.
pub(crate) fn destroy_copies(g: &mut Graph, pattern: &Graph, budget: u64) -> Result<(usize, u64)> {
    let mut copies = 0usize;
    loop {
        let bound = match graph_embed(pattern, g, budget) {
            SearchOutcome::Found { embedding, .. } => smallest_image_edge(pattern, &embedding.map),
            SearchOutcome::None { nodes } => return Ok((copies, nodes)),
            SearchOutcome::BudgetExhausted { .. } => return Err(Error::PatternTooDense(budget)),
        };
        // The smallest edge of the smallest copy is the smallest host edge
        // lying in any copy; `bound` caps the scan.
        let mut target = bound;
        for e in g.edges().into_iter().take_while(|&e| e < bound) {
            match graph_embed_through_edge(pattern, g, e, budget) {
                SearchOutcome::Found { .. } => {
                    target = e;
                    break;
                }
                SearchOutcome::None { .. } => {}
                SearchOutcome::BudgetExhausted { .. } => return Err(Error::PatternTooDense(budget)),
            }
        }
        g.remove_edge(target.0, target.1);
        copies += 1;
    }
}

fn smallest_image_edge(pattern: &Graph, map: &[usize]) -> (usize, usize) {
    pattern
        .edges()
        .iter()
        .map(|&(a, b)| (map[a].min(map[b]), map[a].max(map[b])))
        .min()
        .expect("pattern has edges")
}

/// Random graph with copies of `pattern` destroyed (see [`destroy_copies`]),
/// then its triangle 3-graph.
pub fn random_deletion_construction(n: usize, pattern: &Graph, seed: u64, budget: u64) -> Result<Built<TripleSystem>> {
    let f = pattern.edge_count();
    if f < 4 {
        return Err(Error::BadParameter(format!("pattern needs at least 4 edges, has {f}")));
    }
    if n > RANDOM_DELETION_N_CAP {
        return Err(Error::TooLarge {
            what: "vertex count for random deletion",
            value: n as u64,
            limit: RANDOM_DELETION_N_CAP as u64,
        });
    }
    let p = deletion_probability(n, pattern.n(), f);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                g.add_edge(u, v);
            }
        }
    }
    let sampled = g.edge_count();
    let (copies, last_nodes) = destroy_copies(&mut g, pattern, budget)?;
    let h = triangles_of_graph(&g);
    let mut report = ConstructionReport::new(format!("random_del_{n}_{seed}"), h.n(), h.len())
        .param("n", n)
        .param("seed", seed)
        .param("rng", RNG_NAME)
        .param("pattern_vertices", pattern.n())
        .param("pattern_edges", f)
        .param("p", p);
    report.push(Check::new(
        "edges sampled with p = 0.1 n^(-(v-3)/(f-3))",
        Anchor::RandomDeletionConstruction,
        sampled,
        p * (n * (n - 1) / 2) as f64,
        true,
    ));
    report.push(Check::new(
        "edges deleted to destroy pattern copies",
        Anchor::RandomDeletionConstruction,
        copies,
        serde_json::Value::Null,
        true,
    ));
    report.push(Check::new(
        "residual graph has no copy of the pattern (exhaustive search)",
        Anchor::RandomDeletionConstruction,
        last_nodes,
        "none",
        true,
    ));
    Ok(Built { object: h, report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::{contains_expansion, DEFAULT_BUDGET};
    use crate::graph::NamedGraph;

    #[test]
    fn pg_3_3_shape() {
        let b = projective_norm_graph(3, 3).unwrap();
        assert_eq!(b.object.n(), 18);
        assert!(b.object.degrees().iter().all(|&d| d == 7 || d == 8));
        assert!(b.report.all_pass());
    }

    #[test]
    fn pg_parameter_errors() {
        assert!(matches!(projective_norm_graph(3, 2), Err(Error::BadParameter(_))));
        assert!(matches!(projective_norm_graph(6, 3), Err(Error::BadParameter(_))));
        assert!(matches!(projective_norm_graph(17, 4), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn pg_adjacency_matches_definition() {
        for q in [3u64, 4, 5] {
            let t = NormTower::for_prime_power(q, 3).unwrap();
            let ext = ext_in_log_order(&t);
            let units: Vec<FieldElement> = (0..q - 1).map(|k| t.base().exp(k).unwrap()).collect();
            let g = projective_norm_graph(q, 3).unwrap().object;
            let c = units.len();
            for u in 0..g.n() {
                for v in 0..g.n() {
                    if u == v {
                        continue;
                    }
                    let (a, alpha) = (ext[u / c], units[u % c]);
                    let (b, beta) = (ext[v / c], units[v % c]);
                    let sum = t.ext().add(a, b);
                    let adjacent = !sum.is_zero() && t.norm(sum).unwrap() == t.base().mul(alpha, beta);
                    assert_eq!(g.has_edge(u, v), adjacent, "q={q} u={u} v={v}");
                }
            }
        }
    }

    #[test]
    fn quotient_with_r1_is_pg() {
        for q in [3, 4, 5, 7] {
            assert_eq!(
                quotient_norm_graph(q, 1).unwrap().object,
                projective_norm_graph(q, 3).unwrap().object
            );
        }
    }

    #[test]
    fn quotient_errors() {
        assert_eq!(
            quotient_norm_graph(5, 3).unwrap_err(),
            Error::NotDivisor { r: 3, order: 4 }
        );
        assert!(matches!(quotient_norm_graph(67, 2), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn sigma_counts() {
        assert_eq!(sigma_construction(12, 2).unwrap().len(), 55);
        assert_eq!(sigma_construction(10, 3).unwrap().len(), 56);
        assert!(sigma_construction(8, 1).unwrap().is_empty());
        assert!(sigma_construction(4, 3).is_err());
        let h = sigma_construction(10, 2).unwrap();
        assert_eq!(crate::triples::codegree(&h, 3, 7).unwrap(), 1);
        assert!(sigma_construction_report(12, 2).unwrap().report.all_pass());
    }

    #[test]
    fn layered_example() {
        let b = layered_girth_construction(20, 4, 1).unwrap();
        assert!(b.report.all_pass(), "{:#?}", b.report);
        assert_eq!(b.object.n(), 20);
        assert!(layered_girth_construction(5, 4, 1).is_err());
        // n = 6 leaves a 3-vertex layer; still valid
        assert!(layered_girth_construction(6, 3, 0).unwrap().report.all_pass());
    }

    #[test]
    fn deletion_probability_for_k4() {
        let p = deletion_probability(64, 4, 6);
        assert!((p - 0.1 / 4.0).abs() < 1e-12);
    }

    #[test]
    fn random_deletion_is_expansion_free() {
        let k22 = NamedGraph::CompleteBipartite(2, 2).build().unwrap();
        for seed in 0..3 {
            let b = random_deletion_construction(40, &k22, seed, DEFAULT_BUDGET).unwrap();
            assert!(contains_expansion(&k22, &b.object, DEFAULT_BUDGET).is_none());
        }
        let k4 = NamedGraph::Clique(4).build().unwrap();
        let b = random_deletion_construction(30, &k4, 5, DEFAULT_BUDGET).unwrap();
        assert!(contains_expansion(&k4, &b.object, DEFAULT_BUDGET).is_none());
        let p3 = NamedGraph::Path(3).build().unwrap();
        assert!(random_deletion_construction(10, &p3, 0, DEFAULT_BUDGET).is_err());
        assert!(random_deletion_construction(201, &k4, 0, DEFAULT_BUDGET).is_err());
    }

    #[test]
    fn copy_destruction_deletes_the_smallest_covered_edge() {
        use rand::Rng;
        let c4 = NamedGraph::Cycle(4).build().unwrap();
        let k4 = NamedGraph::Clique(4).build().unwrap();
        for seed in 0..6 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut g = Graph::empty(9);
            for u in 0..9 {
                for v in u + 1..9 {
                    if rng.gen::<f64>() < 0.6 {
                        g.add_edge(u, v);
                    }
                }
            }
            for pattern in [&c4, &k4] {
                // Reference: repeatedly delete the smallest edge whose removal
                // loses a copy, i.e. the smallest edge some copy uses.
                let mut expected = g.clone();
                let mut deleted = 0;
                while graph_embed(pattern, &expected, DEFAULT_BUDGET).is_found() {
                    let e = expected
                        .edges()
                        .into_iter()
                        .find(|&(u, v)| {
                            let mut without = expected.clone();
                            without.remove_edge(u, v);
                            copy_count(pattern, &without) < copy_count(pattern, &expected)
                        })
                        .unwrap();
                    expected.remove_edge(e.0, e.1);
                    deleted += 1;
                }
                let mut got = g.clone();
                let (copies, _) = destroy_copies(&mut got, pattern, DEFAULT_BUDGET).unwrap();
                assert_eq!(got, expected, "seed {seed}");
                assert_eq!(copies, deleted);
            }
        }
    }

    /// Labelled copies, counted by brute force over injective maps.
    fn copy_count(pattern: &Graph, host: &Graph) -> usize {
        fn go(p: &Graph, h: &Graph, map: &mut Vec<usize>, count: &mut usize) {
            if map.len() == p.n() {
                *count += 1;
                return;
            }
            let v = map.len();
            for x in 0..h.n() {
                if map.contains(&x) || !(0..v).all(|u| !p.has_edge(u, v) || h.has_edge(map[u], x)) {
                    continue;
                }
                map.push(x);
                go(p, h, map, count);
                map.pop();
            }
        }
        let mut count = 0;
        go(pattern, host, &mut Vec::new(), &mut count);
        count
    }
}

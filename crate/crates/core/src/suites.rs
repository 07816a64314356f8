//! Named check suites, run as a batch and reported together.
//!
//! Each suite rebuilds its objects from the frozen generators and records
//! one check per measured claim. Suites are sized to finish in seconds to
//! minutes in release builds.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::constructions::{
    layered_girth_construction, projective_norm_graph, quotient_norm_graph, random_deletion_construction,
    sigma_construction, sigma_construction_count, triangle_hypergraph, NormGraphOrigin, EXACT_DEGREE_CLAIM, RNG_NAME,
};
use crate::embedding::{contains_expansion, graph_embed, triple_embed, SearchOutcome};
use crate::error::{Error, Result};
use crate::field::NormTower;
use crate::graph::{bichromatic_cycle_profile, has_acyclic_3_coloring, proper_3_colorings, Girth, Graph, NamedGraph};
use crate::oracle::{ex2_bruteforce, ex3_bruteforce};
use crate::report::{Anchor, Check, ConstructionReport};
use crate::triples::{
    crosscut, expand, full_subgraph, h_t_pattern, is_crosscut, min_positive_codegree, shadow, triple_matching,
    TripleSystem,
};

pub const SUITE_NAMES: [&str; 11] = [
    "norm-fibers",
    "norm-ratio",
    "pg-structure",
    "kst-free",
    "quotient",
    "full-subgraph",
    "oracle",
    "crosscut",
    "sigma-freeness",
    "coloring",
    "contracts",
];

/// Claims that are measured and reported but do not decide a suite: the
/// stated value is compared against, not required.
pub const RECORDED_ONLY: [&str; 1] = [EXACT_DEGREE_CLAIM];

#[derive(Clone, Debug, Serialize)]
pub struct RecordedDeviation {
    pub report: String,
    pub claim: String,
    pub measured: Value,
    pub bound: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteResult {
    pub suite: String,
    pub pass: bool,
    pub recorded_deviations: Vec<RecordedDeviation>,
    pub reports: Vec<ConstructionReport>,
}

impl SuiteResult {
    fn new(suite: &str, reports: Vec<ConstructionReport>) -> Self {
        let mut pass = true;
        let mut recorded_deviations = Vec::new();
        for r in &reports {
            for c in r.checks.iter().filter(|c| !c.pass) {
                if RECORDED_ONLY.contains(&c.claim.as_str()) {
                    recorded_deviations.push(RecordedDeviation {
                        report: r.name.clone(),
                        claim: c.claim.clone(),
                        measured: c.measured.clone(),
                        bound: c.bound.clone(),
                    });
                } else {
                    pass = false;
                }
            }
        }
        SuiteResult {
            suite: suite.to_string(),
            pass,
            recorded_deviations,
            reports,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("suite serializes") + "\n"
    }
}

/// Runs one named suite, or every suite for `all`.
pub fn run_suite(name: &str, budget: u64) -> Result<SuiteResult> {
    let reports = match name {
        "all" => {
            let mut all = Vec::new();
            for s in SUITE_NAMES {
                all.extend(run_suite(s, budget)?.reports);
            }
            all
        }
        "norm-fibers" => norm_fibers()?,
        "norm-ratio" => norm_ratio()?,
        "pg-structure" => pg_structure()?,
        "kst-free" => kst_free(budget)?,
        "quotient" => vec![quotient_norm_graph(5, 2)?.report],
        "full-subgraph" => vec![full_subgraph_suite(200, 0)],
        "oracle" => oracle()?,
        "crosscut" => crosscuts()?,
        "sigma-freeness" => sigma_freeness(budget)?,
        "coloring" => coloring()?,
        "contracts" => contracts(budget)?,
        other => return Err(Error::UnknownName(format!("suite `{other}`"))),
    };
    Ok(SuiteResult::new(name, reports))
}

const TOWERS: [(u64, u32); 5] = [(3, 3), (4, 3), (5, 3), (7, 3), (3, 4)];

fn norm_fibers() -> Result<Vec<ConstructionReport>> {
    let mut out = Vec::new();
    for (q, s) in TOWERS {
        let t = NormTower::for_prime_power(q, s)?;
        let expected = (t.ext().order() as usize - 1) / (q as usize - 1);
        let mut sizes = Vec::new();
        for x in t.base().units() {
            sizes.push(t.norm_fiber(x)?.len());
        }
        let mut r = ConstructionReport::new(format!("norm_fibers_{q}_{s}"), t.ext().order() as usize, 0)
            .param("q", q)
            .param("s", s);
        r.push(Check::new(
            "every nonzero base element has (q^(s-1)-1)/(q-1) norm preimages",
            Anchor::NormFiberSize,
            &sizes,
            expected,
            sizes.iter().all(|&k| k == expected),
        ));
        out.push(r);
    }
    Ok(out)
}

fn norm_ratio() -> Result<Vec<ConstructionReport>> {
    let mut out = Vec::new();
    for (q, s) in [(3u64, 3u32), (4, 3), (5, 3)] {
        let t = NormTower::for_prime_power(q, s)?;
        let floor = (q as usize).pow(s - 2);
        let mut min = usize::MAX;
        let mut cases = 0u64;
        let elems: Vec<_> = t.ext().elements().collect();
        for &a in &elems {
            for &b in &elems {
                if a == b {
                    continue;
                }
                for x in t.base().units() {
                    min = min.min(t.count_norm_ratio_solutions(a, b, x)?);
                    cases += 1;
                }
            }
        }
        let mut r = ConstructionReport::new(format!("norm_ratio_{q}_{s}"), elems.len(), 0)
            .param("q", q)
            .param("s", s)
            .param("cases", cases);
        r.push(Check::new(
            "N((A+C)/(B+C)) = x has at least q^(s-2) solutions C",
            Anchor::NormRatioSolutions,
            min,
            floor,
            min >= floor,
        ));
        out.push(r);
    }
    Ok(out)
}

fn pg_structure() -> Result<Vec<ConstructionReport>> {
    let mut out = Vec::new();
    for q in [3u64, 4, 5, 7] {
        let built = projective_norm_graph(q, 3)?;
        let mut r = built.report;
        let tri = triangle_hypergraph(&built.object, Some(NormGraphOrigin { q, s: 3 })).report;
        r.checks.extend(tri.checks);
        out.push(r);
    }
    Ok(out)
}

fn embed_check(claim: &str, anchor: Anchor, outcome: &SearchOutcome) -> Check {
    Check::new(
        claim,
        anchor,
        json!({"verdict": outcome.verdict(), "nodes": outcome.nodes()}),
        "none",
        outcome.is_none(),
    )
}

fn kst_free(budget: u64) -> Result<Vec<ConstructionReport>> {
    let k33 = NamedGraph::CompleteBipartite(3, 3).build()?;
    let mut out = Vec::new();
    for q in [3u64, 5] {
        let g = projective_norm_graph(q, 3)?.object;
        let mut r = ConstructionReport::new(format!("kst_free_pg_{q}_3"), g.n(), g.edge_count())
            .param("q", q)
            .param("s", 3);
        r.push(embed_check(
            "PG(q,3) contains no K_{3,3}",
            Anchor::NormGraphKstFree,
            &graph_embed(&k33, &g, budget),
        ));
        out.push(r);
    }
    Ok(out)
}

/// A random triple system on `4..=14` vertices with a random density.
pub fn random_triple_system<R: Rng + ?Sized>(rng: &mut R) -> TripleSystem {
    let n = rng.gen_range(4..=14);
    let p: f64 = rng.gen_range(0.05..0.6);
    let mut triples = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if rng.gen::<f64>() < p {
                    triples.push([a, b, c]);
                }
            }
        }
    }
    TripleSystem::new(n, triples).expect("triples are in range")
}

/// Whether every shadow pair of `h` lies in at least `k` triples.
pub fn is_full(h: &TripleSystem, k: usize) -> bool {
    min_positive_codegree(h).is_none_or(|c| c >= k)
}

fn full_subgraph_suite(cases: usize, seed: u64) -> ConstructionReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut full_ok, mut bound_ok) = (0usize, 0usize);
    for _ in 0..cases {
        let h = random_triple_system(&mut rng);
        let d = rng.gen_range(1..=3);
        let f = full_subgraph(&h, d);
        full_ok += usize::from(is_full(&f, d + 1));
        let floor = h.len() as i64 - (d * shadow(&h).edge_count()) as i64;
        bound_ok += usize::from(f.len() as i64 >= floor);
    }
    let mut r = ConstructionReport::new("full_subgraph_random", 0, 0)
        .param("cases", cases)
        .param("seed", seed)
        .param("rng", RNG_NAME);
    r.push(Check::new(
        "output is (d+1)-full",
        Anchor::FullSubgraphLemma,
        full_ok,
        cases,
        full_ok == cases,
    ));
    r.push(Check::new(
        "|F| >= |H| - d |shadow(H)|",
        Anchor::FullSubgraphLemma,
        bound_ok,
        cases,
        bound_ok == cases,
    ));
    r
}

fn oracle() -> Result<Vec<ConstructionReport>> {
    let k3 = NamedGraph::Clique(3).build()?;
    let c4 = NamedGraph::Cycle(4).build()?;
    let k3p = expand(&k3);
    let m2 = triple_matching(2);
    let cases: Vec<(usize, usize, &str, usize, bool)> = vec![
        (2, 5, "K3", ex2_bruteforce(5, &k3, "K3", true)?.value, true),
        (2, 4, "C4", ex2_bruteforce(4, &c4, "C4", true)?.value, true),
        (3, 5, "K3plus", ex3_bruteforce(5, &k3p, "K3plus", true)?.value, true),
        (3, 6, "M2", ex3_bruteforce(6, &m2, "M2", true)?.value, true),
        (3, 6, "K3plus", ex3_bruteforce(6, &k3p, "K3plus", true)?.value, false),
    ];
    let expected = [6, 4, 10, 10, 10];
    let mut r = ConstructionReport::new("oracle_small_values", 0, 0);
    for ((rr, n, id, value, exact), want) in cases.into_iter().zip(expected) {
        let (claim, pass) = if exact {
            (format!("ex{rr}({n}, {id}) = {want}"), value == want)
        } else {
            (format!("ex{rr}({n}, {id}) >= {want}"), value >= want)
        };
        r.push(Check::new(claim, Anchor::TuranNumberDefinition, value, want, pass));
    }
    Ok(vec![r])
}

fn crosscuts() -> Result<Vec<ConstructionReport>> {
    let cases = [
        ("K3plus", expand(&NamedGraph::Clique(3).build()?), 2usize),
        ("K33plus", expand(&NamedGraph::CompleteBipartite(3, 3).build()?), 3),
        ("Ht2", h_t_pattern(2)?, 2),
    ];
    let mut out = Vec::new();
    for (id, h, want) in cases {
        let c = crosscut(&h, want)?;
        let mut r = ConstructionReport::new(format!("crosscut_{id}"), h.n(), h.len());
        r.push(Check::new(
            "minimum crosscut size",
            Anchor::CrosscutDefinition,
            json!({"size": c.size, "witness": c.witness}),
            want,
            c.exists && c.size == want && is_crosscut(&h, &c.witness),
        ));
        let smaller = crosscut(&h, want - 1)?;
        r.push(Check::new(
            "no smaller crosscut",
            Anchor::CrosscutDefinition,
            smaller.exists,
            false,
            !smaller.exists,
        ));
        out.push(r);
    }
    Ok(out)
}

fn sigma_freeness(budget: u64) -> Result<Vec<ConstructionReport>> {
    let cases = [
        ("K3plus", expand(&NamedGraph::Clique(3).build()?), 12usize, 2usize),
        ("Ht2", h_t_pattern(2)?, 12, 2),
        ("K33plus", expand(&NamedGraph::CompleteBipartite(3, 3).build()?), 14, 3),
    ];
    let mut out = Vec::new();
    for (id, pattern, n, sigma) in cases {
        let host = sigma_construction(n, sigma)?;
        let mut r = ConstructionReport::new(format!("sigma_{n}_{sigma}_free_of_{id}"), host.n(), host.len())
            .param("n", n)
            .param("sigma", sigma)
            .param("pattern", id);
        let want = sigma_construction_count(n, sigma);
        r.push(Check::new(
            "triple count is (sigma-1) C(n-sigma+1, 2)",
            Anchor::CrosscutConstruction,
            host.len(),
            want,
            host.len() == want,
        ));
        r.push(embed_check(
            "construction contains no copy of a pattern with crosscut number sigma",
            Anchor::CrosscutConstruction,
            &triple_embed(&pattern, &host, budget),
        ));
        out.push(r);
    }
    Ok(out)
}

fn coloring() -> Result<Vec<ConstructionReport>> {
    let oct = NamedGraph::Octahedron.build()?;
    let mut r = ConstructionReport::new("coloring_facts", 0, 0);
    let mut profiles = Vec::new();
    for c in proper_3_colorings(&oct, false)? {
        profiles.push(bichromatic_cycle_profile(&oct, &c)?);
    }
    let four = Girth::Finite(4);
    r.push(Check::new(
        "every proper 3-coloring of the octahedron has all bichromatic profiles equal to 4",
        Anchor::OctahedronColoring,
        json!({"colorings": profiles.len()}),
        4,
        !profiles.is_empty() && profiles.iter().all(|p| p.iter().all(|&g| g == four)),
    ));
    for k in [4usize, 6] {
        let w = NamedGraph::Wheel(k).build()?;
        let acyclic = has_acyclic_3_coloring(&w)?;
        r.push(Check::new(
            format!("wheel({k}) has no acyclic 3-coloring"),
            Anchor::EvenWheelColoring,
            acyclic.is_some(),
            false,
            acyclic.is_none(),
        ));
    }
    for (name, g) in [
        ("path(6)", NamedGraph::Path(6).build()?),
        ("cycle(5)", NamedGraph::Cycle(5).build()?),
    ] {
        let witness = has_acyclic_3_coloring(&g)?;
        let ok = witness.as_ref().is_some_and(|c| witness_is_acyclic(&g, c.colors()));
        r.push(Check::new(
            format!("{name} has an acyclic 3-coloring"),
            Anchor::TreewidthTwo,
            witness.map(|c| c.colors().to_vec()),
            true,
            ok,
        ));
    }
    Ok(vec![r])
}

/// Proper, and no two colour classes span a cycle.
fn witness_is_acyclic(g: &Graph, colors: &[u8]) -> bool {
    if g.edges().iter().any(|&(u, v)| colors[u] == colors[v]) {
        return false;
    }
    crate::graph::CLASS_PAIRS.iter().all(|&(a, b)| {
        let mut keep = fixedbitset::FixedBitSet::with_capacity(g.n());
        keep.extend((0..g.n()).filter(|&v| colors[v] == a || colors[v] == b));
        crate::graph::girth(&g.restrict_to(&keep)) == Girth::Infinite
    })
}

fn contracts(budget: u64) -> Result<Vec<ConstructionReport>> {
    let k22 = NamedGraph::CompleteBipartite(2, 2).build()?;
    let built = random_deletion_construction(60, &k22, 7, budget)?;
    let mut del = built.report;
    del.push(embed_check(
        "triangle 3-graph contains no expansion of the pattern",
        Anchor::RandomDeletionConstruction,
        &contains_expansion(&k22, &built.object, budget),
    ));
    let layered = layered_girth_construction(20, 4, 1)?.report;
    Ok(vec![del, layered])
}

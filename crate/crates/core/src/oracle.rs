//! Exhaustive Turán numbers `ex_2(n, G)` and `ex_3(n, F)` for tiny `n`.
//!
//! Objects are subsets of the `C(n, r)` possible edges ("slots", in
//! lexicographic order). The search grows sets by appending slots beyond the
//! current last one. With canonical pruning only orderly representatives are
//! expanded: a set is kept iff its characteristic vector (slot 0 most
//! significant) is maximal over all vertex relabellings, and deleting the
//! last slot of such a set leaves a maximal one, so every isomorphism class
//! is reached through canonical parents.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::path::Path;
use std::time::Instant;

use crate::embedding::{graph_embed, triple_embed, SearchOutcome, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::triples::TripleSystem;

pub const EX2_N_CAP: usize = 8;
pub const EX2_UNPRUNED_N_CAP: usize = 7;
pub const EX3_N_CAP: usize = 7;
pub const EX3_UNPRUNED_N_CAP: usize = 6;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub elapsed_ms: u128,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExtremalResult {
    pub r: usize,
    pub n: usize,
    pub pattern: String,
    pub value: usize,
    /// Edges (or triples) of a pattern-free object with `value` edges.
    pub witness: Vec<Vec<usize>>,
    pub canonical_pruning: bool,
    pub stats: SearchStats,
}

impl ExtremalResult {
    pub fn witness_graph(&self) -> Option<Graph> {
        (self.r == 2).then(|| {
            let edges: Vec<(usize, usize)> = self.witness.iter().map(|e| (e[0], e[1])).collect();
            Graph::from_edges(self.n, &edges).expect("witness edges are valid")
        })
    }

    pub fn witness_triples(&self) -> Option<TripleSystem> {
        (self.r == 3).then(|| {
            TripleSystem::new(self.n, self.witness.iter().map(|t| [t[0], t[1], t[2]]))
                .expect("witness triples are valid")
        })
    }
}

fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(v + 1, n, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, r, &mut Vec::new(), &mut out);
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(k: usize, perm: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == perm.len() {
            out.push(perm.clone());
            return;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            rec(k + 1, perm, out);
            perm.swap(k, i);
        }
    }
    let mut out = Vec::new();
    rec(0, &mut (0..n).collect(), &mut out);
    out
}

struct Orderly<'a> {
    slots: &'a [Vec<usize>],
    /// `images[p][s]`: bit of the image of slot `s` under permutation `p`.
    images: Vec<Vec<u64>>,
    canonical: bool,
    best: usize,
    witness: Vec<usize>,
    nodes: u64,
}

impl Orderly<'_> {
    fn bit(&self, slot: usize) -> u64 {
        1u64 << (self.slots.len() - 1 - slot)
    }

    fn is_canonical(&self, mask: u64) -> bool {
        self.images.iter().all(|img| {
            let mut m = mask;
            let mut image = 0u64;
            while m != 0 {
                let b = m.trailing_zeros() as usize;
                image |= img[self.slots.len() - 1 - b];
                m &= m - 1;
            }
            image <= mask
        })
    }

    fn dfs<F>(&mut self, mask: u64, next: usize, chosen: &mut Vec<usize>, is_free: &mut F) -> Result<()>
    where
        F: FnMut(&[usize]) -> Result<bool>,
    {
        self.nodes += 1;
        if chosen.len() > self.best {
            self.best = chosen.len();
            self.witness = chosen.clone();
        }
        let total = self.slots.len();
        for s in next..total {
            if chosen.len() + (total - s) <= self.best {
                break;
            }
            let child = mask | self.bit(s);
            if self.canonical && !self.is_canonical(child) {
                continue;
            }
            chosen.push(s);
            if is_free(chosen)? {
                self.dfs(child, s + 1, chosen, is_free)?;
            }
            chosen.pop();
        }
        Ok(())
    }
}

/// Per vertex permutation, the bit of each slot's image.
fn relabel_images(n: usize, slots: &[Vec<usize>], index: &BTreeMap<Vec<usize>, usize>) -> Vec<Vec<u64>> {
    permutations(n)
        .into_iter()
        .map(|p| {
            slots
                .iter()
                .map(|s| {
                    let mut t: Vec<usize> = s.iter().map(|&v| p[v]).collect();
                    t.sort_unstable();
                    1u64 << (slots.len() - 1 - index[&t])
                })
                .collect()
        })
        .collect()
}

fn exhaustive_max<F>(n: usize, r: usize, canonical: bool, mut is_free: F) -> Result<(usize, Vec<Vec<usize>>, u64)>
where
    F: FnMut(&[Vec<usize>], &[usize]) -> Result<bool>,
{
    let slots = subsets(n, r);
    assert!(slots.len() <= 64);
    let index: BTreeMap<Vec<usize>, usize> = slots.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
    let images = if canonical {
        relabel_images(n, &slots, &index)
    } else {
        Vec::new()
    };
    let mut search = Orderly {
        slots: &slots,
        images,
        canonical,
        best: 0,
        witness: Vec::new(),
        nodes: 0,
    };
    search.dfs(0, 0, &mut Vec::new(), &mut |chosen| is_free(&slots, chosen))?;
    let witness = search.witness.iter().map(|&s| slots[s].clone()).collect();
    Ok((search.best, witness, search.nodes))
}

fn exhaustive_verdict(out: SearchOutcome) -> Result<bool> {
    match out {
        SearchOutcome::Found { .. } => Ok(false),
        SearchOutcome::None { .. } => Ok(true),
        SearchOutcome::BudgetExhausted { .. } => Err(Error::PatternTooDense(DEFAULT_BUDGET)),
    }
}

fn too_large(what: &'static str, n: usize, limit: usize) -> Error {
    Error::TooLarge {
        what,
        value: n as u64,
        limit: limit as u64,
    }
}

/// `ex_2(n, pattern)` by exhaustive search.
pub fn ex2_bruteforce(n: usize, pattern: &Graph, pattern_id: &str, canonical_pruning: bool) -> Result<ExtremalResult> {
    let cap = if canonical_pruning {
        EX2_N_CAP
    } else {
        EX2_UNPRUNED_N_CAP
    };
    if n > cap {
        return Err(too_large("n for ex_2", n, cap));
    }
    if pattern.edge_count() == 0 {
        return Err(Error::BadParameter("pattern has no edges".into()));
    }
    let start = Instant::now();
    let (value, witness, nodes) = exhaustive_max(n, 2, canonical_pruning, |slots, chosen| {
        if chosen.len() < pattern.edge_count() || pattern.n() > n {
            return Ok(true);
        }
        let edges: Vec<(usize, usize)> = chosen.iter().map(|&s| (slots[s][0], slots[s][1])).collect();
        let host = Graph::from_edges(n, &edges)?;
        exhaustive_verdict(graph_embed(pattern, &host, DEFAULT_BUDGET))
    })?;
    Ok(ExtremalResult {
        r: 2,
        n,
        pattern: pattern_id.to_string(),
        value,
        witness,
        canonical_pruning,
        stats: SearchStats {
            nodes,
            elapsed_ms: start.elapsed().as_millis(),
        },
    })
}

/// `ex_3(n, pattern)` by exhaustive search.
pub fn ex3_bruteforce(
    n: usize,
    pattern: &TripleSystem,
    pattern_id: &str,
    canonical_pruning: bool,
) -> Result<ExtremalResult> {
    let cap = if canonical_pruning {
        EX3_N_CAP
    } else {
        EX3_UNPRUNED_N_CAP
    };
    if n > cap {
        return Err(too_large("n for ex_3", n, cap));
    }
    if pattern.is_empty() {
        return Err(Error::BadParameter("pattern has no triples".into()));
    }
    let start = Instant::now();
    let (value, witness, nodes) = exhaustive_max(n, 3, canonical_pruning, |slots, chosen| {
        if chosen.len() < pattern.len() || pattern.n() > n {
            return Ok(true);
        }
        let host = TripleSystem::new(n, chosen.iter().map(|&s| [slots[s][0], slots[s][1], slots[s][2]]))?;
        exhaustive_verdict(triple_embed(pattern, &host, DEFAULT_BUDGET))
    })?;
    Ok(ExtremalResult {
        r: 3,
        n,
        pattern: pattern_id.to_string(),
        value,
        witness,
        canonical_pruning,
        stats: SearchStats {
            nodes,
            elapsed_ms: start.elapsed().as_millis(),
        },
    })
}

pub const GOLDEN_VERSION: u32 = 1;

/// A versioned store of exhaustive values.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct GoldenFile {
    pub version: u32,
    pub entries: BTreeMap<String, GoldenEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenEntry {
    pub value: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GoldenStatus {
    Populated,
    Matched,
}

pub fn golden_key(r: usize, n: usize, pattern: &str) -> String {
    format!("ex{r}/n{n}/{pattern}")
}

impl GoldenFile {
    pub fn load(path: &Path) -> Result<Self> {
        if !path.exists() {
            return Ok(GoldenFile {
                version: GOLDEN_VERSION,
                entries: BTreeMap::new(),
            });
        }
        let text = std::fs::read_to_string(path)?;
        let file: GoldenFile = serde_json::from_str(&text).map_err(|e| Error::Parse {
            line: e.line(),
            msg: e.to_string(),
        })?;
        if file.version != GOLDEN_VERSION {
            return Err(Error::BadParameter(format!(
                "golden file version {} (expected {GOLDEN_VERSION})",
                file.version
            )));
        }
        Ok(file)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("golden file serializes") + "\n"
    }

    /// Records a first value, or compares against the stored one.
    pub fn reconcile(&mut self, result: &ExtremalResult) -> Result<GoldenStatus> {
        let key = golden_key(result.r, result.n, &result.pattern);
        match self.entries.get(&key) {
            Some(e) if e.value == result.value => Ok(GoldenStatus::Matched),
            Some(e) => Err(Error::BadParameter(format!(
                "golden mismatch for {key}: stored {}, computed {}",
                e.value, result.value
            ))),
            None => {
                self.entries.insert(key, GoldenEntry { value: result.value });
                Ok(GoldenStatus::Populated)
            }
        }
    }
}

/// Loads `path`, reconciles `result` and writes the file back when it grew.
pub fn reconcile_golden_file(path: &Path, result: &ExtremalResult) -> Result<GoldenStatus> {
    let mut file = GoldenFile::load(path)?;
    let status = file.reconcile(result)?;
    if status == GoldenStatus::Populated {
        std::fs::write(path, file.to_json())?;
    }
    Ok(status)
}

pub fn result_json(result: &ExtremalResult, golden: Option<GoldenStatus>) -> Value {
    let mut v = json!(result);
    if let Some(g) = golden {
        v["golden"] = json!(match g {
            GoldenStatus::Populated => "populated",
            GoldenStatus::Matched => "matched",
        });
    }
    v
}

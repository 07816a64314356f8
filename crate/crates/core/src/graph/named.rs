use serde::Serialize;
use std::fmt;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

/// The frozen pattern generators.
///
/// Labelling conventions:
/// - `CompleteBipartite(s, t)`: part A is `0..s`, part B is `s..s+t`.
/// - `Cycle(k)`: `0 - 1 - ... - (k-1) - 0`.
/// - `Path(k)`: `k` edges on `0 - 1 - ... - k`.
/// - `Octahedron`: `K_{2,2,2}` with antipodal pairs `{0,1}`, `{2,3}`, `{4,5}`.
/// - `Cube`: vertices are 3-bit words, adjacent when they differ in one bit.
/// - `Wheel(k)`: rim `Cycle(k)` on `0..k`, hub `k`.
/// - `Clique(k)`: `0..k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum NamedGraph {
    CompleteBipartite(usize, usize),
    Cycle(usize),
    Path(usize),
    Octahedron,
    Cube,
    Wheel(usize),
    Clique(usize),
}

impl NamedGraph {
    pub fn build(self) -> Result<Graph> {
        use NamedGraph::*;
        let bad = |msg: String| Err(Error::BadParameter(msg));
        match self {
            CompleteBipartite(s, t) => {
                if s == 0 || t == 0 {
                    return bad(format!("complete_bipartite({s},{t}) needs positive parts"));
                }
                let mut g = Graph::empty(s + t);
                for a in 0..s {
                    for b in s..s + t {
                        g.add_edge(a, b);
                    }
                }
                Ok(g)
            }
            Cycle(k) => {
                if k < 3 {
                    return bad(format!("cycle({k}) needs at least 3 vertices"));
                }
                let mut g = Graph::empty(k);
                for i in 0..k {
                    g.add_edge(i, (i + 1) % k);
                }
                Ok(g)
            }
            Path(k) => {
                if k == 0 {
                    return bad("path needs at least one edge".into());
                }
                let mut g = Graph::empty(k + 1);
                for i in 0..k {
                    g.add_edge(i, i + 1);
                }
                Ok(g)
            }
            Octahedron => {
                let mut g = Graph::empty(6);
                for u in 0..6 {
                    for v in u + 1..6 {
                        if u / 2 != v / 2 {
                            g.add_edge(u, v);
                        }
                    }
                }
                Ok(g)
            }
            Cube => {
                let mut g = Graph::empty(8);
                for u in 0..8usize {
                    for bit in 0..3 {
                        let v = u ^ (1 << bit);
                        if u < v {
                            g.add_edge(u, v);
                        }
                    }
                }
                Ok(g)
            }
            Wheel(k) => {
                let mut g = Cycle(k).build()?;
                let mut w = Graph::empty(k + 1);
                for (u, v) in g.edges() {
                    w.add_edge(u, v);
                }
                for i in 0..k {
                    w.add_edge(i, k);
                }
                g = w;
                Ok(g)
            }
            Clique(k) => {
                if k == 0 {
                    return bad("clique needs at least one vertex".into());
                }
                let mut g = Graph::empty(k);
                for u in 0..k {
                    for v in u + 1..k {
                        g.add_edge(u, v);
                    }
                }
                Ok(g)
            }
        }
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use NamedGraph::*;
        match self {
            CompleteBipartite(s, t) => write!(f, "complete_bipartite({s},{t})"),
            Cycle(k) => write!(f, "cycle({k})"),
            Path(k) => write!(f, "path({k})"),
            Octahedron => write!(f, "octahedron"),
            Cube => write!(f, "cube"),
            Wheel(k) => write!(f, "wheel({k})"),
            Clique(k) => write!(f, "clique({k})"),
        }
    }
}

impl FromStr for NamedGraph {
    type Err = Error;

    /// Accepts the long form (`cycle(5)`, `complete_bipartite(3,3)`) and the
    /// short names `K4`, `K33`, `K3,4`, `C5`, `P3`, `W4`/`wheel4`,
    /// `octahedron`, `cube`.
    fn from_str(s: &str) -> Result<Self> {
        use NamedGraph::*;
        let unknown = || Error::UnknownName(s.to_string());
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| unknown());
        let lower = s.trim().to_ascii_lowercase();
        match lower.as_str() {
            "octahedron" => return Ok(Octahedron),
            "cube" => return Ok(Cube),
            _ => {}
        }
        if let Some((name, rest)) = lower.split_once('(') {
            let args: Vec<&str> = rest.strip_suffix(')').ok_or_else(unknown)?.split(',').collect();
            return match (name, args.as_slice()) {
                ("complete_bipartite", [a, b]) => Ok(CompleteBipartite(num(a)?, num(b)?)),
                ("cycle", [k]) => Ok(Cycle(num(k)?)),
                ("path", [k]) => Ok(Path(num(k)?)),
                ("wheel", [k]) => Ok(Wheel(num(k)?)),
                ("clique", [k]) => Ok(Clique(num(k)?)),
                _ => Err(unknown()),
            };
        }
        let trimmed = s.trim();
        if let Some(rest) = lower.strip_prefix("wheel") {
            return Ok(Wheel(num(rest)?));
        }
        if let Some(rest) = lower.strip_prefix("clique") {
            return Ok(Clique(num(rest)?));
        }
        let (head, rest) = trimmed.split_at(trimmed.chars().next().map_or(0, |c| c.len_utf8()));
        match head {
            "K" => {
                if let Some((a, b)) = rest.split_once(',') {
                    Ok(CompleteBipartite(num(a)?, num(b)?))
                } else if rest.len() == 2 && rest.chars().all(|c| c.is_ascii_digit()) {
                    Ok(CompleteBipartite(num(&rest[..1])?, num(&rest[1..])?))
                } else {
                    Ok(Clique(num(rest)?))
                }
            }
            "C" => Ok(Cycle(num(rest)?)),
            "P" => Ok(Path(num(rest)?)),
            "W" => Ok(Wheel(num(rest)?)),
            _ => Err(unknown()),
        }
    }
}

//! Resolution of pattern names (`K33`, `K3plus`, `Ht2`, `M2`, ...) and
//! pattern files into graphs or triple systems.

use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{Graph, NamedGraph};
use crate::triples::{expand, h_t_pattern, triple_matching, TripleSystem};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Pattern {
    Graph(Graph),
    Triples(TripleSystem),
}

impl Pattern {
    pub fn into_graph(self) -> Result<Graph> {
        match self {
            Pattern::Graph(g) => Ok(g),
            Pattern::Triples(_) => Err(Error::BadParameter("expected a graph, got a triple system".into())),
        }
    }

    pub fn into_triples(self) -> Result<TripleSystem> {
        match self {
            Pattern::Triples(h) => Ok(h),
            Pattern::Graph(_) => Err(Error::BadParameter("expected a triple system, got a graph".into())),
        }
    }

    /// Parses either text format, dispatching on the header.
    pub fn from_text(text: &str) -> Result<Self> {
        match text.split_whitespace().next() {
            Some("g") => Graph::from_text(text).map(Pattern::Graph),
            Some("h3") => TripleSystem::from_text(text).map(Pattern::Triples),
            _ => Err(Error::Parse {
                line: 1,
                msg: "expected a `g` or `h3` header".into(),
            }),
        }
    }
}

/// Resolves a built-in name:
/// - graph names accepted by [`NamedGraph`];
/// - `<graph>plus` or `<graph>+` for the expansion of a named graph;
/// - `Ht<t>` / `H<t>` for `H_t`;
/// - `M<k>` for `k` disjoint triples.
pub fn named_pattern(name: &str) -> Result<Pattern> {
    let s = name.trim();
    let base = s.strip_suffix("plus").or_else(|| s.strip_suffix('+'));
    if let Some(base) = base {
        let g: NamedGraph = base.parse().map_err(|_| Error::UnknownName(name.to_string()))?;
        return Ok(Pattern::Triples(expand(&g.build()?)));
    }
    let digits = |rest: &str| -> Option<usize> {
        (!rest.is_empty() && rest.chars().all(|c| c.is_ascii_digit()))
            .then(|| rest.parse().ok())
            .flatten()
    };
    if let Some(t) = s
        .strip_prefix("Ht")
        .and_then(digits)
        .or_else(|| s.strip_prefix('H').and_then(digits))
    {
        return Ok(Pattern::Triples(h_t_pattern(t)?));
    }
    if let Some(k) = s.strip_prefix('M').and_then(digits) {
        if k == 0 {
            return Err(Error::BadParameter("M0 has no triples".into()));
        }
        return Ok(Pattern::Triples(triple_matching(k)));
    }
    let g: NamedGraph = s.parse()?;
    Ok(Pattern::Graph(g.build()?))
}

/// A built-in name, or else a path to a `g`/`h3` file.
pub fn resolve_pattern(spec: &str) -> Result<Pattern> {
    match named_pattern(spec) {
        Ok(p) => Ok(p),
        Err(Error::UnknownName(_)) if Path::new(spec).is_file() => {
            let text = std::fs::read_to_string(spec)?;
            Pattern::from_text(&text)
        }
        Err(Error::UnknownName(_)) => Err(Error::UnknownName(format!(
            "{spec} (not a built-in pattern or a readable file)"
        ))),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names() {
        let k3p = named_pattern("K3plus").unwrap().into_triples().unwrap();
        assert_eq!((k3p.n(), k3p.len()), (6, 3));
        let k33p = named_pattern("K33+").unwrap().into_triples().unwrap();
        assert_eq!((k33p.n(), k33p.len()), (15, 9));
        let h2 = named_pattern("Ht2").unwrap().into_triples().unwrap();
        assert_eq!(h2, h_t_pattern(2).unwrap());
        assert_eq!(named_pattern("H3").unwrap().into_triples().unwrap().len(), 6);
        assert_eq!(named_pattern("M2").unwrap().into_triples().unwrap().len(), 2);
        assert_eq!(named_pattern("K33").unwrap().into_graph().unwrap().edge_count(), 9);
        assert!(matches!(named_pattern("octahedron"), Ok(Pattern::Graph(_))));
        assert!(matches!(named_pattern("wheel4"), Ok(Pattern::Graph(_))));
        assert!(matches!(named_pattern("bogus"), Err(Error::UnknownName(_))));
        assert!(matches!(resolve_pattern("/no/such/file"), Err(Error::UnknownName(_))));
    }

    #[test]
    fn text_dispatch() {
        assert!(matches!(Pattern::from_text("g 2 1\n0 1\n"), Ok(Pattern::Graph(_))));
        assert!(matches!(Pattern::from_text("h3 3 1\n0 1 2\n"), Ok(Pattern::Triples(_))));
        assert!(Pattern::from_text("x 1 1\n").is_err());
    }
}

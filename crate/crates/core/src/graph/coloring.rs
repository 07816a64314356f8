use fixedbitset::FixedBitSet;
use serde::Serialize;

use super::{girth, Girth, Graph};
use crate::error::{Error, Result};

/// Largest vertex count accepted by the exhaustive coloring routines.
pub const COLORING_VERTEX_CAP: usize = 24;

/// Colour pairs in the order reported by [`bichromatic_cycle_profile`].
pub const CLASS_PAIRS: [(u8, u8); 3] = [(0, 1), (0, 2), (1, 2)];

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Coloring {
    colors: Vec<u8>,
}

impl Coloring {
    pub fn new(colors: Vec<u8>) -> Result<Self> {
        if let Some(c) = colors.iter().find(|&&c| c > 2) {
            return Err(Error::BadParameter(format!("colour {c} outside 0..3")));
        }
        Ok(Coloring { colors })
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> u8 {
        self.colors[v]
    }

    /// First monochromatic edge, if any.
    pub fn conflict(&self, g: &Graph) -> Option<(usize, usize)> {
        g.edges().into_iter().find(|&(u, v)| self.colors[u] == self.colors[v])
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.n() && self.conflict(g).is_none()
    }

    fn class_union(&self, a: u8, b: u8) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.colors.len());
        for (v, &c) in self.colors.iter().enumerate() {
            if c == a || c == b {
                s.insert(v);
            }
        }
        s
    }
}

/// Iterator over every proper 3-colouring in lexicographic order of the
/// colour array.
pub struct ProperColorings<'a> {
    g: &'a Graph,
    colors: Vec<i8>,
    fix_first: bool,
    started: bool,
    done: bool,
}

impl<'a> ProperColorings<'a> {
    fn consistent(&self, v: usize) -> bool {
        let c = self.colors[v];
        self.g
            .neighbors(v)
            .ones()
            .take_while(|&u| u < v)
            .all(|u| self.colors[u] != c)
    }
}

impl Iterator for ProperColorings<'_> {
    type Item = Coloring;

    fn next(&mut self) -> Option<Coloring> {
        if self.done {
            return None;
        }
        let n = self.g.n();
        if n == 0 {
            self.done = true;
            return Some(Coloring { colors: Vec::new() });
        }
        let mut v = if self.started { n - 1 } else { 0 };
        self.started = true;
        loop {
            self.colors[v] += 1;
            let max = if self.fix_first && v == 0 { 0 } else { 2 };
            if self.colors[v] > max {
                self.colors[v] = -1;
                if v == 0 {
                    self.done = true;
                    return None;
                }
                v -= 1;
                continue;
            }
            if self.consistent(v) {
                if v == n - 1 {
                    return Some(Coloring {
                        colors: self.colors.iter().map(|&c| c as u8).collect(),
                    });
                }
                v += 1;
            }
        }
    }
}

/// All proper 3-colourings; with `up_to_symmetry` vertex 0 is pinned to colour 0.
pub fn proper_3_colorings(g: &Graph, up_to_symmetry: bool) -> Result<ProperColorings<'_>> {
    if g.n() > COLORING_VERTEX_CAP {
        return Err(Error::TooLarge {
            what: "vertex count for colouring enumeration",
            value: g.n() as u64,
            limit: COLORING_VERTEX_CAP as u64,
        });
    }
    Ok(ProperColorings {
        g,
        colors: vec![-1; g.n()],
        fix_first: up_to_symmetry,
        started: false,
        done: false,
    })
}

/// Girth of the subgraph induced by each pair of colour classes, in
/// [`CLASS_PAIRS`] order.
pub fn bichromatic_cycle_profile(g: &Graph, c: &Coloring) -> Result<[Girth; 3]> {
    if c.colors.len() != g.n() {
        return Err(Error::BadParameter(format!(
            "colouring has {} entries for {} vertices",
            c.colors.len(),
            g.n()
        )));
    }
    if let Some((u, v)) = c.conflict(g) {
        return Err(Error::ImproperColoring(u, v));
    }
    Ok(CLASS_PAIRS.map(|(a, b)| girth(&g.restrict_to(&c.class_union(a, b)))))
}

/// A proper 3-colouring in which every two classes induce a forest, if one exists.
pub fn has_acyclic_3_coloring(g: &Graph) -> Result<Option<Coloring>> {
    for c in proper_3_colorings(g, false)? {
        let profile = bichromatic_cycle_profile(g, &c)?;
        if profile.iter().all(|&p| p == Girth::Infinite) {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::NamedGraph;

    fn named(n: NamedGraph) -> Graph {
        n.build().unwrap()
    }

    #[test]
    fn coloring_counts() {
        assert_eq!(
            proper_3_colorings(&named(NamedGraph::Clique(3)), false)
                .unwrap()
                .count(),
            6
        );
        assert_eq!(
            proper_3_colorings(&named(NamedGraph::Wheel(5)), false).unwrap().count(),
            0
        );
        let octa: Vec<_> = proper_3_colorings(&named(NamedGraph::Octahedron), false)
            .unwrap()
            .collect();
        assert_eq!(octa.len(), 6);
        for c in &octa {
            for pair in 0..3 {
                assert_eq!(c.color(2 * pair), c.color(2 * pair + 1));
            }
        }
        assert_eq!(
            proper_3_colorings(&named(NamedGraph::Clique(3)), true).unwrap().count(),
            2
        );
    }

    #[test]
    fn lexicographic_order() {
        let g = named(NamedGraph::Path(2));
        let all: Vec<Vec<u8>> = proper_3_colorings(&g, false).unwrap().map(|c| c.colors).collect();
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
        assert_eq!(all.len(), 12);
        assert_eq!(all[0], vec![0, 1, 0]);
    }

    #[test]
    fn too_large() {
        let g = Graph::empty(25);
        assert!(matches!(proper_3_colorings(&g, false), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn profiles() {
        let w = named(NamedGraph::Wheel(4));
        let c = Coloring::new(vec![1, 2, 1, 2, 0]).unwrap();
        let p = bichromatic_cycle_profile(&w, &c).unwrap();
        assert_eq!(p, [Girth::Infinite, Girth::Infinite, Girth::Finite(4)]);
        let bad = Coloring::new(vec![1, 1, 1, 2, 0]).unwrap();
        assert_eq!(bichromatic_cycle_profile(&w, &bad), Err(Error::ImproperColoring(0, 1)));
        let path = named(NamedGraph::Path(3));
        for c in proper_3_colorings(&path, false).unwrap() {
            assert_eq!(bichromatic_cycle_profile(&path, &c).unwrap(), [Girth::Infinite; 3]);
        }
    }

    #[test]
    fn acyclic_colorings() {
        assert!(has_acyclic_3_coloring(&named(NamedGraph::Path(3))).unwrap().is_some());
        assert!(has_acyclic_3_coloring(&named(NamedGraph::Wheel(4))).unwrap().is_none());
        assert!(has_acyclic_3_coloring(&named(NamedGraph::Octahedron))
            .unwrap()
            .is_none());
        let c5 = named(NamedGraph::Cycle(5));
        let w = has_acyclic_3_coloring(&c5).unwrap().unwrap();
        assert!(w.is_proper(&c5));
    }
}

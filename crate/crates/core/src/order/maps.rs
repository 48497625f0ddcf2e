use serde::Serialize;

use super::FinitePoset;
use crate::error::{Error, Result};
use crate::subset::Subset;

/// An order-preserving map between finite posets, given by its graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonotoneMap {
    source: FinitePoset,
    target: FinitePoset,
    graph: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScottVerdict {
    pub continuous: bool,
    /// A directed set whose sup is not preserved.
    pub witness: Option<Vec<String>>,
    pub directed_sets_checked: usize,
}

impl MonotoneMap {
    pub fn new(source: FinitePoset, target: FinitePoset, graph: Vec<usize>) -> Result<Self> {
        assert_eq!(graph.len(), source.len(), "graph must cover the source");
        for (x, y) in source.pairs() {
            if !target.leq(graph[x], graph[y]) {
                return Err(Error::NotMonotone {
                    x: source.label(x).to_string(),
                    y: source.label(y).to_string(),
                });
            }
        }
        Ok(MonotoneMap { source, target, graph })
    }

    /// Graph given as `(source label, target label)` pairs.
    pub fn from_labels(source: FinitePoset, target: FinitePoset, graph: &[(&str, &str)]) -> Result<Self> {
        let mut g = vec![usize::MAX; source.len()];
        for (a, b) in graph {
            g[source.index_of(a)?] = target.index_of(b)?;
        }
        if let Some(x) = g.iter().position(|&v| v == usize::MAX) {
            return Err(Error::UnknownLabel(format!("no image for {}", source.label(x))));
        }
        Self::new(source, target, g)
    }

    pub fn identity(p: &FinitePoset) -> Self {
        MonotoneMap { source: p.clone(), target: p.clone(), graph: (0..p.len()).collect() }
    }

    pub fn source(&self) -> &FinitePoset {
        &self.source
    }

    pub fn target(&self) -> &FinitePoset {
        &self.target
    }

    pub fn graph(&self) -> &[usize] {
        &self.graph
    }

    pub fn apply(&self, x: usize) -> usize {
        self.graph[x]
    }

    pub fn image(&self, a: Subset) -> Subset {
        Subset::from_indices(a.iter().map(|x| self.graph[x]))
    }

    /// Checks `f(⋁D) = ⋁f(D)` for every directed `D` whose sup exists.
    pub fn scott_continuity_check(&self) -> Result<ScottVerdict> {
        let dsets = self.source.directed_with_sup()?;
        for (k, &(d, s)) in dsets.iter().enumerate() {
            if self.target.sup(self.image(d)) != Some(self.graph[s]) {
                return Ok(ScottVerdict {
                    continuous: false,
                    witness: Some(self.source.labels_of(d)),
                    directed_sets_checked: k + 1,
                });
            }
        }
        Ok(ScottVerdict { continuous: true, witness: None, directed_sets_checked: dsets.len() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn non_monotone_graph_is_rejected() {
        let c = FinitePoset::chain(2);
        let err = MonotoneMap::new(c.clone(), c, vec![1, 0]).unwrap_err();
        assert!(matches!(err, Error::NotMonotone { .. }));
    }

    #[test]
    fn finite_monotone_maps_are_scott_continuous() {
        let c = FinitePoset::chain(3);
        let f = MonotoneMap::new(c.clone(), FinitePoset::chain(2), vec![0, 0, 1]).unwrap();
        assert!(f.scott_continuity_check().unwrap().continuous);
        assert!(MonotoneMap::identity(&c).scott_continuity_check().unwrap().continuous);
    }

    #[test]
    fn labels_drive_the_graph() {
        let c = FinitePoset::chain(2);
        let f = MonotoneMap::from_labels(c.clone(), c.clone(), &[("0", "1"), ("1", "1")]).unwrap();
        assert_eq!(f.graph(), &[1, 1]);
        assert!(MonotoneMap::from_labels(c.clone(), c, &[("0", "1")]).is_err());
    }
}

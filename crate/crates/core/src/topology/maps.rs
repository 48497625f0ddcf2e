use super::FiniteSpace;
use crate::error::{Error, Result};
use crate::limits;
use crate::order::find_isomorphism;
use crate::subset::Subset;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContinuousMap {
    source: FiniteSpace,
    target: FiniteSpace,
    graph: Vec<usize>,
}

fn preimage(graph: &[usize], c: Subset) -> Subset {
    Subset::from_indices(graph.iter().enumerate().filter(|(_, &y)| c.contains(y)).map(|(x, _)| x))
}

/// Preimage of every closed set is closed.
pub fn is_continuous(source: &FiniteSpace, target: &FiniteSpace, graph: &[usize]) -> bool {
    target.closed_sets().iter().all(|&c| source.is_closed(preimage(graph, c)))
}

impl ContinuousMap {
    pub fn new(source: FiniteSpace, target: FiniteSpace, graph: Vec<usize>) -> Result<Self> {
        assert_eq!(graph.len(), source.len(), "graph must cover the source");
        assert!(graph.iter().all(|&y| y < target.len()), "graph must land in the target");
        if let Some(&c) = target.closed_sets().iter().find(|&&c| !source.is_closed(preimage(&graph, c))) {
            return Err(Error::NotContinuous(target.show(c)));
        }
        Ok(ContinuousMap { source, target, graph })
    }

    pub fn identity(x: &FiniteSpace) -> Self {
        ContinuousMap { source: x.clone(), target: x.clone(), graph: (0..x.len()).collect() }
    }

    pub fn source(&self) -> &FiniteSpace {
        &self.source
    }

    pub fn target(&self) -> &FiniteSpace {
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

    pub fn preimage(&self, c: Subset) -> Subset {
        preimage(&self.graph, c)
    }

    /// Injective and every open of the source is the preimage of an open of the target.
    pub fn is_embedding(&self) -> bool {
        let injective = self.image(self.source.all()).len() == self.source.len();
        let induced: std::collections::BTreeSet<Subset> =
            self.target.open_sets().into_iter().map(|v| self.preimage(v)).collect();
        injective && self.source.open_sets().iter().all(|u| induced.contains(u))
    }

    pub fn is_homeomorphism(&self) -> bool {
        self.source.len() == self.target.len() && self.is_embedding()
    }
}

/// Every continuous map between two finite spaces, by testing all graphs.
pub fn continuous_maps(source: &FiniteSpace, target: &FiniteSpace) -> Result<Vec<Vec<usize>>> {
    let total = (target.len() as f64).powi(source.len() as i32);
    limits::ensure("map enumeration", total as usize, 1 << 20)?;
    let mut out = Vec::new();
    if target.is_empty() && !source.is_empty() {
        return Ok(out);
    }
    let mut g = vec![0; source.len()];
    loop {
        if is_continuous(source, target, &g) {
            out.push(g.clone());
        }
        let mut k = 0;
        loop {
            if k == g.len() {
                return Ok(out);
            }
            g[k] += 1;
            if g[k] < target.len() {
                break;
            }
            g[k] = 0;
            k += 1;
        }
    }
}

/// A homeomorphism `x → y`, searched among order isomorphisms of the specializations.
pub fn find_homeomorphism(x: &FiniteSpace, y: &FiniteSpace) -> Result<Option<Vec<usize>>> {
    let Some(iso) = find_isomorphism(&x.specialization(), &y.specialization())? else {
        return Ok(None);
    };
    let maps_closed = x.closed_sets().iter().all(|&c| y.is_closed(Subset::from_indices(c.iter().map(|i| iso[i]))));
    let same_count = x.closed_sets().len() == y.closed_sets().len();
    Ok((maps_closed && same_count).then_some(iso))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sierpinski_self_maps() {
        let s = FiniteSpace::sierpinski();
        let maps = continuous_maps(&s, &s).unwrap();
        assert_eq!(maps, vec![vec![0, 0], vec![0, 1], vec![1, 1]]);
        assert!(ContinuousMap::new(s.clone(), s.clone(), vec![1, 0]).is_err());
    }

    #[test]
    fn embeddings() {
        let s = FiniteSpace::sierpinski();
        assert!(ContinuousMap::identity(&s).is_homeomorphism());
        let d = FiniteSpace::discrete(2);
        let into = ContinuousMap::new(d.clone(), s.clone(), vec![0, 1]).unwrap();
        assert!(!into.is_embedding());
        let out = ContinuousMap::new(s.clone(), d, vec![0, 1]);
        assert!(out.is_err());
        let from_s = ContinuousMap::new(s.clone(), FiniteSpace::discrete(1), vec![0, 0]).unwrap();
        assert!(!from_s.is_embedding());
    }

    #[test]
    fn homeomorphism_search() {
        let s = FiniteSpace::sierpinski();
        let t = FiniteSpace::from_labels(&["p", "q"], &[&[], &["q"], &["p", "q"]]).unwrap();
        assert_eq!(find_homeomorphism(&s, &t).unwrap(), Some(vec![1, 0]));
        assert_eq!(find_homeomorphism(&s, &FiniteSpace::discrete(2)).unwrap(), None);
    }
}

//! Finite T0 spaces stored as their families of closed sets.

mod constructions;
mod hoare;
mod json;
mod maps;
mod props;

pub use constructions::{alexandroff, equalizer, scott_space, subspace, upper_space, x_top, SubspaceKind};
pub use hoare::{hoare_space, HoareSpace};
pub use json::SpaceJson;
pub use maps::{continuous_maps, find_homeomorphism, is_continuous, ContinuousMap};
pub use props::{check, CompactSatFamily, Property, PropertyCheck, WF_CAP};

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::order::FinitePoset;
use crate::subset::{set_label, Subset, MAX_CARRIER};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteSpace {
    carrier: Vec<String>,
    closed: Vec<Subset>,
    point_closure: Vec<Subset>,
}

impl FiniteSpace {
    /// Validates the closed-set family: `∅` and the carrier present, closed
    /// under pairwise union and intersection, and T0.
    pub fn new(carrier: Vec<String>, closed: Vec<Subset>) -> Result<Self> {
        let n = carrier.len();
        crate::limits::ensure("space carrier", n, MAX_CARRIER - 1)?;
        let mut seen = HashMap::new();
        for l in &carrier {
            if seen.insert(l.as_str(), ()).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let full = Subset::full(n);
        let family: BTreeSet<Subset> = closed.into_iter().collect();
        if let Some(bad) = family.iter().find(|c| !c.is_subset(full)) {
            return Err(Error::InvalidTopology(format!("{bad:?} is not a subset of the carrier")));
        }
        if !family.contains(&Subset::EMPTY) || !family.contains(&full) {
            return Err(Error::InvalidTopology("the empty set and the carrier must be closed".into()));
        }
        for &a in &family {
            for &b in &family {
                if !family.contains(&(a | b)) || !family.contains(&(a & b)) {
                    return Err(Error::InvalidTopology(format!(
                        "{} and {} are not closed under union and intersection",
                        set_label(&carrier, a),
                        set_label(&carrier, b)
                    )));
                }
            }
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| carrier[a].cmp(&carrier[b]));
        let mut pos = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            pos[old] = new;
        }
        let carrier: Vec<String> = order.iter().map(|&o| carrier[o].clone()).collect();
        let closed: Vec<Subset> = family.into_iter().map(|c| c.permute(&pos)).collect();
        let space = Self::from_canonical(carrier, closed);
        for i in 0..n {
            for j in i + 1..n {
                if space.point_closure[i] == space.point_closure[j] {
                    return Err(Error::NotT0(space.carrier[i].clone(), space.carrier[j].clone()));
                }
            }
        }
        Ok(space)
    }

    /// Closed sets given by member labels.
    pub fn from_labels(carrier: &[&str], closed: &[&[&str]]) -> Result<Self> {
        let carrier: Vec<String> = carrier.iter().map(|s| s.to_string()).collect();
        let index: HashMap<&str, usize> = carrier.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        let mut family = Vec::new();
        for c in closed {
            let mut s = Subset::EMPTY;
            for l in c.iter() {
                s.insert(*index.get(l).ok_or_else(|| Error::UnknownLabel(l.to_string()))?);
            }
            family.push(s);
        }
        Self::new(carrier, family)
    }

    /// Caller guarantees a sorted carrier and a valid topology family.
    pub(crate) fn from_canonical(carrier: Vec<String>, mut closed: Vec<Subset>) -> Self {
        closed.sort();
        closed.dedup();
        let point_closure = (0..carrier.len())
            .map(|x| {
                closed
                    .iter()
                    .filter(|c| c.contains(x))
                    .fold(Subset::full(carrier.len()), |acc, &c| acc & c)
            })
            .collect();
        FiniteSpace { carrier, closed, point_closure }
    }

    /// Sorts an arbitrary carrier and remaps the family, without validation.
    pub(crate) fn from_unsorted(carrier: Vec<String>, closed: Vec<Subset>) -> Self {
        let n = carrier.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| carrier[a].cmp(&carrier[b]));
        let mut pos = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            pos[old] = new;
        }
        let sorted = order.iter().map(|&o| carrier[o].clone()).collect();
        Self::from_canonical(sorted, closed.into_iter().map(|c| c.permute(&pos)).collect())
    }

    pub fn empty() -> Self {
        Self::from_canonical(Vec::new(), vec![Subset::EMPTY])
    }

    /// The Sierpinski space on `{0, 1}` with `{1}` open.
    pub fn sierpinski() -> Self {
        Self::from_labels(&["0", "1"], &[&[], &["0"], &["0", "1"]]).expect("Sierpinski space")
    }

    pub fn discrete(n: usize) -> Self {
        let carrier = crate::order::numeric_labels(n);
        Self::from_canonical(carrier, Subset::all(n).collect())
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn carrier(&self) -> &[String] {
        &self.carrier
    }

    pub fn label(&self, i: usize) -> &str {
        &self.carrier[i]
    }

    pub fn index(&self, label: &str) -> Option<usize> {
        self.carrier.binary_search_by(|l| l.as_str().cmp(label)).ok()
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index(label).ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn subset_of(&self, labels: &[&str]) -> Result<Subset> {
        labels.iter().map(|l| self.index_of(l)).collect::<Result<Vec<_>>>().map(Subset::from_indices)
    }

    pub fn show(&self, s: Subset) -> String {
        set_label(&self.carrier, s)
    }

    pub fn labels_of(&self, s: Subset) -> Vec<String> {
        s.iter().map(|i| self.carrier[i].clone()).collect()
    }

    pub fn all(&self) -> Subset {
        Subset::full(self.len())
    }

    /// Closed sets in canonical (lexicographic bit-vector) order.
    pub fn closed_sets(&self) -> &[Subset] {
        &self.closed
    }

    pub fn open_sets(&self) -> Vec<Subset> {
        let mut opens: Vec<Subset> = self.closed.iter().map(|c| c.complement(self.len())).collect();
        opens.sort();
        opens
    }

    pub fn is_closed(&self, a: Subset) -> bool {
        self.closed.binary_search(&a).is_ok()
    }

    pub fn is_open(&self, a: Subset) -> bool {
        a.is_subset(self.all()) && self.is_closed(a.complement(self.len()))
    }

    /// `cl{x}`
    pub fn point_closure(&self, x: usize) -> Subset {
        self.point_closure[x]
    }

    /// Smallest closed superset; the union of the point closures.
    pub fn closure(&self, a: Subset) -> Subset {
        a.iter().fold(Subset::EMPTY, |acc, x| acc | self.point_closure[x])
    }

    /// Intersection of all open supersets.
    pub fn saturation(&self, a: Subset) -> Subset {
        let n = self.len();
        self.closed
            .iter()
            .map(|c| c.complement(n))
            .filter(|u| a.is_subset(*u))
            .fold(self.all(), |acc, u| acc & u)
    }

    pub fn is_saturated(&self, a: Subset) -> bool {
        self.saturation(a) == a
    }

    /// `x ≤ y` iff `x ∈ cl{y}`.
    pub fn specialization(&self) -> FinitePoset {
        let n = self.len();
        let up = (0..n).map(|x| Subset::from_indices((0..n).filter(|&y| self.point_closure[y].contains(x)))).collect();
        FinitePoset::from_closed_parts(self.carrier.clone(), up)
    }

    /// `𝒮_c(X)`: the point closures, sorted.
    pub fn point_closures(&self) -> Vec<Subset> {
        let mut v = self.point_closure.clone();
        v.sort();
        v
    }

    /// Every nonempty closed set that no pair of closed sets splits.
    pub fn irreducibles(&self) -> Vec<Subset> {
        self.closed
            .iter()
            .copied()
            .filter(|&a| !a.is_empty() && self.split(a).is_none())
            .collect()
    }

    /// Closed `F₁, F₂` with `A ⊆ F₁ ∪ F₂` but `A` inside neither.
    pub fn split(&self, a: Subset) -> Option<(Subset, Subset)> {
        for &f1 in &self.closed {
            if a.is_subset(f1) {
                continue;
            }
            for &f2 in &self.closed {
                if !a.is_subset(f2) && a.is_subset(f1 | f2) {
                    return Some((f1, f2));
                }
            }
        }
        None
    }

    /// `𝒟_c(X)`: closures of the directed subsets of the specialization order.
    pub fn directed_closures(&self) -> Result<Vec<Subset>> {
        let spec = self.specialization();
        let set: BTreeSet<Subset> = spec.directed_subsets()?.into_iter().map(|d| self.closure(d)).collect();
        Ok(set.into_iter().collect())
    }

    /// Open sets are exactly the up-sets of the specialization order.
    pub fn is_alexandroff_of_specialization(&self) -> bool {
        let spec = self.specialization();
        let n = self.len();
        let ups: BTreeSet<Subset> = Subset::all(n).filter(|&u| spec.is_up_set(u)).collect();
        let opens: BTreeSet<Subset> = self.open_sets().into_iter().collect();
        ups == opens
    }

    /// Relative topology on `a`.
    pub fn induced(&self, a: Subset) -> FiniteSpace {
        let keep: Vec<usize> = a.iter().collect();
        let carrier: Vec<String> = keep.iter().map(|&i| self.carrier[i].clone()).collect();
        let family: BTreeSet<Subset> = self
            .closed
            .iter()
            .map(|&c| Subset::from_indices(keep.iter().enumerate().filter(|(_, &i)| c.contains(i)).map(|(k, _)| k)))
            .collect();
        FiniteSpace::from_canonical(carrier, family.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sierpinski_basics() {
        let s = FiniteSpace::sierpinski();
        assert_eq!(s.open_sets(), vec![Subset::EMPTY, Subset::singleton(1), Subset::full(2)]);
        let spec = s.specialization();
        assert!(spec.lt(0, 1));
        assert_eq!(s.irreducibles(), vec![Subset::singleton(0), Subset::full(2)]);
        assert_eq!(s.saturation(Subset::singleton(0)), Subset::full(2));
        assert!(s.is_alexandroff_of_specialization());
    }

    #[test]
    fn validation_errors() {
        let e = FiniteSpace::from_labels(&["a", "b"], &[&[], &["a"]]).unwrap_err();
        assert!(matches!(e, Error::InvalidTopology(_)));
        let e = FiniteSpace::from_labels(&["a", "b"], &[&[], &["a", "b"]]).unwrap_err();
        assert!(matches!(e, Error::NotT0(..)));
        let e = FiniteSpace::from_labels(&["a", "b", "c"], &[&[], &["a"], &["b"], &["a", "b", "c"]]).unwrap_err();
        assert!(matches!(e, Error::InvalidTopology(_)));
    }

    #[test]
    fn carrier_is_sorted_and_family_remapped() {
        let s = FiniteSpace::from_labels(&["z", "a"], &[&[], &["z"], &["a", "z"]]).unwrap();
        assert_eq!(s.carrier(), &["a".to_string(), "z".to_string()]);
        assert!(s.is_closed(Subset::singleton(1)));
        assert_eq!(s, FiniteSpace::from_labels(&["a", "z"], &[&[], &["z"], &["a", "z"]]).unwrap());
    }

    #[test]
    fn discrete_irreducibles_are_points() {
        let d = FiniteSpace::discrete(2);
        assert_eq!(d.irreducibles(), vec![Subset::singleton(1), Subset::singleton(0)]);
        assert_eq!(d.split(Subset::full(2)).is_some(), true);
    }

    #[test]
    fn empty_space() {
        let e = FiniteSpace::empty();
        assert!(e.irreducibles().is_empty());
        assert_eq!(e.closed_sets(), &[Subset::EMPTY]);
    }
}

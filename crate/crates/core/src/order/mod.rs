//! Finite posets and their combinatorics.
//!
//! The order is stored fully closed as one up-set and one down-set mask per
//! element, so every comparison is a bit test. Labels are kept in lexical order.

mod enumerate;
mod json;
mod maps;

pub use enumerate::{
    canonical_code, count_labeled_relations, find_isomorphism, labeled_posets, monotone_maps,
    unlabeled_posets,
};
pub use json::PosetJson;
pub use maps::{MonotoneMap, ScottVerdict};

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::limits;
use crate::subset::{set_label, Subset, MAX_CARRIER};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Down,
    Up,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinitePoset {
    labels: Vec<String>,
    up: Vec<Subset>,
    down: Vec<Subset>,
}

impl FinitePoset {
    /// Builds a poset from any generating set of `(below, above)` pairs.
    pub fn new<S: AsRef<str>>(elements: &[S], pairs: &[(S, S)]) -> Result<Self> {
        let labels: Vec<String> = elements.iter().map(|e| e.as_ref().to_string()).collect();
        let index: HashMap<&str, usize> =
            labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        let mut up = vec![Subset::EMPTY; labels.len()];
        for (a, b) in pairs {
            let lookup = |s: &S| {
                index.get(s.as_ref()).copied().ok_or_else(|| Error::UnknownLabel(s.as_ref().to_string()))
            };
            let (i, j) = (lookup(a)?, lookup(b)?);
            up[i].insert(j);
        }
        Self::from_up_sets(labels, up)
    }

    /// Builds a poset from a relation given by a predicate on indices of `labels`.
    pub fn from_relation(labels: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let n = labels.len();
        let up = (0..n).map(|i| Subset::from_indices((0..n).filter(|&j| leq(i, j)))).collect();
        Self::from_up_sets(labels, up)
    }

    /// Closes `up` reflexively and transitively, checks antisymmetry and sorts labels.
    pub fn from_up_sets(labels: Vec<String>, mut up: Vec<Subset>) -> Result<Self> {
        let n = labels.len();
        limits::ensure("poset carrier", n, MAX_CARRIER)?;
        let mut seen = HashMap::new();
        for l in &labels {
            if seen.insert(l.as_str(), ()).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        for (i, u) in up.iter_mut().enumerate() {
            u.insert(i);
        }
        for k in 0..n {
            for i in 0..n {
                if up[i].contains(k) {
                    up[i] = up[i] | up[k];
                }
            }
        }
        for i in 0..n {
            for j in up[i].iter() {
                if j != i && up[j].contains(i) {
                    return Err(Error::CycleDetected(labels[i].clone(), labels[j].clone()));
                }
            }
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| labels[a].cmp(&labels[b]));
        let mut pos = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            pos[old] = new;
        }
        let labels: Vec<String> = order.iter().map(|&o| labels[o].clone()).collect();
        let up: Vec<Subset> = order.iter().map(|&o| up[o].permute(&pos)).collect();
        Ok(Self::from_closed_parts(labels, up))
    }

    /// Caller guarantees sorted unique labels and a closed antisymmetric relation.
    pub(crate) fn from_closed_parts(labels: Vec<String>, up: Vec<Subset>) -> Self {
        let n = labels.len();
        let mut down = vec![Subset::EMPTY; n];
        for (i, u) in up.iter().enumerate() {
            for j in u.iter() {
                down[j].insert(i);
            }
        }
        FinitePoset { labels, up, down }
    }

    /// The chain `0 < 1 < .. < n-1`, labels zero-padded so lexical order is numeric.
    pub fn chain(n: usize) -> Self {
        let labels = numeric_labels(n);
        Self::from_relation(labels, |i, j| i <= j).expect("chain is a poset")
    }

    pub fn antichain(n: usize) -> Self {
        Self::from_relation(numeric_labels(n), |i, j| i == j).expect("antichain is a poset")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index(&self, label: &str) -> Option<usize> {
        self.labels.binary_search_by(|l| l.as_str().cmp(label)).ok()
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index(label).ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn subset_of(&self, labels: &[&str]) -> Result<Subset> {
        labels.iter().map(|l| self.index_of(l)).collect::<Result<Vec<_>>>().map(Subset::from_indices)
    }

    pub fn labels_of(&self, s: Subset) -> Vec<String> {
        s.iter().map(|i| self.labels[i].clone()).collect()
    }

    pub fn show(&self, s: Subset) -> String {
        set_label(&self.labels, s)
    }

    pub fn all(&self) -> Subset {
        Subset::full(self.len())
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    /// `↑i`
    pub fn up(&self, i: usize) -> Subset {
        self.up[i]
    }

    /// `↓i`
    pub fn down(&self, i: usize) -> Subset {
        self.down[i]
    }

    pub fn closure(&self, a: Subset, dir: Direction) -> Subset {
        let rows = match dir {
            Direction::Down => &self.down,
            Direction::Up => &self.up,
        };
        a.iter().fold(Subset::EMPTY, |acc, i| acc | rows[i])
    }

    pub fn is_down_set(&self, a: Subset) -> bool {
        self.closure(a, Direction::Down) == a
    }

    pub fn is_up_set(&self, a: Subset) -> bool {
        self.closure(a, Direction::Up) == a
    }

    /// Nonempty and every pair has an upper bound inside `a`.
    pub fn is_directed(&self, a: Subset) -> bool {
        if a.is_empty() {
            return false;
        }
        a.iter().all(|i| a.iter().all(|j| (self.up[i] & self.up[j]).intersects(a)))
    }

    pub fn upper_bounds(&self, a: Subset) -> Subset {
        a.iter().fold(self.all(), |acc, i| acc & self.up[i])
    }

    pub fn lower_bounds(&self, a: Subset) -> Subset {
        a.iter().fold(self.all(), |acc, i| acc & self.down[i])
    }

    /// Least element of `a`, if any.
    pub fn least(&self, a: Subset) -> Option<usize> {
        a.iter().find(|&i| a.is_subset(self.up[i]))
    }

    pub fn greatest(&self, a: Subset) -> Option<usize> {
        a.iter().find(|&i| a.is_subset(self.down[i]))
    }

    pub fn sup(&self, a: Subset) -> Option<usize> {
        self.least(self.upper_bounds(a))
    }

    pub fn inf(&self, a: Subset) -> Option<usize> {
        self.greatest(self.lower_bounds(a))
    }

    pub fn maximal(&self, a: Subset) -> Subset {
        Subset::from_indices(a.iter().filter(|&i| (self.up[i] & a) == Subset::singleton(i)))
    }

    pub fn minimal(&self, a: Subset) -> Subset {
        Subset::from_indices(a.iter().filter(|&i| (self.down[i] & a) == Subset::singleton(i)))
    }

    pub fn top(&self) -> Option<usize> {
        self.greatest(self.all())
    }

    pub fn bottom(&self) -> Option<usize> {
        self.least(self.all())
    }

    pub fn is_chain(&self, a: Subset) -> bool {
        a.iter().all(|i| a.iter().all(|j| self.leq(i, j) || self.leq(j, i)))
    }

    /// All directed subsets, by literal pairwise check.
    pub fn directed_subsets(&self) -> Result<Vec<Subset>> {
        limits::ensure_carrier("directed-subset enumeration", self.len())?;
        Ok(Subset::all(self.len()).filter(|&d| self.is_directed(d)).collect())
    }

    /// Directed subsets whose supremum exists, paired with it.
    pub fn directed_with_sup(&self) -> Result<Vec<(Subset, usize)>> {
        Ok(self
            .directed_subsets()?
            .into_iter()
            .filter_map(|d| self.sup(d).map(|s| (d, s)))
            .collect())
    }

    pub fn is_dcpo(&self) -> Result<bool> {
        Ok(self.directed_subsets()?.into_iter().all(|d| self.sup(d).is_some()))
    }

    pub fn is_complete_lattice(&self) -> Result<bool> {
        limits::ensure_carrier("subset enumeration", self.len())?;
        Ok(Subset::all(self.len()).all(|a| self.sup(a).is_some()))
    }

    /// Ascending chain condition: every nonempty chain has a greatest member.
    pub fn is_noetherian(&self) -> Result<bool> {
        limits::ensure_carrier("chain enumeration", self.len())?;
        Ok(Subset::all(self.len())
            .filter(|&c| !c.is_empty() && self.is_chain(c))
            .all(|c| self.greatest(c).is_some()))
    }

    /// All directed down-sets.
    pub fn ideals(&self) -> Result<IdealFamily> {
        limits::ensure_carrier("ideal enumeration", self.len())?;
        let mut ideals: Vec<Subset> = Subset::all(self.len())
            .filter(|&a| self.is_down_set(a) && self.is_directed(a))
            .collect();
        // Label order, so that index i of `poset` is `ideals[i]`.
        ideals.sort_by_key(|&i| self.show(i));
        Ok(IdealFamily { ideals })
    }

    /// `rows[x]` is `{y : x ≪ y}`, from the definition over all directed sets with a sup.
    pub fn way_below(&self) -> Result<Vec<Subset>> {
        let dsets = self.directed_with_sup()?;
        let n = self.len();
        Ok((0..n)
            .map(|x| {
                Subset::from_indices((0..n).filter(|&y| {
                    dsets.iter().all(|&(d, s)| !self.leq(y, s) || d.intersects(self.up[x]))
                }))
            })
            .collect())
    }

    pub fn compact_elements(&self) -> Result<Subset> {
        let wb = self.way_below()?;
        Ok(Subset::from_indices((0..self.len()).filter(|&x| wb[x].contains(x))))
    }

    pub fn is_continuous_domain(&self) -> Result<bool> {
        if !self.is_dcpo()? {
            return Ok(false);
        }
        let wb = self.way_below()?;
        Ok((0..self.len()).all(|x| {
            let approx = Subset::from_indices((0..self.len()).filter(|&y| wb[y].contains(x)));
            self.is_directed(approx) && self.sup(approx) == Some(x)
        }))
    }

    pub fn is_algebraic_domain(&self) -> Result<bool> {
        if !self.is_dcpo()? {
            return Ok(false);
        }
        let k = self.compact_elements()?;
        Ok((0..self.len()).all(|x| {
            let approx = k & self.down[x];
            self.is_directed(approx) && self.sup(approx) == Some(x)
        }))
    }

    /// Adjoins a fresh element above everything; returns it with its index.
    pub fn add_top(&self) -> (FinitePoset, usize) {
        let top = fresh_label(&self.labels, "⊤");
        let mut labels = self.labels.clone();
        labels.push(top.clone());
        let n = self.len();
        let p = FinitePoset::from_relation(labels, |i, j| j == n || (i < n && self.leq(i, j)))
            .expect("adjoining a top keeps the order");
        let t = p.index(&top).expect("fresh label present");
        (p, t)
    }

    /// Induced suborder on `a`.
    pub fn restrict(&self, a: Subset) -> FinitePoset {
        let keep: Vec<usize> = a.iter().collect();
        let labels = keep.iter().map(|&i| self.labels[i].clone()).collect();
        FinitePoset::from_relation(labels, |i, j| self.leq(keep[i], keep[j]))
            .expect("suborder of a poset")
    }

    /// Strict pairs of the closed relation.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|i| self.up[i].iter().filter(move |&j| j != i).map(move |j| (i, j)))
            .collect()
    }

    /// Covering pairs (transitive reduction).
    pub fn hasse_pairs(&self) -> Vec<(usize, usize)> {
        self.pairs()
            .into_iter()
            .filter(|&(i, j)| {
                let between = (self.up[i] & self.down[j]).without(i).without(j);
                between.is_empty()
            })
            .collect()
    }

    /// Relabels elements through `f`; fails on collisions.
    pub fn relabel(&self, f: impl Fn(&str) -> String) -> Result<FinitePoset> {
        let labels = self.labels.iter().map(|l| f(l)).collect();
        FinitePoset::from_relation(labels, |i, j| self.leq(i, j))
    }
}

/// Directed down-sets of a finite poset, ordered by inclusion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealFamily {
    pub ideals: Vec<Subset>,
}

impl IdealFamily {
    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    /// The ideals as a poset under inclusion, each labelled by its member set.
    pub fn poset(&self, p: &FinitePoset) -> FinitePoset {
        let labels = self.ideals.iter().map(|&i| p.show(i)).collect();
        FinitePoset::from_relation(labels, |a, b| self.ideals[a].is_subset(self.ideals[b]))
            .expect("inclusion is an order")
    }
}

/// `base`, or `base` with the first numeric suffix not already taken.
pub fn fresh_label(existing: &[String], base: &str) -> String {
    if !existing.iter().any(|l| l == base) {
        return base.to_string();
    }
    (1..)
        .map(|k| format!("{base}{k}"))
        .find(|c| !existing.iter().any(|l| l == c))
        .expect("some suffix is free")
}

pub(crate) fn numeric_labels(n: usize) -> Vec<String> {
    let width = n.saturating_sub(1).to_string().len();
    (0..n).map(|i| format!("{i:0width$}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond() -> FinitePoset {
        FinitePoset::new(&["bot", "a", "b", "top"], &[("bot", "a"), ("bot", "b"), ("a", "top"), ("b", "top")])
            .unwrap()
    }

    #[test]
    fn chain_two_from_single_pair() {
        let p = FinitePoset::new(&["0", "1"], &[("0", "1")]).unwrap();
        assert!(p.lt(0, 1));
        assert!(!p.leq(1, 0));
    }

    #[test]
    fn cycle_and_unknown_labels_are_rejected() {
        let err = FinitePoset::new(&["a", "b"], &[("a", "b"), ("b", "a")]).unwrap_err();
        assert!(matches!(err, Error::CycleDetected(..)));
        let err = FinitePoset::new(&["a"], &[("a", "z")]).unwrap_err();
        assert_eq!(err, Error::UnknownLabel("z".into()));
        let err = FinitePoset::new(&["a", "a"], &[]).unwrap_err();
        assert_eq!(err, Error::DuplicateLabel("a".into()));
    }

    #[test]
    fn transitive_input_is_closed() {
        let p = FinitePoset::new(&["x", "y", "z"], &[("x", "y"), ("y", "z")]).unwrap();
        assert!(p.leq(p.index("x").unwrap(), p.index("z").unwrap()));
        assert_eq!(p.hasse_pairs().len(), 2);
        assert_eq!(p.pairs().len(), 3);
    }

    #[test]
    fn closures() {
        let c = FinitePoset::chain(3);
        assert_eq!(c.closure(Subset::singleton(2), Direction::Down), c.all());
        let a = FinitePoset::antichain(2);
        assert_eq!(a.closure(Subset::singleton(0), Direction::Up), Subset::singleton(0));
        let d = diamond();
        let ab = d.subset_of(&["a", "b"]).unwrap();
        assert_eq!(d.closure(ab, Direction::Down), d.subset_of(&["a", "b", "bot"]).unwrap());
    }

    #[test]
    fn directedness() {
        let d = diamond();
        assert!(!d.is_directed(d.subset_of(&["a", "b"]).unwrap()));
        assert!(d.is_directed(d.subset_of(&["a", "b", "top"]).unwrap()));
        assert!(!d.is_directed(Subset::EMPTY));
    }

    #[test]
    fn ideals_are_principal() {
        let d = diamond();
        let ids = d.ideals().unwrap();
        assert_eq!(ids.len(), 4);
        for &i in &ids.ideals {
            assert!((0..d.len()).any(|x| d.down(x) == i));
        }
        let a = FinitePoset::antichain(2);
        let ids = a.ideals().unwrap();
        assert_eq!(ids.ideals, vec![Subset::singleton(0), Subset::singleton(1)]);
        let c = FinitePoset::chain(3);
        let ids = c.ideals().unwrap();
        let q = ids.poset(&c);
        for (i, &ideal) in ids.ideals.iter().enumerate() {
            assert_eq!(q.label(i), c.show(ideal));
        }
    }

    #[test]
    fn way_below_is_order_on_finite_posets() {
        let d = diamond();
        let wb = d.way_below().unwrap();
        for x in 0..d.len() {
            assert_eq!(wb[x], d.up(x));
        }
        assert_eq!(d.compact_elements().unwrap(), d.all());
        assert!(d.is_algebraic_domain().unwrap());
        assert!(d.is_continuous_domain().unwrap());
    }

    #[test]
    fn add_top_is_always_fresh() {
        let (c3, t) = FinitePoset::chain(2).add_top();
        assert_eq!(c3.len(), 3);
        assert_eq!(c3.top(), Some(t));
        let (one, t) = FinitePoset::antichain(0).add_top();
        assert_eq!(one.labels(), &["⊤".to_string()]);
        assert_eq!(t, 0);
        let d = diamond();
        let (d2, t2) = d.add_top();
        let old_top = d2.index("top").unwrap();
        assert!(d2.lt(old_top, t2));
        let (d3, t3) = d2.add_top();
        assert_eq!(d3.label(t3), "⊤1");
    }

    #[test]
    fn sups_and_bounds() {
        let d = diamond();
        let ab = d.subset_of(&["a", "b"]).unwrap();
        assert_eq!(d.sup(ab), d.index("top"));
        assert_eq!(d.inf(ab), d.index("bot"));
        let a = FinitePoset::antichain(2);
        assert_eq!(a.sup(a.all()), None);
        assert!(d.is_complete_lattice().unwrap());
        assert!(!a.is_complete_lattice().unwrap());
    }

    #[test]
    fn numeric_labels_sort_numerically() {
        let c = FinitePoset::chain(12);
        assert_eq!(c.label(2), "02");
        assert!(c.leq(c.index("02").unwrap(), c.index("11").unwrap()));
    }
}

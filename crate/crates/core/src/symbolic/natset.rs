//! Eventually periodic subsets of ℕ in a unique normal form.

use std::fmt;

use serde::{Deserialize, Serialize};

/// `n ∈ S` iff `head[n]` for `n < head.len()`, else `cycle[(n - head.len()) % cycle.len()]`.
///
/// Both the head and the cycle are as short as possible, which makes the
/// representation unique and derived equality semantic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NatSet {
    head: Vec<bool>,
    cycle: Vec<bool>,
}

#[derive(Serialize, Deserialize)]
struct Wire {
    head_len: usize,
    head: Vec<u64>,
    period: usize,
    residues: Vec<usize>,
}

impl NatSet {
    pub fn empty() -> Self {
        NatSet { head: vec![], cycle: vec![false] }
    }

    pub fn all() -> Self {
        NatSet { head: vec![], cycle: vec![true] }
    }

    pub fn finite<I: IntoIterator<Item = u64>>(elems: I) -> Self {
        let elems: Vec<u64> = elems.into_iter().collect();
        let len = elems.iter().max().map_or(0, |m| m + 1) as usize;
        let mut head = vec![false; len];
        for e in elems {
            head[e as usize] = true;
        }
        Self::from_parts(head, vec![false])
    }

    pub fn cofinite<I: IntoIterator<Item = u64>>(excluded: I) -> Self {
        Self::finite(excluded).complement()
    }

    /// `{0, .., n}`
    pub fn upto(n: u64) -> Self {
        Self::from_parts(vec![true; n as usize + 1], vec![false])
    }

    /// `{n : n ≥ k}`
    pub fn from(k: u64) -> Self {
        Self::from_parts(vec![false; k as usize], vec![true])
    }

    /// `{n : n mod period ∈ residues}`
    pub fn periodic(period: usize, residues: &[usize]) -> Self {
        assert!(period > 0);
        let cycle = (0..period).map(|r| residues.contains(&r)).collect();
        Self::from_parts(vec![], cycle)
    }

    pub fn from_parts(mut head: Vec<bool>, mut cycle: Vec<bool>) -> Self {
        assert!(!cycle.is_empty(), "cycle must be nonempty");
        let p = cycle.len();
        if let Some(d) = (1..=p).find(|&d| p % d == 0 && (0..p).all(|i| cycle[i] == cycle[i % d])) {
            cycle.truncate(d);
        }
        while let Some(&last) = head.last() {
            if last != *cycle.last().unwrap() {
                break;
            }
            head.pop();
            cycle.rotate_right(1);
        }
        NatSet { head, cycle }
    }

    pub fn contains(&self, n: u64) -> bool {
        let h = self.head.len() as u64;
        if n < h {
            self.head[n as usize]
        } else {
            self.cycle[((n - h) % self.cycle.len() as u64) as usize]
        }
    }

    pub fn is_empty(&self) -> bool {
        !self.head.iter().any(|&b| b) && self.is_finite()
    }

    pub fn is_all(&self) -> bool {
        !self.head.iter().any(|&b| !b) && self.is_cofinite()
    }

    pub fn is_finite(&self) -> bool {
        self.cycle.iter().all(|&b| !b)
    }

    pub fn is_cofinite(&self) -> bool {
        self.cycle.iter().all(|&b| b)
    }

    /// Length of the non-periodic prefix.
    pub fn head_len(&self) -> u64 {
        self.head.len() as u64
    }

    pub fn period(&self) -> u64 {
        self.cycle.len() as u64
    }

    /// Members of a finite set.
    pub fn elements(&self) -> Option<Vec<u64>> {
        self.is_finite().then(|| self.below(self.head_len()))
    }

    /// Non-members of a cofinite set.
    pub fn excluded(&self) -> Option<Vec<u64>> {
        self.is_cofinite().then(|| self.complement().below(self.head_len()))
    }

    /// Members below `n`.
    pub fn below(&self, n: u64) -> Vec<u64> {
        (0..n).filter(|&k| self.contains(k)).collect()
    }

    pub fn least(&self) -> Option<u64> {
        (0..self.head_len() + self.period()).find(|&k| self.contains(k))
    }

    /// Largest member of a finite nonempty set.
    pub fn greatest(&self) -> Option<u64> {
        self.elements().and_then(|e| e.last().copied())
    }

    /// Smallest member at or above `n`.
    pub fn next_from(&self, n: u64) -> Option<u64> {
        let start = n.max(self.head_len());
        (n..start).find(|&k| self.contains(k)).or_else(|| (start..start + self.period()).find(|&k| self.contains(k)))
    }

    /// Whether the set is exactly `{0, .., n}` for some `n`, or empty.
    pub fn as_initial_segment(&self) -> Option<Option<u64>> {
        let e = self.elements()?;
        let n = e.len() as u64;
        (e.iter().copied().eq(0..n)).then(|| n.checked_sub(1))
    }

    fn zip(&self, other: &NatSet, op: impl Fn(bool, bool) -> bool) -> NatSet {
        let h = self.head.len().max(other.head.len());
        let p = lcm(self.cycle.len(), other.cycle.len());
        let bit = |n: usize| op(self.contains(n as u64), other.contains(n as u64));
        NatSet::from_parts((0..h).map(bit).collect(), (h..h + p).map(bit).collect())
    }

    pub fn union(&self, other: &NatSet) -> NatSet {
        self.zip(other, |a, b| a || b)
    }

    pub fn intersection(&self, other: &NatSet) -> NatSet {
        self.zip(other, |a, b| a && b)
    }

    pub fn difference(&self, other: &NatSet) -> NatSet {
        self.zip(other, |a, b| a && !b)
    }

    pub fn complement(&self) -> NatSet {
        NatSet {
            head: self.head.iter().map(|b| !b).collect(),
            cycle: self.cycle.iter().map(|b| !b).collect(),
        }
    }

    pub fn is_subset(&self, other: &NatSet) -> bool {
        self.difference(other).is_empty()
    }

    pub fn with(&self, n: u64) -> NatSet {
        self.union(&NatSet::finite([n]))
    }

    pub fn without(&self, n: u64) -> NatSet {
        self.difference(&NatSet::finite([n]))
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

fn list(v: &[u64]) -> String {
    v.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for NatSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(e) = self.elements() {
            return write!(f, "{{{}}}", list(&e));
        }
        if let Some(x) = self.excluded() {
            return if x.is_empty() { f.write_str("ℕ") } else { write!(f, "ℕ∖{{{}}}", list(&x)) };
        }
        let h = self.head_len();
        let residues: Vec<u64> = (0..self.period()).filter(|&r| self.contains(h + r)).collect();
        let head = self.below(h);
        if !head.is_empty() {
            write!(f, "{{{}}} ∪ ", list(&head))?;
        }
        if h == 0 {
            write!(f, "{{n : n mod {} ∈ {{{}}}}}", self.period(), list(&residues))
        } else {
            write!(f, "{{n ≥ {h} : (n-{h}) mod {} ∈ {{{}}}}}", self.period(), list(&residues))
        }
    }
}

impl fmt::Debug for NatSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for NatSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let h = self.head_len();
        Wire {
            head_len: h as usize,
            head: self.below(h),
            period: self.cycle.len(),
            residues: (0..self.cycle.len()).filter(|&r| self.cycle[r]).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for NatSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let w = Wire::deserialize(d)?;
        if w.period == 0 {
            return Err(serde::de::Error::custom("period must be positive"));
        }
        let head = (0..w.head_len as u64).map(|n| w.head.contains(&n)).collect();
        let cycle = (0..w.period).map(|r| w.residues.contains(&r)).collect();
        Ok(NatSet::from_parts(head, cycle))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb() -> impl Strategy<Value = NatSet> {
        (prop::collection::vec(any::<bool>(), 0..6), prop::collection::vec(any::<bool>(), 1..5))
            .prop_map(|(h, c)| NatSet::from_parts(h, c))
    }

    #[test]
    fn normal_forms_are_unique() {
        assert_eq!(NatSet::periodic(4, &[0, 2]), NatSet::periodic(2, &[0]));
        assert_eq!(NatSet::from_parts(vec![true, false], vec![true, false]), NatSet::periodic(2, &[0]));
        assert_eq!(NatSet::cofinite([]), NatSet::all());
        assert_eq!(NatSet::finite([]), NatSet::empty());
        assert_eq!(NatSet::from(0), NatSet::all());
    }

    #[test]
    fn display() {
        assert_eq!(NatSet::finite([3, 1]).to_string(), "{1,3}");
        assert_eq!(NatSet::cofinite([2]).to_string(), "ℕ∖{2}");
        assert_eq!(NatSet::periodic(2, &[0]).to_string(), "{n : n mod 2 ∈ {0}}");
    }

    #[test]
    fn segments() {
        assert_eq!(NatSet::upto(3).as_initial_segment(), Some(Some(3)));
        assert_eq!(NatSet::empty().as_initial_segment(), Some(None));
        assert_eq!(NatSet::finite([1]).as_initial_segment(), None);
        assert_eq!(NatSet::all().as_initial_segment(), None);
    }

    #[test]
    fn json_round_trip() {
        let s = NatSet::from_parts(vec![true, false, true], vec![false, true, true]);
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(serde_json::from_str::<NatSet>(&j).unwrap(), s);
    }

    proptest! {
        #[test]
        fn ops_agree_pointwise(a in arb(), b in arb()) {
            let (u, i, d) = (a.union(&b), a.intersection(&b), a.difference(&b));
            for n in 0..40 {
                prop_assert_eq!(u.contains(n), a.contains(n) || b.contains(n));
                prop_assert_eq!(i.contains(n), a.contains(n) && b.contains(n));
                prop_assert_eq!(d.contains(n), a.contains(n) && !b.contains(n));
                prop_assert_eq!(a.complement().contains(n), !a.contains(n));
            }
        }

        #[test]
        fn equality_is_semantic(a in arb(), b in arb()) {
            let same = (0..60).all(|n| a.contains(n) == b.contains(n));
            prop_assert_eq!(same, a == b);
        }

        #[test]
        fn next_from_finds_the_next_member(a in arb(), n in 0u64..20) {
            let expect = (n..n + 40).find(|&k| a.contains(k));
            prop_assert_eq!(a.next_from(n), expect);
        }
    }
}

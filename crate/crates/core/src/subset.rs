//! Subsets of a finite carrier as 64-bit masks.
//!
//! Bit `i` stands for the `i`-th element of the (lexically sorted) carrier.

use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

/// Largest carrier a [`Subset`] can index.
pub const MAX_CARRIER: usize = 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn from_bits(bits: u64) -> Self {
        Subset(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// The whole carrier `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_CARRIER, "carrier of {n} points exceeds {MAX_CARRIER}");
        if n == MAX_CARRIER {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        Subset(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        let mut s = Subset::EMPTY;
        for i in it {
            s.insert(i);
        }
        s
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_CARRIER && self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u64 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u64 << i);
    }

    pub fn with(self, i: usize) -> Self {
        Subset(self.0 | 1u64 << i)
    }

    pub fn without(self, i: usize) -> Self {
        Subset(self.0 & !(1u64 << i))
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: Subset) -> bool {
        self.0 & other.0 != 0
    }

    /// Complement relative to a carrier of `n` points.
    pub fn complement(self, n: usize) -> Self {
        Subset(!self.0 & Subset::full(n).0)
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Members {
        Members(self.0)
    }

    /// Key giving the lexicographic order of bit-vectors read from element 0.
    pub fn lex_key(self) -> u64 {
        self.0.reverse_bits()
    }

    /// Image under an index relabelling `pos[old] = new`.
    pub fn permute(self, pos: &[usize]) -> Self {
        Subset::from_indices(self.iter().map(|i| pos[i]))
    }

    /// Every subset of `{0, .., n-1}`, in increasing mask order.
    pub fn all(n: usize) -> impl Iterator<Item = Subset> {
        assert!(n < MAX_CARRIER);
        (0..1u64 << n).map(Subset)
    }

    /// Every subset of `self`, starting from the empty set.
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full { None } else { Some((cur.wrapping_sub(full)) & full) };
            Some(Subset(cur))
        })
    }
}

pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

impl BitOr for Subset {
    type Output = Subset;
    fn bitor(self, rhs: Subset) -> Subset {
        Subset(self.0 | rhs.0)
    }
}

impl BitAnd for Subset {
    type Output = Subset;
    fn bitand(self, rhs: Subset) -> Subset {
        Subset(self.0 & rhs.0)
    }
}

impl Sub for Subset {
    type Output = Subset;
    fn sub(self, rhs: Subset) -> Subset {
        Subset(self.0 & !rhs.0)
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.lex_key().cmp(&other.lex_key())
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Renders `{a,b}` from the labels of the members.
pub fn set_label(labels: &[String], s: Subset) -> String {
    let parts: Vec<&str> = s.iter().map(|i| labels[i].as_str()).collect();
    format!("{{{}}}", parts.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_enumerates_powerset() {
        let s = Subset::from_indices([1, 3, 4]);
        let subs: Vec<Subset> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|t| t.is_subset(s)));
        assert_eq!(subs[0], Subset::EMPTY);
        assert_eq!(*subs.last().unwrap(), s);
    }

    #[test]
    fn lex_order_puts_element_zero_first() {
        let a = Subset::from_indices([0]);
        let b = Subset::from_indices([1, 2]);
        assert!(b < a);
        assert!(Subset::EMPTY < b);
        assert!(a < Subset::full(3));
    }

    #[test]
    fn complement_and_members() {
        let s = Subset::from_indices([0, 2]);
        assert_eq!(s.complement(4), Subset::from_indices([1, 3]));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(Subset::full(64).len(), 64);
    }

    #[test]
    fn labels_render_in_member_order() {
        let labels: Vec<String> = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
        assert_eq!(set_label(&labels, Subset::from_indices([2, 0])), "{a,c}");
        assert_eq!(set_label(&labels, Subset::EMPTY), "{}");
    }
}

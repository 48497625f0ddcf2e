//! Raw subsets of the example spaces, closed under the Boolean operations.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Family, Level, NatSet, Point, SpaceId, Special};
use crate::error::{Error, Result};

/// The part of one Johnstone column inside a set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ColumnSet {
    pub rows: NatSet,
    pub omega: bool,
}

impl ColumnSet {
    pub fn empty() -> Self {
        ColumnSet { rows: NatSet::empty(), omega: false }
    }

    pub fn full() -> Self {
        ColumnSet { rows: NatSet::all(), omega: true }
    }

    pub fn contains(&self, level: Level) -> bool {
        match level {
            Level::Fin(k) => self.rows.contains(k),
            Level::Omega => self.omega,
        }
    }

    fn zip(&self, other: &ColumnSet, rows: impl Fn(&NatSet, &NatSet) -> NatSet, om: impl Fn(bool, bool) -> bool) -> Self {
        ColumnSet { rows: rows(&self.rows, &other.rows), omega: om(self.omega, other.omega) }
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty() && !self.omega
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "shape")]
enum Body {
    /// Spaces built on ℕ: a subset of ℕ and some named points.
    Nat { nat: NatSet, specials: BTreeSet<Special> },
    /// Johnstone spaces: the columns not listed all look like `default`.
    Grid { default: ColumnSet, columns: BTreeMap<u64, ColumnSet>, top: bool },
}

/// A subset of one of the example spaces.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SymbolicSet {
    space: SpaceId,
    #[serde(flatten)]
    body: Body,
}

impl SymbolicSet {
    pub fn empty(space: SpaceId) -> Self {
        let body = match space.family() {
            Family::Johnstone => Body::Grid { default: ColumnSet::empty(), columns: BTreeMap::new(), top: false },
            _ => Body::Nat { nat: NatSet::empty(), specials: BTreeSet::new() },
        };
        SymbolicSet { space, body }
    }

    pub fn whole(space: SpaceId) -> Self {
        SymbolicSet::empty(space).complement()
    }

    /// A subset of a ℕ-based space.
    pub fn nat(space: SpaceId, nat: NatSet, specials: &[Special]) -> Result<Self> {
        if space.family() == Family::Johnstone {
            return Err(Error::Unsupported(format!("{space} is not built on ℕ")));
        }
        for &s in specials {
            space.check_point(&Point::Special(s))?;
        }
        Ok(SymbolicSet { space, body: Body::Nat { nat, specials: specials.iter().copied().collect() } })
    }

    /// A subset of a Johnstone space; unlisted columns equal `default`.
    pub fn grid(space: SpaceId, default: ColumnSet, columns: BTreeMap<u64, ColumnSet>, top: bool) -> Result<Self> {
        if space.family() != Family::Johnstone {
            return Err(Error::Unsupported(format!("{space} is not a Johnstone space")));
        }
        if top && !space.has_top() {
            return Err(Error::BadPoint { space: space.tag().into(), point: "⊤".into() });
        }
        Ok(Self::grid_unchecked(space, default, columns, top))
    }

    fn grid_unchecked(space: SpaceId, default: ColumnSet, mut columns: BTreeMap<u64, ColumnSet>, top: bool) -> Self {
        columns.retain(|_, c| *c != default);
        SymbolicSet { space, body: Body::Grid { default, columns, top } }
    }

    pub fn from_points(space: SpaceId, points: &[Point]) -> Result<Self> {
        let mut s = SymbolicSet::empty(space);
        for p in points {
            space.check_point(p)?;
            s = s.union(&s.single(p))?;
        }
        Ok(s)
    }

    fn single(&self, p: &Point) -> SymbolicSet {
        let space = self.space;
        match p {
            Point::Nat(n) => SymbolicSet {
                space,
                body: Body::Nat { nat: NatSet::finite([*n]), specials: BTreeSet::new() },
            },
            Point::Special(s) => match space.family() {
                Family::Johnstone => {
                    Self::grid_unchecked(space, ColumnSet::empty(), BTreeMap::new(), *s == Special::Top)
                }
                _ => SymbolicSet { space, body: Body::Nat { nat: NatSet::empty(), specials: BTreeSet::from([*s]) } },
            },
            Point::J(j, level) => {
                let col = match level {
                    Level::Fin(k) => ColumnSet { rows: NatSet::finite([*k]), omega: false },
                    Level::Omega => ColumnSet { rows: NatSet::empty(), omega: true },
                };
                Self::grid_unchecked(space, ColumnSet::empty(), BTreeMap::from([(*j, col)]), false)
            }
        }
    }

    pub fn space(&self) -> SpaceId {
        self.space
    }

    pub fn contains(&self, p: &Point) -> bool {
        if self.space.check_point(p).is_err() {
            return false;
        }
        match (&self.body, p) {
            (Body::Nat { nat, .. }, Point::Nat(n)) => nat.contains(*n),
            (Body::Nat { specials, .. }, Point::Special(s)) => specials.contains(s),
            (Body::Grid { top, .. }, Point::Special(Special::Top)) => *top,
            (Body::Grid { default, columns, .. }, Point::J(j, level)) => {
                columns.get(j).unwrap_or(default).contains(*level)
            }
            _ => false,
        }
    }

    /// ℕ-part of a ℕ-based space.
    pub fn nat_part(&self) -> Option<(&NatSet, &BTreeSet<Special>)> {
        match &self.body {
            Body::Nat { nat, specials } => Some((nat, specials)),
            Body::Grid { .. } => None,
        }
    }

    /// Column data of a Johnstone space.
    pub fn grid_part(&self) -> Option<(&ColumnSet, &BTreeMap<u64, ColumnSet>, bool)> {
        match &self.body {
            Body::Grid { default, columns, top } => Some((default, columns, *top)),
            Body::Nat { .. } => None,
        }
    }

    pub fn column(&self, j: u64) -> Option<&ColumnSet> {
        self.grid_part().map(|(d, cols, _)| cols.get(&j).unwrap_or(d))
    }

    fn combine(
        &self,
        other: &SymbolicSet,
        nat: impl Fn(&NatSet, &NatSet) -> NatSet,
        flag: impl Fn(bool, bool) -> bool,
    ) -> Result<SymbolicSet> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch(self.space.tag().into(), other.space.tag().into()));
        }
        let space = self.space;
        Ok(match (&self.body, &other.body) {
            (Body::Nat { nat: n1, specials: s1 }, Body::Nat { nat: n2, specials: s2 }) => {
                let specials = space
                    .specials()
                    .iter()
                    .copied()
                    .filter(|s| flag(s1.contains(s), s2.contains(s)))
                    .collect();
                SymbolicSet { space, body: Body::Nat { nat: nat(n1, n2), specials } }
            }
            (
                Body::Grid { default: d1, columns: c1, top: t1 },
                Body::Grid { default: d2, columns: c2, top: t2 },
            ) => {
                let keys: BTreeSet<u64> = c1.keys().chain(c2.keys()).copied().collect();
                let columns = keys
                    .into_iter()
                    .map(|j| (j, c1.get(&j).unwrap_or(d1).zip(c2.get(&j).unwrap_or(d2), &nat, &flag)))
                    .collect();
                Self::grid_unchecked(space, d1.zip(d2, &nat, &flag), columns, flag(*t1, *t2))
            }
            _ => unreachable!("bodies follow the space family"),
        })
    }

    pub fn union(&self, other: &SymbolicSet) -> Result<SymbolicSet> {
        self.combine(other, NatSet::union, |a, b| a || b)
    }

    pub fn intersection(&self, other: &SymbolicSet) -> Result<SymbolicSet> {
        self.combine(other, NatSet::intersection, |a, b| a && b)
    }

    pub fn difference(&self, other: &SymbolicSet) -> Result<SymbolicSet> {
        self.combine(other, NatSet::difference, |a, b| a && !b)
    }

    pub fn complement(&self) -> SymbolicSet {
        let space = self.space;
        match &self.body {
            Body::Nat { nat, specials } => SymbolicSet {
                space,
                body: Body::Nat {
                    nat: nat.complement(),
                    specials: space.specials().iter().copied().filter(|s| !specials.contains(s)).collect(),
                },
            },
            Body::Grid { default, columns, top } => {
                let flip = |c: &ColumnSet| ColumnSet { rows: c.rows.complement(), omega: !c.omega };
                Self::grid_unchecked(
                    space,
                    flip(default),
                    columns.iter().map(|(&j, c)| (j, flip(c))).collect(),
                    space.has_top() && !top,
                )
            }
        }
    }

    pub fn is_subset(&self, other: &SymbolicSet) -> Result<bool> {
        Ok(self.difference(other)?.is_empty())
    }

    pub fn is_empty(&self) -> bool {
        match &self.body {
            Body::Nat { nat, specials } => nat.is_empty() && specials.is_empty(),
            Body::Grid { default, columns, top } => !top && default.is_empty() && columns.values().all(ColumnSet::is_empty),
        }
    }

    /// Some member, searching the fragment of level `n` first and then the periodic parts.
    pub fn some_member(&self, n: u64) -> Option<Point> {
        if let Some(p) = super::fragment(self.space, n).into_iter().find(|p| self.contains(p)) {
            return Some(p);
        }
        match &self.body {
            Body::Nat { nat, .. } => nat.least().map(Point::Nat),
            Body::Grid { default, columns, .. } => {
                let in_col = |j: u64, c: &ColumnSet| {
                    c.rows.least().map(|k| Point::J(j, Level::Fin(k))).or(c.omega.then_some(Point::J(j, Level::Omega)))
                };
                columns.iter().find_map(|(&j, c)| in_col(j, c)).or_else(|| {
                    let j = (0..).find(|j| !columns.contains_key(j)).expect("finitely many listed columns");
                    in_col(j, default)
                })
            }
        }
    }

    /// Points of the level-`n` fragment inside the set.
    pub fn members_in_fragment(&self, n: u64) -> Vec<Point> {
        super::fragment(self.space, n).into_iter().filter(|p| self.contains(p)).collect()
    }

    /// The same points read in another space of the same family (dropping missing named points).
    pub fn reinterpret(&self, space: SpaceId) -> Result<SymbolicSet> {
        if space.family() != self.space.family() {
            return Err(Error::SpaceMismatch(self.space.tag().into(), space.tag().into()));
        }
        Ok(match &self.body {
            Body::Nat { nat, specials } => SymbolicSet {
                space,
                body: Body::Nat {
                    nat: nat.clone(),
                    specials: specials.iter().copied().filter(|s| space.specials().contains(s)).collect(),
                },
            },
            Body::Grid { default, columns, top } => {
                Self::grid_unchecked(space, default.clone(), columns.clone(), *top && space.has_top())
            }
        })
    }
}

impl fmt::Display for SymbolicSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.body {
            Body::Nat { nat, specials } => {
                write!(f, "{nat}")?;
                for s in specials {
                    write!(f, " ∪ {{{}}}", s.name())?;
                }
                Ok(())
            }
            Body::Grid { default, columns, top } => {
                let col = |c: &ColumnSet| format!("rows {}{}", c.rows, if c.omega { " + ω" } else { "" });
                write!(f, "columns: {}", col(default))?;
                for (j, c) in columns {
                    write!(f, "; column {j}: {}", col(c))?;
                }
                if *top {
                    f.write_str("; ⊤")?;
                }
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Point {
        s.parse().unwrap()
    }

    #[test]
    fn points_and_membership() {
        let s = SymbolicSet::from_points(SpaceId::Johnstone, &[p("(2,3)"), p("(5,ω)")]).unwrap();
        assert!(s.contains(&p("(2,3)")));
        assert!(s.contains(&p("(5,ω)")));
        assert!(!s.contains(&p("(2,4)")));
        assert!(!s.contains(&p("⊤")));
        assert!(SymbolicSet::from_points(SpaceId::Johnstone, &[p("a")]).is_err());
    }

    #[test]
    fn complement_of_whole_is_empty() {
        for id in SpaceId::ALL {
            let w = SymbolicSet::whole(id);
            assert!(w.complement().is_empty(), "{id}");
            assert!(!w.is_empty());
            for q in super::super::fragment(id, 3) {
                assert!(w.contains(&q));
            }
        }
    }

    #[test]
    fn boolean_ops_normalize() {
        let a = SymbolicSet::from_points(SpaceId::Johnstone, &[p("(1,1)")]).unwrap();
        let b = a.difference(&a).unwrap();
        assert_eq!(b, SymbolicSet::empty(SpaceId::Johnstone));
        let n = SymbolicSet::nat(SpaceId::NatAb, NatSet::all(), &[Special::A]).unwrap();
        let m = SymbolicSet::nat(SpaceId::NatAb, NatSet::upto(3), &[]).unwrap();
        assert!(m.is_subset(&n).unwrap());
        assert!(!n.is_subset(&m).unwrap());
        assert!(matches!(m.union(&SymbolicSet::empty(SpaceId::NatChain)), Err(Error::SpaceMismatch(..))));
    }

    #[test]
    fn some_member_looks_past_the_fragment() {
        let s = SymbolicSet::nat(SpaceId::CofiniteNat, NatSet::from(40), &[]).unwrap();
        assert_eq!(s.some_member(5), Some(Point::Nat(40)));
        let g = SymbolicSet::grid(
            SpaceId::Johnstone,
            ColumnSet::empty(),
            BTreeMap::from([(30, ColumnSet { rows: NatSet::empty(), omega: true })]),
            false,
        )
        .unwrap();
        assert_eq!(g.some_member(4), Some(p("(30,ω)")));
    }
}

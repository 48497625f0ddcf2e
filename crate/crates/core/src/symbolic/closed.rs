//! Scott-closed sets of the example spaces in a unique normal form.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{ColumnSet, Family, Level, NatSet, Point, SpaceId, Special, SymbolicSet};
use crate::error::{Error, Result};

/// Height of one Johnstone column inside a closed set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Column {
    /// Rows `0..=h`; `-1` is the empty column.
    Height(i64),
    /// The full column together with its ω-point.
    Omega,
}

impl Column {
    fn rank(self) -> i64 {
        match self {
            Column::Height(h) => h,
            Column::Omega => i64::MAX,
        }
    }

    fn from_rank(r: i64) -> Self {
        if r == i64::MAX {
            Column::Omega
        } else {
            Column::Height(r)
        }
    }

    fn contains(self, level: Level) -> bool {
        match (self, level) {
            (Column::Omega, _) => true,
            (Column::Height(h), Level::Fin(k)) => (k as i64) <= h,
            (Column::Height(_), Level::Omega) => false,
        }
    }

    fn to_set(self) -> ColumnSet {
        match self {
            Column::Omega => ColumnSet::full(),
            Column::Height(h) if h < 0 => ColumnSet::empty(),
            Column::Height(h) => ColumnSet { rows: NatSet::upto(h as u64), omega: false },
        }
    }
}

/// A proper nonempty Scott-closed subset of the Johnstone space.
///
/// Every column not listed has rows `0..=floor`. An ω-column `j` forces rows
/// `0..=j` in every column, so `floor` and all listed heights are at least
/// the largest ω-column.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct JForm {
    pub floor: i64,
    pub columns: BTreeMap<u64, Column>,
}

impl JForm {
    pub fn new(floor: i64, columns: BTreeMap<u64, Column>) -> Result<Self> {
        let f = JForm { floor, columns };
        f.validate()?;
        Ok(f)
    }

    fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidForm(m));
        if self.floor < -1 {
            return bad(format!("floor {} below -1", self.floor));
        }
        let omega_max = self.omega_columns().last().map_or(-1, |&j| j as i64);
        for (&j, &c) in &self.columns {
            match c {
                Column::Height(h) if h < -1 => return bad(format!("column {j} has height {h}")),
                Column::Height(h) if h == self.floor => return bad(format!("column {j} repeats the floor")),
                Column::Height(h) if h < omega_max => {
                    return bad(format!("column {j} is below the ω-column {omega_max}"));
                }
                _ => {}
            }
        }
        if self.floor < omega_max {
            return bad(format!("floor {} is below the ω-column {omega_max}", self.floor));
        }
        if self.floor == -1 && self.columns.is_empty() {
            return bad("the empty set has its own form".into());
        }
        Ok(())
    }

    pub fn omega_columns(&self) -> Vec<u64> {
        self.columns.iter().filter(|(_, &c)| c == Column::Omega).map(|(&j, _)| j).collect()
    }

    pub fn column(&self, j: u64) -> Column {
        self.columns.get(&j).copied().unwrap_or(Column::Height(self.floor))
    }

    /// Builds the form from ranks, dropping entries equal to the floor.
    fn from_ranks(floor: i64, columns: BTreeMap<u64, i64>) -> Option<Self> {
        let columns: BTreeMap<u64, Column> =
            columns.into_iter().filter(|&(_, r)| r != floor).map(|(j, r)| (j, Column::from_rank(r))).collect();
        (floor >= 0 || !columns.is_empty()).then_some(JForm { floor, columns })
    }

    fn zip(&self, other: &JForm, op: fn(i64, i64) -> i64) -> Option<JForm> {
        let keys: BTreeSet<u64> = self.columns.keys().chain(other.columns.keys()).copied().collect();
        let ranks = keys.into_iter().map(|j| (j, op(self.column(j).rank(), other.column(j).rank()))).collect();
        JForm::from_ranks(op(self.floor, other.floor), ranks)
    }

    fn contains(&self, j: u64, level: Level) -> bool {
        self.column(j).contains(level)
    }

    fn to_set(&self, space: SpaceId) -> SymbolicSet {
        let columns = self.columns.iter().map(|(&j, &c)| (j, c.to_set())).collect();
        SymbolicSet::grid(space, Column::Height(self.floor).to_set(), columns, false).expect("grid space")
    }

    /// Rows `0..=r` in every column.
    pub fn floor_set(r: u64) -> Self {
        JForm { floor: r as i64, columns: BTreeMap::new() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "form")]
pub enum ClosedForm {
    Empty,
    /// `{0, .., n}`
    Segment { n: u64 },
    /// ℕ itself, closed only where ℕ has no supremum.
    Naturals,
    /// `↓a`, `↓b` or `↓c`.
    Below { point: Special },
    /// Nonempty finite set of a cofinite space.
    Finite { points: BTreeSet<u64> },
    Johnstone(JForm),
    /// Everything except the adjoined top.
    Base,
    Whole,
}

/// A Scott-closed set (closed set, for the cofinite spaces) of an example space.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClosedSetRep {
    pub space: SpaceId,
    pub form: ClosedForm,
}

/// Componentwise coordinates in which union and intersection are max and min.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Extent {
    None,
    Upto(u64),
    All,
}

enum Parts {
    Nat(Extent, BTreeSet<Special>),
    Cof(Option<BTreeSet<u64>>, bool),
    Grid(Option<JForm>, bool, bool),
}

fn down_specials(space: SpaceId, s: Special) -> BTreeSet<Special> {
    space
        .specials()
        .iter()
        .copied()
        .filter(|&t| super::leq_unchecked(space, &Point::Special(t), &Point::Special(s)))
        .collect()
}

impl ClosedSetRep {
    pub fn new(space: SpaceId, form: ClosedForm) -> Result<Self> {
        let ok = match (&form, space) {
            (ClosedForm::Empty | ClosedForm::Whole, _) => true,
            (ClosedForm::Segment { .. }, s) => s.family() == Family::NatLike,
            (ClosedForm::Naturals, s) => s == SpaceId::NatAb,
            (ClosedForm::Below { point }, s) => {
                matches!(s, SpaceId::NatAb | SpaceId::NatAbc) && s.specials().contains(point)
            }
            (ClosedForm::Finite { points }, s) => s.family() == Family::Cofinite && !points.is_empty(),
            (ClosedForm::Johnstone(f), s) => {
                f.validate()?;
                s.family() == Family::Johnstone
            }
            (ClosedForm::Base, s) => matches!(s, SpaceId::JohnstoneTop | SpaceId::CofiniteNatTop),
        };
        if !ok {
            return Err(Error::InvalidForm(format!("{form:?} is not a closed-set form of {space}")));
        }
        Ok(ClosedSetRep { space, form })
    }

    pub fn empty(space: SpaceId) -> Self {
        ClosedSetRep { space, form: ClosedForm::Empty }
    }

    pub fn whole(space: SpaceId) -> Self {
        ClosedSetRep { space, form: ClosedForm::Whole }
    }

    /// `cl{x}`: the principal down-set, or `{x}` in the cofinite spaces.
    pub fn point_closure(space: SpaceId, p: &Point) -> Result<Self> {
        space.check_point(p)?;
        let form = match (space.family(), p) {
            (_, Point::Special(Special::Top)) => ClosedForm::Whole,
            (Family::NatLike, Point::Nat(n)) => ClosedForm::Segment { n: *n },
            (Family::NatLike, Point::Special(s)) => ClosedForm::Below { point: *s },
            (Family::Cofinite, Point::Nat(n)) => ClosedForm::Finite { points: BTreeSet::from([*n]) },
            (Family::Johnstone, Point::J(j, Level::Fin(k))) => {
                let f = JForm::from_ranks(-1, BTreeMap::from([(*j, *k as i64)])).expect("nonempty");
                ClosedForm::Johnstone(f)
            }
            (Family::Johnstone, Point::J(j, Level::Omega)) => ClosedForm::Johnstone(JForm {
                floor: *j as i64,
                columns: BTreeMap::from([(*j, Column::Omega)]),
            }),
            _ => unreachable!("point checked against the space"),
        };
        Ok(ClosedSetRep { space, form })
    }

    pub fn is_empty(&self) -> bool {
        self.form == ClosedForm::Empty
    }

    pub fn contains(&self, p: &Point) -> bool {
        if self.space.check_point(p).is_err() {
            return false;
        }
        match (&self.form, p) {
            (ClosedForm::Empty, _) => false,
            (ClosedForm::Whole, _) => true,
            (_, Point::Special(Special::Top)) => false,
            (ClosedForm::Base, _) => true,
            (ClosedForm::Segment { n }, Point::Nat(m)) => m <= n,
            (ClosedForm::Naturals, Point::Nat(_)) => true,
            (ClosedForm::Below { .. }, Point::Nat(_)) => true,
            (ClosedForm::Below { point }, Point::Special(s)) => {
                super::leq_unchecked(self.space, &Point::Special(*s), &Point::Special(*point))
            }
            (ClosedForm::Finite { points }, Point::Nat(n)) => points.contains(n),
            (ClosedForm::Johnstone(f), Point::J(j, level)) => f.contains(*j, *level),
            _ => false,
        }
    }

    pub fn to_set(&self) -> SymbolicSet {
        let space = self.space;
        let nat = |n: NatSet, sp: &[Special]| SymbolicSet::nat(space, n, sp).expect("nat space");
        match &self.form {
            ClosedForm::Empty => SymbolicSet::empty(space),
            ClosedForm::Whole => SymbolicSet::whole(space),
            ClosedForm::Segment { n } => nat(NatSet::upto(*n), &[]),
            ClosedForm::Naturals => nat(NatSet::all(), &[]),
            ClosedForm::Below { point } => {
                nat(NatSet::all(), &down_specials(space, *point).into_iter().collect::<Vec<_>>())
            }
            ClosedForm::Finite { points } => nat(NatSet::finite(points.iter().copied()), &[]),
            ClosedForm::Base => SymbolicSet::whole(space)
                .difference(&SymbolicSet::from_points(space, &[Point::TOP]).expect("top space"))
                .expect("same space"),
            ClosedForm::Johnstone(f) => f.to_set(space),
        }
    }

    fn parts(&self) -> Parts {
        let space = self.space;
        match space.family() {
            Family::NatLike => {
                let all: BTreeSet<Special> = space.specials().iter().copied().collect();
                match &self.form {
                    ClosedForm::Empty => Parts::Nat(Extent::None, BTreeSet::new()),
                    ClosedForm::Segment { n } => Parts::Nat(Extent::Upto(*n), BTreeSet::new()),
                    ClosedForm::Naturals => Parts::Nat(Extent::All, BTreeSet::new()),
                    ClosedForm::Below { point } => Parts::Nat(Extent::All, down_specials(space, *point)),
                    ClosedForm::Whole => Parts::Nat(Extent::All, all),
                    _ => unreachable!(),
                }
            }
            Family::Cofinite => match &self.form {
                ClosedForm::Empty => Parts::Cof(Some(BTreeSet::new()), false),
                ClosedForm::Finite { points } => Parts::Cof(Some(points.clone()), false),
                ClosedForm::Base => Parts::Cof(None, false),
                ClosedForm::Whole => Parts::Cof(None, true),
                _ => unreachable!(),
            },
            Family::Johnstone => match &self.form {
                ClosedForm::Empty => Parts::Grid(None, false, false),
                ClosedForm::Johnstone(f) => Parts::Grid(Some(f.clone()), false, false),
                ClosedForm::Base => Parts::Grid(None, true, false),
                ClosedForm::Whole => Parts::Grid(None, true, true),
                _ => unreachable!(),
            },
        }
    }

    fn from_parts(space: SpaceId, parts: Parts) -> Self {
        let form = match parts {
            Parts::Nat(Extent::None, _) => ClosedForm::Empty,
            Parts::Nat(Extent::Upto(n), _) => ClosedForm::Segment { n },
            Parts::Nat(Extent::All, specials) => {
                let maximal: Vec<Special> = specials
                    .iter()
                    .copied()
                    .filter(|&s| specials.iter().all(|&t| t == s || !down_specials(space, t).contains(&s)))
                    .collect();
                if specials.len() == space.specials().len() {
                    ClosedForm::Whole
                } else if specials.is_empty() {
                    ClosedForm::Naturals
                } else {
                    assert_eq!(maximal.len(), 1, "closed special parts are principal");
                    ClosedForm::Below { point: maximal[0] }
                }
            }
            // ⊤ lies above every point.
            Parts::Cof(_, true) => ClosedForm::Whole,
            Parts::Cof(Some(points), _) if points.is_empty() => ClosedForm::Empty,
            Parts::Cof(Some(points), _) => ClosedForm::Finite { points },
            Parts::Cof(None, false) if space.has_top() => ClosedForm::Base,
            Parts::Cof(None, _) => ClosedForm::Whole,
            Parts::Grid(_, true, true) => ClosedForm::Whole,
            Parts::Grid(_, true, false) if space.has_top() => ClosedForm::Base,
            Parts::Grid(_, true, false) => ClosedForm::Whole,
            Parts::Grid(None, false, _) => ClosedForm::Empty,
            Parts::Grid(Some(f), false, _) => ClosedForm::Johnstone(f),
        };
        ClosedSetRep { space, form }
    }

    fn same_space(&self, other: &ClosedSetRep) -> Result<()> {
        if self.space == other.space {
            Ok(())
        } else {
            Err(Error::SpaceMismatch(self.space.tag().into(), other.space.tag().into()))
        }
    }

    pub fn union(&self, other: &ClosedSetRep) -> Result<ClosedSetRep> {
        self.same_space(other)?;
        let parts = match (self.parts(), other.parts()) {
            (Parts::Nat(e1, s1), Parts::Nat(e2, s2)) => Parts::Nat(e1.max(e2), &s1 | &s2),
            (Parts::Cof(a, t1), Parts::Cof(b, t2)) => Parts::Cof(
                match (a, b) {
                    (Some(a), Some(b)) => Some(&a | &b),
                    _ => None,
                },
                t1 || t2,
            ),
            (Parts::Grid(a, f1, t1), Parts::Grid(b, f2, t2)) => {
                let j = match (a, b) {
                    (Some(a), Some(b)) => a.zip(&b, i64::max),
                    (a, b) => a.or(b),
                };
                Parts::Grid(j, f1 || f2, t1 || t2)
            }
            _ => unreachable!("same space"),
        };
        Ok(Self::from_parts(self.space, parts))
    }

    pub fn intersection(&self, other: &ClosedSetRep) -> Result<ClosedSetRep> {
        self.same_space(other)?;
        let parts = match (self.parts(), other.parts()) {
            (Parts::Nat(e1, s1), Parts::Nat(e2, s2)) => {
                let e = e1.min(e2);
                Parts::Nat(e, if e == Extent::All { &s1 & &s2 } else { BTreeSet::new() })
            }
            (Parts::Cof(a, t1), Parts::Cof(b, t2)) => Parts::Cof(
                match (a, b) {
                    (Some(a), Some(b)) => Some(&a & &b),
                    (a, b) => a.or(b),
                },
                t1 && t2,
            ),
            (Parts::Grid(a, f1, t1), Parts::Grid(b, f2, t2)) => {
                let j = match (a, b, f1, f2) {
                    (Some(a), Some(b), _, _) => a.zip(&b, i64::min),
                    (Some(a), None, _, true) | (None, Some(a), true, _) => Some(a),
                    _ => None,
                };
                Parts::Grid(j, f1 && f2, t1 && t2)
            }
            _ => unreachable!("same space"),
        };
        Ok(Self::from_parts(self.space, parts))
    }

    pub fn is_subset(&self, other: &ClosedSetRep) -> Result<bool> {
        Ok(self.union(other)? == *other)
    }

    /// The closed set equal to `set`, or `NotClosed`.
    pub fn from_set(set: &SymbolicSet) -> Result<Self> {
        let c = closure(set);
        if c.to_set() == *set {
            Ok(c)
        } else {
            Err(Error::NotClosed(set.to_string()))
        }
    }
}

/// Smallest closed superset.
pub fn closure(set: &SymbolicSet) -> ClosedSetRep {
    let space = set.space();
    let parts = if let Some((nat, specials)) = set.nat_part() {
        match space.family() {
            Family::Cofinite => {
                let top = specials.contains(&Special::Top);
                Parts::Cof(nat.elements().map(|e| e.into_iter().collect()), top)
            }
            _ => {
                let mut below: BTreeSet<Special> =
                    specials.iter().flat_map(|&s| down_specials(space, s)).collect();
                let extent = if !below.is_empty() || !nat.is_finite() {
                    Extent::All
                } else {
                    nat.greatest().map_or(Extent::None, Extent::Upto)
                };
                if extent == Extent::All {
                    // ℕ has a supremum in these two spaces.
                    match space {
                        SpaceId::NatTop => below.insert(Special::Top),
                        SpaceId::NatAbc => below.insert(Special::C),
                        _ => false,
                    };
                }
                Parts::Nat(extent, below)
            }
        }
    } else {
        let (default, columns, top) = set.grid_part().expect("grid space");
        let rank = |c: &ColumnSet| {
            if c.omega || !c.rows.is_finite() {
                i64::MAX
            } else {
                c.rows.greatest().map_or(-1, |m| m as i64)
            }
        };
        let floor = rank(default);
        if top || floor == i64::MAX {
            Parts::Grid(None, true, top)
        } else {
            let mut ranks: BTreeMap<u64, i64> = columns.iter().map(|(&j, c)| (j, rank(c))).collect();
            let omega_max = ranks.iter().filter(|(_, &r)| r == i64::MAX).map(|(&j, _)| j as i64).max().unwrap_or(-1);
            let floor = floor.max(omega_max);
            for r in ranks.values_mut() {
                *r = (*r).max(omega_max);
            }
            Parts::Grid(JForm::from_ranks(floor, ranks), false, false)
        }
    };
    ClosedSetRep::from_parts(space, parts)
}

/// Whether the set equals its closure.
pub fn is_scott_closed(set: &SymbolicSet) -> bool {
    closure(set).to_set() == *set
}

impl fmt::Display for ClosedSetRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.form {
            ClosedForm::Empty => f.write_str("∅"),
            ClosedForm::Whole => f.write_str("whole space"),
            ClosedForm::Base => f.write_str("whole space minus ⊤"),
            ClosedForm::Segment { n } => write!(f, "↓{n}"),
            ClosedForm::Naturals => f.write_str("ℕ"),
            ClosedForm::Below { point } => write!(f, "↓{}", point.name()),
            ClosedForm::Finite { points } => {
                write!(f, "{}", NatSet::finite(points.iter().copied()))
            }
            ClosedForm::Johnstone(j) => {
                write!(f, "rows ≤ {} everywhere", j.floor)?;
                for (c, col) in &j.columns {
                    match col {
                        Column::Omega => write!(f, "; column {c} full")?,
                        Column::Height(h) => write!(f, "; column {c} rows ≤ {h}")?,
                    }
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
    fn top_closes_to_everything_in_cofinite_top() {
        let s = SpaceId::CofiniteNatTop;
        let set = SymbolicSet::from_points(s, &[p("0"), p("⊤")]).unwrap();
        assert_eq!(closure(&set), ClosedSetRep::whole(s));
        let set = SymbolicSet::from_points(s, &[p("3")]).unwrap();
        assert_eq!(closure(&set).form, ClosedForm::Finite { points: [3].into() });
    }

    fn down(space: SpaceId, s: &str) -> ClosedSetRep {
        ClosedSetRep::point_closure(space, &p(s)).unwrap()
    }

    #[test]
    fn johnstone_union_is_idempotent() {
        let a = down(SpaceId::Johnstone, "(2,ω)");
        assert_eq!(a.union(&a).unwrap(), a);
    }

    #[test]
    fn johnstone_intersection_of_two_omega_closures() {
        let j = SpaceId::Johnstone;
        let meet = down(j, "(1,ω)").intersection(&down(j, "(3,ω)")).unwrap();
        assert!(meet.contains(&p("(5,1)")));
        assert!(!meet.contains(&p("(5,2)")));
        let expect = JForm::new(1, BTreeMap::from([(1, Column::Height(3))])).unwrap();
        assert_eq!(meet.form, ClosedForm::Johnstone(expect));
    }

    #[test]
    fn nat_ab_union_with_naturals() {
        let s = SpaceId::NatAb;
        let n = ClosedSetRep::new(s, ClosedForm::Naturals).unwrap();
        let a = down(s, "a");
        assert_eq!(n.union(&a).unwrap(), a);
        assert_eq!(a.intersection(&down(s, "b")).unwrap(), n);
        assert_eq!(a.union(&down(s, "b")).unwrap(), ClosedSetRep::whole(s));
    }

    #[test]
    fn scott_closedness_examples() {
        let j = SpaceId::Johnstone;
        let full_column = SymbolicSet::grid(
            j,
            ColumnSet::empty(),
            BTreeMap::from([(3, ColumnSet { rows: NatSet::all(), omega: false })]),
            false,
        )
        .unwrap();
        assert!(!is_scott_closed(&full_column));
        assert!(is_scott_closed(&ClosedSetRep::new(j, ClosedForm::Johnstone(JForm::floor_set(5))).unwrap().to_set()));
        let nat = SymbolicSet::nat(SpaceId::NatAb, NatSet::all(), &[]).unwrap();
        assert!(is_scott_closed(&nat));
        let nat_top = SymbolicSet::nat(SpaceId::NatTop, NatSet::all(), &[]).unwrap();
        assert!(!is_scott_closed(&nat_top));
        assert_eq!(closure(&nat_top), ClosedSetRep::whole(SpaceId::NatTop));
    }

    #[test]
    fn omega_point_alone_closes_to_its_down_set() {
        let j = SpaceId::Johnstone;
        let s = SymbolicSet::from_points(j, &[p("(4,ω)")]).unwrap();
        assert_eq!(closure(&s), down(j, "(4,ω)"));
        assert!(matches!(ClosedSetRep::from_set(&s), Err(Error::NotClosed(_))));
    }

    #[test]
    fn invalid_forms_are_rejected() {
        assert!(JForm::new(1, BTreeMap::from([(3, Column::Omega)])).is_err());
        assert!(JForm::new(1, BTreeMap::from([(3, Column::Height(1))])).is_err());
        assert!(JForm::new(-1, BTreeMap::new()).is_err());
        assert!(ClosedSetRep::new(SpaceId::NatChain, ClosedForm::Naturals).is_err());
        assert!(ClosedSetRep::new(SpaceId::CofiniteNat, ClosedForm::Base).is_err());
    }

    #[test]
    fn cofinite_algebra() {
        let c = SpaceId::CofiniteNatTop;
        let a = down(c, "3").union(&down(c, "5")).unwrap();
        assert_eq!(a.form, ClosedForm::Finite { points: BTreeSet::from([3, 5]) });
        let base = ClosedSetRep::new(c, ClosedForm::Base).unwrap();
        assert_eq!(a.union(&base).unwrap(), base);
        assert_eq!(a.intersection(&base).unwrap(), a);
        assert_eq!(down(c, "⊤"), ClosedSetRep::whole(c));
        let inf = SymbolicSet::nat(c, NatSet::periodic(2, &[0]), &[]).unwrap();
        assert_eq!(closure(&inf), base);
    }
}

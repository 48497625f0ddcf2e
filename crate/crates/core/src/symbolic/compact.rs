//! Saturated sets of the example spaces and their compactness.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{
    is_scott_closed, leq_unchecked, ClosedForm, ClosedSetRep, Column, ColumnSet, Family, JForm, Level, NatSet,
    Point, SpaceId, Special, SymbolicSet, WINDOW,
};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "form")]
pub enum CompactForm {
    /// `↑F` for a finite set `F`, kept as its minimal points.
    UpperOf { points: Vec<Point> },
    /// ω-points of the listed Johnstone columns, with `⊤` where the space has one.
    Maximal { columns: NatSet, top: bool },
    /// `↑{(m, row) : m ∈ columns}` in a Johnstone space.
    UpperOfRow { row: u64, columns: NatSet },
    /// Any subset of a cofinite space.
    Subset { nat: NatSet, top: bool },
}

/// A nonempty saturated set of an example space.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CompactSatRep {
    pub space: SpaceId,
    pub form: CompactForm,
}

/// The open cover `U_n = X ∖ C_n` with `C_n` closed, increasing in `n`, such
/// that `U_n` misses a point of the set for every `n`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CoverWitness {
    pub description: String,
    /// Complements `C_n` for `n` in the verification window.
    pub complements: Vec<ClosedSetRep>,
    pub missed: Vec<Point>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CompactVerdict {
    pub compact: bool,
    pub reason: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cover: Option<CoverWitness>,
}

fn finite_or_cofinite(s: &NatSet) -> bool {
    s.is_finite() || s.is_cofinite()
}

/// `↑p` as a raw set.
pub(crate) fn up_set(space: SpaceId, p: &Point) -> SymbolicSet {
    let top: Vec<Special> = space.specials().iter().copied().filter(|&s| s == Special::Top).collect();
    match (space.family(), p) {
        (_, Point::Special(s)) => {
            let above: Vec<Point> = space
                .specials()
                .iter()
                .map(|&t| Point::Special(t))
                .filter(|t| leq_unchecked(space, &Point::Special(*s), t))
                .collect();
            SymbolicSet::from_points(space, &above).expect("valid points")
        }
        (Family::NatLike, Point::Nat(n)) => {
            SymbolicSet::nat(space, NatSet::from(*n), space.specials()).expect("nat space")
        }
        (Family::Cofinite, Point::Nat(n)) => SymbolicSet::nat(space, NatSet::finite([*n]), &top).expect("nat space"),
        (Family::Johnstone, Point::J(j, Level::Fin(k))) => {
            let omega_only = ColumnSet { rows: NatSet::empty(), omega: true };
            let mut columns: BTreeMap<u64, ColumnSet> = (0..*k).map(|m| (m, ColumnSet::empty())).collect();
            let own = ColumnSet { rows: NatSet::from(*k), omega: true };
            columns.insert(*j, own);
            SymbolicSet::grid(space, omega_only, columns, space.has_top()).expect("grid space")
        }
        (Family::Johnstone, Point::J(_, Level::Omega)) => {
            let pts = if space.has_top() { vec![*p, Point::TOP] } else { vec![*p] };
            SymbolicSet::from_points(space, &pts).expect("valid points")
        }
        _ => unreachable!("point checked against the space"),
    }
}

impl CompactSatRep {
    pub fn new(space: SpaceId, form: CompactForm) -> Result<Self> {
        let bad = |m: &str| Err(Error::InvalidForm(format!("{m} in {space}")));
        let form = match form {
            CompactForm::UpperOf { points } => {
                if points.is_empty() {
                    return Err(Error::EmptySet);
                }
                for p in &points {
                    space.check_point(p)?;
                }
                let mut min: Vec<Point> = points
                    .iter()
                    .copied()
                    .filter(|p| !points.iter().any(|q| q != p && leq_unchecked(space, q, p)))
                    .collect();
                min.sort();
                min.dedup();
                CompactForm::UpperOf { points: min }
            }
            CompactForm::Maximal { columns, top } => {
                if space.family() != Family::Johnstone {
                    return bad("maximal-point sets exist only");
                }
                if !finite_or_cofinite(&columns) {
                    return bad("column sets must be finite or cofinite");
                }
                if columns.is_empty() && !top {
                    return Err(Error::EmptySet);
                }
                if top != space.has_top() && !columns.is_empty() || (top && !space.has_top()) {
                    return Err(Error::KindMismatch { subset: "maximal-point set".into(), kind: "saturated" });
                }
                CompactForm::Maximal { columns, top }
            }
            CompactForm::UpperOfRow { row, columns } => {
                if space.family() != Family::Johnstone {
                    return bad("row sets exist only");
                }
                if !finite_or_cofinite(&columns) {
                    return bad("column sets must be finite or cofinite");
                }
                if columns.is_empty() {
                    return Err(Error::EmptySet);
                }
                CompactForm::UpperOfRow { row, columns }
            }
            CompactForm::Subset { nat, top } => {
                if space.family() != Family::Cofinite {
                    return bad("plain subsets are saturated only");
                }
                if !finite_or_cofinite(&nat) {
                    return bad("subsets must be finite or cofinite");
                }
                if nat.is_empty() && !top {
                    return Err(Error::EmptySet);
                }
                if top && !space.has_top() || space.has_top() && !top {
                    return Err(Error::KindMismatch { subset: nat.to_string(), kind: "saturated" });
                }
                CompactForm::Subset { nat, top }
            }
        };
        Ok(CompactSatRep { space, form })
    }

    pub fn upper_of(space: SpaceId, points: &[Point]) -> Result<Self> {
        Self::new(space, CompactForm::UpperOf { points: points.to_vec() })
    }

    pub fn to_set(&self) -> SymbolicSet {
        let space = self.space;
        let top = |s: SymbolicSet, t: bool| {
            if t {
                s.union(&SymbolicSet::from_points(space, &[Point::TOP]).expect("top")).expect("same space")
            } else {
                s
            }
        };
        match &self.form {
            CompactForm::UpperOf { points } => points
                .iter()
                .map(|p| up_set(space, p))
                .reduce(|a, b| a.union(&b).expect("same space"))
                .expect("nonempty"),
            CompactForm::Maximal { columns, top: t } => {
                let on = ColumnSet { rows: NatSet::empty(), omega: true };
                let (default, listed) = if columns.is_cofinite() {
                    let off = columns.excluded().expect("cofinite");
                    (on, off.into_iter().map(|j| (j, ColumnSet::empty())).collect())
                } else {
                    let on_cols = columns.elements().expect("finite");
                    (ColumnSet::empty(), on_cols.into_iter().map(|j| (j, on.clone())).collect())
                };
                top(SymbolicSet::grid(space, default, listed, false).expect("grid space"), *t)
            }
            CompactForm::UpperOfRow { row, columns } => {
                let cols: Vec<u64> = columns.below(columns.head_len().max(*row + 1));
                let mut s = SymbolicSet::empty(space);
                for j in cols {
                    s = s.union(&up_set(space, &Point::J(j, Level::Fin(*row)))).expect("same space");
                }
                if columns.is_cofinite() {
                    let tail = columns.head_len().max(*row + 1);
                    let own = ColumnSet { rows: NatSet::from(*row), omega: true };
                    let mut listed: BTreeMap<u64, ColumnSet> = BTreeMap::new();
                    for m in 0..tail {
                        let omega = m >= *row;
                        listed.insert(m, ColumnSet { rows: NatSet::empty(), omega });
                    }
                    let rest = SymbolicSet::grid(space, own, listed, space.has_top()).expect("grid space");
                    s = s.union(&rest).expect("same space");
                }
                s
            }
            CompactForm::Subset { nat, top: t } => {
                let s = SymbolicSet::nat(space, nat.clone(), &[]).expect("nat space");
                top(s, *t)
            }
        }
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.to_set().contains(p)
    }

    pub fn is_subset(&self, other: &CompactSatRep) -> Result<bool> {
        self.to_set().is_subset(&other.to_set())
    }

    /// Compactness, with an open cover lacking a finite subcover when it fails.
    pub fn is_compact(&self) -> CompactVerdict {
        let yes = |reason: &str| CompactVerdict { compact: true, reason: reason.into(), cover: None };
        match &self.form {
            CompactForm::UpperOf { .. } => yes("upper set of a finite set"),
            CompactForm::Maximal { .. } => {
                yes("every open set meeting the maximal points contains all but finitely many of them")
            }
            CompactForm::Subset { .. } => yes("every open set meeting the set misses only finitely many points"),
            CompactForm::UpperOfRow { columns, .. } if columns.is_finite() => yes("upper set of a finite set"),
            CompactForm::UpperOfRow { row, columns } => {
                let cover = self.row_cover(*row, columns);
                CompactVerdict {
                    compact: false,
                    reason: "infinitely many minimal points in one row".into(),
                    cover: Some(cover),
                }
            }
        }
    }

    /// `C_n = {(m, i) : m ∈ columns, m ≥ n, i ≤ row}`.
    fn row_cover(&self, row: u64, columns: &NatSet) -> CoverWitness {
        let space = self.space;
        let mut complements = Vec::new();
        let mut missed = Vec::new();
        for n in 0..WINDOW {
            let start = columns.head_len().max(n);
            let mut listed: BTreeMap<u64, Column> = BTreeMap::new();
            for m in 0..start {
                if m >= n && columns.contains(m) {
                    listed.insert(m, Column::Height(row as i64));
                } else {
                    listed.insert(m, Column::Height(-1));
                }
            }
            let floor = row as i64;
            let listed = listed.into_iter().filter(|&(_, c)| c != Column::Height(floor)).collect();
            let c = ClosedSetRep::new(space, ClosedForm::Johnstone(JForm::new(floor, listed).expect("valid form")))
                .expect("valid rep");
            debug_assert!(is_scott_closed(&c.to_set()));
            let m = columns.next_from(n).expect("infinitely many columns");
            missed.push(Point::J(m, Level::Fin(row)));
            complements.push(c);
        }
        CoverWitness {
            description: format!(
                "U_n is the complement of the rows 0..={row} of the columns m ≥ n in {columns}; \
                 U_n misses (m,{row}) for the next listed column m ≥ n"
            ),
            complements,
            missed,
        }
    }
}

impl fmt::Display for CompactSatRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.form {
            CompactForm::UpperOf { points } => {
                let pts: Vec<String> = points.iter().map(Point::to_string).collect();
                write!(f, "↑{{{}}}", pts.join(","))
            }
            CompactForm::Maximal { columns, top } => {
                write!(f, "ω-points of columns {columns}{}", if *top { " ∪ {⊤}" } else { "" })
            }
            CompactForm::UpperOfRow { row, columns } => write!(f, "↑(row {row} of columns {columns})"),
            CompactForm::Subset { nat, top } => write!(f, "{nat}{}", if *top { " ∪ {⊤}" } else { "" }),
        }
    }
}

#[cfg(test)]
/// Whether `set` is an up-set, checked on the level-`n` fragment.
fn saturated_on_fragment(set: &SymbolicSet, n: u64) -> bool {
    let pts = super::fragment(set.space(), n);
    pts.iter().all(|x| !set.contains(x) || pts.iter().all(|y| !leq_unchecked(set.space(), x, y) || set.contains(y)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Point {
        s.parse().unwrap()
    }

    #[test]
    fn johnstone_maximal_sets_are_compact() {
        for cols in [NatSet::finite([1, 4]), NatSet::cofinite([0, 2])] {
            for space in [SpaceId::Johnstone, SpaceId::JohnstoneTop] {
                let k = CompactSatRep::new(space, CompactForm::Maximal { columns: cols.clone(), top: space.has_top() })
                    .unwrap();
                assert!(k.is_compact().compact);
                assert!(saturated_on_fragment(&k.to_set(), 8));
            }
        }
    }

    #[test]
    fn up_set_of_a_finite_point_is_compact_and_saturated() {
        let k = CompactSatRep::upper_of(SpaceId::Johnstone, &[p("(1,1)")]).unwrap();
        assert!(k.is_compact().compact);
        assert!(k.contains(&p("(1,5)")));
        assert!(k.contains(&p("(7,ω)")));
        assert!(!k.contains(&p("(0,ω)")));
        assert!(!k.contains(&p("(2,1)")));
        assert!(saturated_on_fragment(&k.to_set(), 8));
    }

    #[test]
    fn cofinite_subsets_are_compact() {
        let c = CompactSatRep::new(SpaceId::CofiniteNat, CompactForm::Subset { nat: NatSet::cofinite([3]), top: false })
            .unwrap();
        assert!(c.is_compact().compact);
        let e = CompactSatRep::new(SpaceId::CofiniteNat, CompactForm::Subset { nat: NatSet::empty(), top: false });
        assert_eq!(e, Err(Error::EmptySet));
        let t = CompactSatRep::new(SpaceId::CofiniteNatTop, CompactForm::Subset { nat: NatSet::finite([2]), top: false });
        assert!(t.is_err());
    }

    #[test]
    fn infinite_row_has_a_cover_without_finite_subcover() {
        let k = CompactSatRep::new(SpaceId::Johnstone, CompactForm::UpperOfRow { row: 2, columns: NatSet::from(1) })
            .unwrap();
        let v = k.is_compact();
        assert!(!v.compact);
        let cover = v.cover.unwrap();
        let set = k.to_set();
        for (n, (c, m)) in cover.complements.iter().zip(&cover.missed).enumerate() {
            assert!(set.contains(m) && c.contains(m), "U_{n} misses {m}");
            if let Some(next) = cover.complements.get(n + 1) {
                assert!(next.is_subset(c).unwrap());
            }
        }
        assert!(saturated_on_fragment(&set, 8));
        for q in set.members_in_fragment(WINDOW - 1) {
            let covered_late = cover.complements.iter().any(|c| !c.contains(&q));
            assert!(covered_late, "{q} is covered by some U_n");
        }
    }

    #[test]
    fn upper_sets_in_nat_spaces() {
        let k = CompactSatRep::upper_of(SpaceId::NatAbc, &[p("c"), p("a"), p("5")]).unwrap();
        assert_eq!(k.form, CompactForm::UpperOf { points: vec![p("5")] });
        assert!(k.contains(&p("b")));
        let q = CompactSatRep::upper_of(SpaceId::NatAb, &[p("a"), p("b")]).unwrap();
        assert!(!q.contains(&p("7")));
    }
}

//! Irreducibility of closed sets, decided from the normal form.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::{closure, ClosedForm, ClosedSetRep, Column, Family, JForm, Level, Point, SpaceId, Special};
use crate::error::{Error, Result};

/// Default description bound for Johnstone enumerations.
pub const JOHNSTONE_BOUND: u64 = 6;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "verdict")]
pub enum Irreducibility {
    /// The closure of a single point.
    Principal { point: Point },
    /// Irreducible without a generic point.
    NonPrincipal,
    /// Two proper closed subsets covering the set.
    Reducible { left: ClosedSetRep, right: ClosedSetRep },
}

impl Irreducibility {
    pub fn is_irreducible(&self) -> bool {
        !matches!(self, Irreducibility::Reducible { .. })
    }
}

fn principal(point: Point) -> Result<Irreducibility> {
    Ok(Irreducibility::Principal { point })
}

fn split(space: SpaceId, left: ClosedForm, right: ClosedForm) -> Result<Irreducibility> {
    Ok(Irreducibility::Reducible {
        left: ClosedSetRep::new(space, left)?,
        right: ClosedSetRep::new(space, right)?,
    })
}

/// Decides irreducibility from the maximal generators of the normal form.
pub fn irreducible(rep: &ClosedSetRep) -> Result<Irreducibility> {
    let space = rep.space;
    match (&rep.form, space) {
        (ClosedForm::Empty, _) => Err(Error::EmptySet),
        (ClosedForm::Whole, s) if s.has_top() => principal(Point::TOP),
        (ClosedForm::Segment { n }, _) => principal(Point::Nat(*n)),
        (ClosedForm::Below { point }, _) => principal(Point::Special(*point)),
        (ClosedForm::Naturals | ClosedForm::Base, _) => Ok(Irreducibility::NonPrincipal),
        (ClosedForm::Whole, SpaceId::NatChain | SpaceId::Johnstone | SpaceId::CofiniteNat) => {
            Ok(Irreducibility::NonPrincipal)
        }
        (ClosedForm::Whole, _) => {
            split(space, ClosedForm::Below { point: Special::A }, ClosedForm::Below { point: Special::B })
        }
        (ClosedForm::Finite { points }, _) => {
            let mut rest = points.clone();
            let first = rest.pop_first().expect("nonempty");
            if rest.is_empty() {
                principal(Point::Nat(first))
            } else {
                split(space, ClosedForm::Finite { points: BTreeSet::from([first]) }, ClosedForm::Finite { points: rest })
            }
        }
        (ClosedForm::Johnstone(f), _) => johnstone(space, f),
    }
}

fn johnstone(space: SpaceId, f: &JForm) -> Result<Irreducibility> {
    let omegas = f.omega_columns();
    if f.floor >= 0 && !omegas.contains(&(f.floor as u64)) {
        // Infinitely many columns reach the floor and none of them is forced by
        // an ω-column: peel off one of them.
        let m = (0..).find(|j| !f.columns.contains_key(j)).expect("finitely many listed columns");
        let top = Point::J(m, Level::Fin(f.floor as u64));
        let mut lowered = f.columns.clone();
        lowered.insert(m, Column::Height(f.floor - 1));
        return Ok(Irreducibility::Reducible {
            left: ClosedSetRep::point_closure(space, &top)?,
            right: ClosedSetRep::new(space, ClosedForm::Johnstone(JForm::new(f.floor, lowered)?))?,
        });
    }
    // Otherwise the listed columns are the maximal points.
    let generators: Vec<Point> = f
        .columns
        .iter()
        .map(|(&j, &c)| match c {
            Column::Omega => Point::J(j, Level::Omega),
            Column::Height(h) => Point::J(j, Level::Fin(h as u64)),
        })
        .collect();
    match generators.as_slice() {
        [] => unreachable!("nonempty form has a generator"),
        [g] => principal(*g),
        [g, rest @ ..] => {
            let left = ClosedSetRep::point_closure(space, g)?;
            let mut right = ClosedSetRep::empty(space);
            for p in rest {
                right = right.union(&ClosedSetRep::point_closure(space, p)?)?;
            }
            Ok(Irreducibility::Reducible { left, right })
        }
    }
}

/// Searches the fragment of level `n` for a point `p` with `A = ↓p ∪ cl(A ∖ ↓p)`
/// and both parts proper.
pub fn split_search(rep: &ClosedSetRep, n: u64) -> Result<Option<(ClosedSetRep, ClosedSetRep)>> {
    let space = rep.space;
    let set = rep.to_set();
    for p in set.members_in_fragment(n) {
        let left = ClosedSetRep::point_closure(space, &p)?;
        if left == *rep {
            continue;
        }
        let right = closure(&set.difference(&left.to_set())?);
        if right != *rep {
            return Ok(Some((left, right)));
        }
    }
    Ok(None)
}

/// Johnstone closed forms with column indices and heights below `bound`, of
/// description size at most `bound`. The size of a form is `floor + 1` plus
/// the number of ω-columns plus the distance of each listed height from the floor.
pub fn johnstone_forms(bound: u64) -> Vec<JForm> {
    let b = bound as i64;
    let mut out = Vec::new();
    for floor in -1..b {
        let budget = b - (floor + 1);
        let max_omega = floor.min(b - 1);
        let omega_candidates: Vec<u64> = (0..=max_omega).map(|j| j as u64).collect();
        for pick in 0u64..(1 << omega_candidates.len()) {
            let omegas: Vec<u64> =
                omega_candidates.iter().copied().filter(|&j| pick >> j & 1 == 1).collect();
            let used = omegas.len() as i64;
            if used > budget {
                continue;
            }
            let omega_max = omegas.last().map_or(-1, |&j| j as i64);
            let mut columns: BTreeMap<u64, Column> = omegas.iter().map(|&j| (j, Column::Omega)).collect();
            let free: Vec<u64> = (0..bound).filter(|j| !columns.contains_key(j)).collect();
            heights(&free, 0, floor, omega_max, b, budget - used, &mut columns, &mut out);
        }
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn heights(
    free: &[u64],
    i: usize,
    floor: i64,
    omega_max: i64,
    b: i64,
    budget: i64,
    columns: &mut BTreeMap<u64, Column>,
    out: &mut Vec<JForm>,
) {
    if i == free.len() {
        if let Ok(f) = JForm::new(floor, columns.clone()) {
            out.push(f);
        }
        return;
    }
    heights(free, i + 1, floor, omega_max, b, budget, columns, out);
    for h in omega_max.max(-1)..b {
        let cost = (h - floor).abs();
        if h == floor || cost > budget {
            continue;
        }
        columns.insert(free[i], Column::Height(h));
        heights(free, i + 1, floor, omega_max, b, budget - cost, columns, out);
        columns.remove(&free[i]);
    }
}

/// Closed sets of `space` with descriptions below `bound`, empty set first.
pub fn closed_catalog(space: SpaceId, bound: u64) -> Vec<ClosedSetRep> {
    let mut forms = vec![ClosedForm::Empty];
    match space.family() {
        Family::NatLike => {
            forms.extend((0..bound).map(|n| ClosedForm::Segment { n }));
            if space == SpaceId::NatAb {
                forms.push(ClosedForm::Naturals);
            }
            if matches!(space, SpaceId::NatAb | SpaceId::NatAbc) {
                forms.extend(space.specials().iter().map(|&point| ClosedForm::Below { point }));
            }
        }
        Family::Cofinite => {
            for mask in 1u64..(1 << bound) {
                let points = (0..bound).filter(|i| mask >> i & 1 == 1).collect();
                forms.push(ClosedForm::Finite { points });
            }
        }
        Family::Johnstone => forms.extend(johnstone_forms(bound).into_iter().map(ClosedForm::Johnstone)),
    }
    if space.has_top() && space.family() != Family::NatLike {
        forms.push(ClosedForm::Base);
    }
    forms.push(ClosedForm::Whole);
    forms.into_iter().map(|form| ClosedSetRep::new(space, form).expect("catalog forms are valid")).collect()
}

/// Irreducible closed sets in the catalog that are not point closures.
pub fn irc_extras(space: SpaceId, bound: u64) -> Result<Vec<ClosedSetRep>> {
    let mut out = Vec::new();
    for rep in closed_catalog(space, bound).into_iter().skip(1) {
        if irreducible(&rep)? == Irreducibility::NonPrincipal {
            out.push(rep);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Point {
        s.parse().unwrap()
    }

    #[test]
    fn johnstone_examples() {
        let j = SpaceId::Johnstone;
        assert_eq!(irreducible(&ClosedSetRep::whole(j)).unwrap(), Irreducibility::NonPrincipal);
        let d = ClosedSetRep::point_closure(j, &p("(3,ω)")).unwrap();
        assert_eq!(irreducible(&d).unwrap(), Irreducibility::Principal { point: p("(3,ω)") });
        let floor2 = ClosedSetRep::new(j, ClosedForm::Johnstone(JForm::floor_set(2))).unwrap();
        let Irreducibility::Reducible { left, right } = irreducible(&floor2).unwrap() else {
            panic!("floor set splits")
        };
        assert_eq!(left.union(&right).unwrap(), floor2);
        assert_ne!(left, floor2);
        assert_ne!(right, floor2);
    }

    #[test]
    fn every_decision_matches_the_split_search() {
        for space in SpaceId::ALL {
            for rep in closed_catalog(space, 4).into_iter().skip(1) {
                let decided = irreducible(&rep).unwrap();
                let found = split_search(&rep, 6).unwrap();
                assert_eq!(decided.is_irreducible(), found.is_none(), "{space}: {rep}");
                if let Irreducibility::Reducible { left, right } = &decided {
                    assert_eq!(left.union(right).unwrap(), rep);
                    assert!(left.is_subset(&rep).unwrap() && *left != rep);
                    assert!(right.is_subset(&rep).unwrap() && *right != rep);
                }
                if let Irreducibility::Principal { point } = &decided {
                    assert_eq!(ClosedSetRep::point_closure(space, point).unwrap(), rep);
                }
            }
        }
    }

    #[test]
    fn extras_per_space() {
        let extras = |s| irc_extras(s, 4).unwrap();
        assert_eq!(extras(SpaceId::NatChain), vec![ClosedSetRep::whole(SpaceId::NatChain)]);
        assert!(extras(SpaceId::NatTop).is_empty());
        assert!(extras(SpaceId::NatAbc).is_empty());
        assert_eq!(extras(SpaceId::NatAb), vec![ClosedSetRep::new(SpaceId::NatAb, ClosedForm::Naturals).unwrap()]);
        assert_eq!(extras(SpaceId::Johnstone), vec![ClosedSetRep::whole(SpaceId::Johnstone)]);
        assert_eq!(extras(SpaceId::CofiniteNatTop), vec![ClosedSetRep::new(SpaceId::CofiniteNatTop, ClosedForm::Base).unwrap()]);
    }

    #[test]
    fn form_enumeration_is_duplicate_free() {
        let forms = johnstone_forms(4);
        let unique: std::collections::HashSet<_> = forms.iter().collect();
        assert_eq!(unique.len(), forms.len());
        assert!(forms.contains(&JForm::floor_set(3)));
    }
}

//! Filtered families of compact saturated sets that break well-filteredness.

use serde::Serialize;

use super::{
    ClosedForm, ClosedSetRep, CompactForm, CompactSatRep, NatSet, Point, SpaceId, SymbolicSet,
};
use crate::error::{Error, Result};

/// Index sets `F` range over the subsets of `{0, .., WINDOW - 1}`.
pub const WINDOW: u64 = 8;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Clause {
    pub name: &'static str,
    pub statement: String,
    pub passed: bool,
    pub checked: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WfWitness {
    pub space: SpaceId,
    pub family: String,
    /// The open set, given by its closed complement.
    pub open: String,
    pub open_complement: ClosedSetRep,
    pub intersection: String,
    pub clauses: Vec<Clause>,
    /// Why the finite checks extend to every finite index set.
    pub general_argument: String,
}

impl WfWitness {
    pub fn verified(&self) -> bool {
        self.clauses.iter().all(|c| c.passed)
    }
}

struct Scheme {
    family: &'static str,
    member: fn(SpaceId, &[u64]) -> Result<CompactSatRep>,
    intersection: fn(SpaceId) -> SymbolicSet,
    open_complement: ClosedForm,
    open: &'static str,
    general: &'static str,
}

fn cofinite_member(space: SpaceId, f: &[u64]) -> Result<CompactSatRep> {
    CompactSatRep::new(
        space,
        CompactForm::Subset { nat: NatSet::cofinite(f.iter().copied()), top: space.has_top() },
    )
}

fn johnstone_member(space: SpaceId, f: &[u64]) -> Result<CompactSatRep> {
    CompactSatRep::new(
        space,
        CompactForm::Maximal { columns: NatSet::cofinite(f.iter().copied()), top: space.has_top() },
    )
}

fn chain_member(space: SpaceId, f: &[u64]) -> Result<CompactSatRep> {
    let start = f.iter().max().map_or(0, |m| m + 1);
    CompactSatRep::upper_of(space, &[Point::Nat(start)])
}

fn only_top(space: SpaceId) -> SymbolicSet {
    let pts: &[Point] = if space.has_top() { &[Point::TOP] } else { &[] };
    SymbolicSet::from_points(space, pts).expect("valid points")
}

fn specials_only(space: SpaceId) -> SymbolicSet {
    SymbolicSet::nat(space, NatSet::empty(), space.specials()).expect("nat space")
}

fn scheme(space: SpaceId) -> Result<Scheme> {
    let top_open = if space.has_top() { ClosedForm::Base } else { ClosedForm::Whole };
    let open = if space.has_top() { "{⊤}" } else { "∅" };
    Ok(match space {
        SpaceId::CofiniteNat | SpaceId::CofiniteNatTop => Scheme {
            family: "X ∖ F for finite F",
            member: cofinite_member,
            intersection: only_top,
            open_complement: top_open,
            open,
            general: "every point n lies outside the member for F = {n}; members for F ⊆ G satisfy \
                      K_G ⊆ K_F, so K_{F∪G} is a common lower bound; each member is infinite, so no \
                      member fits inside the open set",
        },
        SpaceId::Johnstone | SpaceId::JohnstoneTop => Scheme {
            family: "ω-points of the columns outside F, for finite F",
            member: johnstone_member,
            intersection: only_top,
            open_complement: top_open,
            open,
            general: "the ω-point of column j is removed by F = {j} and no member holds a finite point; \
                      K_{F∪G} lies below K_F and K_G; every member keeps infinitely many ω-points, so \
                      none fits inside the open set",
        },
        SpaceId::NatChain | SpaceId::NatAb => Scheme {
            family: "↑(max F + 1) for finite F",
            member: chain_member,
            intersection: specials_only,
            open_complement: if space == SpaceId::NatAb { ClosedForm::Naturals } else { ClosedForm::Whole },
            open: if space == SpaceId::NatAb { "{a,b}" } else { "∅" },
            general: "n is missing from the member for F = {n}; the member for F ∪ G is the smaller of \
                      the two; every member contains naturals, which the open set avoids",
        },
        SpaceId::NatTop | SpaceId::NatAbc => {
            return Err(Error::NoneKnown(format!("{space} is sober, hence well-filtered")));
        }
    })
}

fn index_sets() -> impl Iterator<Item = Vec<u64>> {
    (0u64..1 << WINDOW).map(|mask| (0..WINDOW).filter(|i| mask >> i & 1 == 1).collect())
}

/// Builds the family for `space` and checks the four clauses on every index set inside the window.
pub fn wf_witness(space: SpaceId) -> Result<WfWitness> {
    let s = scheme(space)?;
    let open_complement = ClosedSetRep::new(space, s.open_complement.clone())?;
    let open_set = open_complement.to_set().complement();
    let members: Vec<(Vec<u64>, CompactSatRep, SymbolicSet)> = index_sets()
        .map(|f| {
            let k = (s.member)(space, &f)?;
            let set = k.to_set();
            Ok((f, k, set))
        })
        .collect::<Result<_>>()?;

    let mut clauses = Vec::new();

    let bad_a = members.iter().find(|(_, k, set)| set.is_empty() || !k.is_compact().compact);
    clauses.push(Clause {
        name: "compact",
        statement: "each member is a nonempty compact saturated set".into(),
        passed: bad_a.is_none(),
        checked: members.len() as u64,
        failure: bad_a.map(|(f, k, _)| format!("F = {f:?}: {k}")),
    });

    let mut checked = 0u64;
    let mut bad_b = None;
    let by_mask = |f: &[u64]| f.iter().fold(0usize, |acc, &i| acc | 1 << i);
    'pairs: for (f1, _, s1) in &members {
        for (f2, _, s2) in &members {
            checked += 1;
            let lower = &members[by_mask(f1) | by_mask(f2)].2;
            if !(lower.is_subset(s1)? && lower.is_subset(s2)?) {
                bad_b = Some(format!("F = {f1:?}, G = {f2:?}"));
                break 'pairs;
            }
        }
    }
    clauses.push(Clause {
        name: "filtered",
        statement: "the member for F ∪ G lies inside the members for F and for G".into(),
        passed: bad_b.is_none(),
        checked,
        failure: bad_b,
    });

    // The intersection over all finite F, checked two ways: the claimed set is
    // inside every member, and every other point of the fragment is dropped by
    // some member.
    let claimed = (s.intersection)(space);
    let mut checked = 0u64;
    let mut bad_c = None;
    if !claimed.is_subset(&open_set)? {
        bad_c = Some(format!("{claimed} is not inside {}", s.open));
    }
    for (f, _, set) in &members {
        checked += 1;
        if bad_c.is_none() && !claimed.is_subset(set)? {
            bad_c = Some(format!("member for F = {f:?} misses part of {claimed}"));
        }
    }
    for x in super::fragment(space, WINDOW) {
        if claimed.contains(&x) {
            continue;
        }
        checked += 1;
        let killed = members.iter().any(|(_, _, set)| !set.contains(&x));
        if !killed && bad_c.is_none() {
            bad_c = Some(format!("{x} lies in every member"));
        }
    }
    clauses.push(Clause {
        name: "intersection-inside-open",
        statement: format!("the intersection of the family is {claimed}, inside the open set {}", s.open),
        passed: bad_c.is_none(),
        checked,
        failure: bad_c,
    });

    let mut bad_d = None;
    for (f, _, set) in &members {
        if set.is_subset(&open_set)? {
            bad_d = Some(format!("member for F = {f:?}"));
            break;
        }
    }
    clauses.push(Clause {
        name: "no-member-inside-open",
        statement: format!("no member lies inside {}", s.open),
        passed: bad_d.is_none(),
        checked: members.len() as u64,
        failure: bad_d,
    });

    Ok(WfWitness {
        space,
        family: s.family.into(),
        open: s.open.into(),
        open_complement,
        intersection: claimed.to_string(),
        clauses,
        general_argument: s.general.into(),
    })
}

use std::collections::BTreeSet;

use super::constructions::open_topology;
use super::{ContinuousMap, FiniteSpace};
use crate::error::{Error, Result};
use crate::subset::Subset;

/// `P_H(𝒢)`: a family of nonempty closed sets with the topology generated by `◇U = {G : G ∩ U ≠ ∅}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HoareSpace {
    pub space: FiniteSpace,
    /// `members[i]` is the closed set of the base space named by point `i`.
    pub members: Vec<Subset>,
}

pub fn hoare_space(x: &FiniteSpace, family: &[Subset]) -> Result<HoareSpace> {
    if family.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut distinct = BTreeSet::new();
    for &g in family {
        if g.is_empty() {
            return Err(Error::EmptyMember);
        }
        if !x.is_closed(g) {
            return Err(Error::NotClosed(x.show(g)));
        }
        distinct.insert(g);
    }
    let mut named: Vec<(String, Subset)> = distinct.into_iter().map(|g| (x.show(g), g)).collect();
    named.sort();
    let labels: Vec<String> = named.iter().map(|(l, _)| l.clone()).collect();
    let members: Vec<Subset> = named.iter().map(|&(_, g)| g).collect();
    let diamonds: Vec<Subset> = x
        .open_sets()
        .into_iter()
        .map(|u| Subset::from_indices(members.iter().enumerate().filter(|(_, g)| g.intersects(u)).map(|(i, _)| i)))
        .collect();
    let space = open_topology(labels, &diamonds);
    Ok(HoareSpace { space, members })
}

impl HoareSpace {
    pub fn point_of(&self, g: Subset) -> Option<usize> {
        self.members.iter().position(|&m| m == g)
    }

    /// `□C`: the members inside `c`.
    pub fn box_of(&self, c: Subset) -> Subset {
        Subset::from_indices(self.members.iter().enumerate().filter(|(_, m)| m.is_subset(c)).map(|(i, _)| i))
    }

    /// `x ↦ cl{x}`, defined when every point closure is a member.
    pub fn canonical_map(&self, x: &FiniteSpace) -> Result<ContinuousMap> {
        let graph = (0..x.len())
            .map(|p| {
                self.point_of(x.point_closure(p))
                    .ok_or_else(|| Error::HypothesisFailed(format!("cl{{{}}} is not in the family", x.label(p))))
            })
            .collect::<Result<Vec<_>>>()?;
        ContinuousMap::new(x.clone(), self.space.clone(), graph)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topology::{check, find_homeomorphism, Property};

    #[test]
    fn sierpinski_family_gives_sierpinski() {
        let s = FiniteSpace::sierpinski();
        let h = hoare_space(&s, &[Subset::singleton(0), Subset::full(2)]).unwrap();
        assert!(find_homeomorphism(&h.space, &s).unwrap().is_some());
        let eta = h.canonical_map(&s).unwrap();
        assert!(eta.is_homeomorphism());
    }

    #[test]
    fn specialization_is_inclusion() {
        let d = FiniteSpace::discrete(3);
        let all: Vec<Subset> = d.closed_sets().iter().copied().filter(|c| !c.is_empty()).collect();
        let h = hoare_space(&d, &all).unwrap();
        let spec = h.space.specialization();
        for i in 0..h.members.len() {
            for j in 0..h.members.len() {
                assert_eq!(spec.leq(i, j), h.members[i].is_subset(h.members[j]));
            }
        }
        assert!(check(&h.space, Property::Sober).unwrap().holds);
        assert!(h.canonical_map(&d).unwrap().is_embedding());
    }

    #[test]
    fn rejects_bad_members() {
        let s = FiniteSpace::sierpinski();
        assert_eq!(hoare_space(&s, &[Subset::EMPTY]).unwrap_err(), Error::EmptyMember);
        assert!(matches!(hoare_space(&s, &[Subset::singleton(1)]), Err(Error::NotClosed(_))));
        assert_eq!(hoare_space(&s, &[]).unwrap_err(), Error::EmptySet);
    }
}

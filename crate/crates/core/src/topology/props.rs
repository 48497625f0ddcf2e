//! Sobriety, well-filteredness and the d-space property, decided exhaustively.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::FiniteSpace;
use crate::error::{Error, Result};
use crate::limits;
use crate::subset::Subset;

/// Largest `𝖪(X)` the well-filteredness search accepts.
pub const WF_CAP: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    Sober,
    WellFiltered,
    DSpace,
}

impl Property {
    pub const ALL: [Property; 3] = [Property::Sober, Property::WellFiltered, Property::DSpace];

    pub fn name(self) -> &'static str {
        match self {
            Property::Sober => "sober",
            Property::WellFiltered => "well-filtered",
            Property::DSpace => "d-space",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sober" => Ok(Property::Sober),
            "well-filtered" | "well_filtered" | "wf" => Ok(Property::WellFiltered),
            "d-space" | "d_space" | "dspace" => Ok(Property::DSpace),
            other => Err(Error::Parse(format!("unknown property `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PropertyCheck {
    pub property: Property,
    pub holds: bool,
    pub counts: BTreeMap<String, u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

/// Nonempty compact saturated sets under the Smyth order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompactSatFamily {
    pub members: Vec<Subset>,
}

impl CompactSatFamily {
    /// `K₁ ⊑ K₂` iff `K₂ ⊆ K₁`.
    pub fn smyth_leq(a: Subset, b: Subset) -> bool {
        b.is_subset(a)
    }

    pub fn smyth_maximum(&self) -> Option<Subset> {
        self.members
            .iter()
            .copied()
            .find(|&m| self.members.iter().all(|&k| Self::smyth_leq(k, m)))
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

impl FiniteSpace {
    /// Every open cover of `a` has a finite subcover. The open family of a
    /// finite space is finite, so each cover is its own finite subcover.
    pub fn is_compact(&self, a: Subset) -> bool {
        a.is_subset(self.all())
    }

    /// Literal cover check: every subfamily of opens covering `a` contains a
    /// subcover with at most `|a|` members. Exponential in the number of opens.
    pub fn is_compact_by_covers(&self, a: Subset) -> Result<bool> {
        let opens = self.open_sets();
        limits::ensure("open-cover enumeration", opens.len(), 16)?;
        for pick in Subset::all(opens.len()) {
            let cover: Vec<Subset> = pick.iter().map(|i| opens[i]).collect();
            let union = cover.iter().fold(Subset::EMPTY, |acc, &u| acc | u);
            if !a.is_subset(union) {
                continue;
            }
            let sub: Vec<Subset> = a
                .iter()
                .map(|x| *cover.iter().find(|u| u.contains(x)).expect("covered"))
                .collect();
            let sub_union = sub.iter().fold(Subset::EMPTY, |acc, &u| acc | u);
            if !(sub.len() <= a.len() && a.is_subset(sub_union)) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `𝖪(X)`: nonempty saturated sets (all compact here), in canonical order.
    pub fn compact_saturated(&self) -> Result<CompactSatFamily> {
        limits::ensure_carrier("saturated-set enumeration", self.len())?;
        let members = Subset::all(self.len())
            .filter(|&a| !a.is_empty() && self.is_saturated(a) && self.is_compact(a))
            .collect::<Vec<_>>();
        let mut members = members;
        members.sort();
        Ok(CompactSatFamily { members })
    }
}

pub fn check(x: &FiniteSpace, property: Property) -> Result<PropertyCheck> {
    match property {
        Property::Sober => Ok(check_sober(x)),
        Property::WellFiltered => check_well_filtered(x),
        Property::DSpace => check_d_space(x),
    }
}

fn check_sober(x: &FiniteSpace) -> PropertyCheck {
    let irr = x.irreducibles();
    let closures = x.point_closures();
    let bad = irr.iter().find(|a| closures.iter().filter(|c| c == a).count() != 1);
    PropertyCheck {
        property: Property::Sober,
        holds: bad.is_none(),
        counts: BTreeMap::from([
            ("closed_sets".to_string(), x.closed_sets().len() as u64),
            ("irreducibles".to_string(), irr.len() as u64),
        ]),
        witness: bad.map(|&a| json!({ "irreducible": x.labels_of(a) })),
    }
}

/// Only Smyth-down-closed filtered families need testing: closing a failing
/// family downward keeps its intersection and keeps every member outside `U`.
/// Such families are the down-closures of antichains.
fn check_well_filtered(x: &FiniteSpace) -> Result<PropertyCheck> {
    let k = x.compact_saturated()?.members;
    limits::ensure("compact saturated family", k.len(), WF_CAP)?;
    let opens = x.open_sets();
    let m = k.len();
    let comparable: Vec<u64> = (0..m)
        .map(|i| {
            (0..m)
                .filter(|&j| k[i].is_subset(k[j]) || k[j].is_subset(k[i]))
                .fold(0u64, |acc, j| acc | 1 << j)
        })
        .collect();
    let mut counts = BTreeMap::from([
        ("compact_saturated".to_string(), m as u64),
        ("opens".to_string(), opens.len() as u64),
        ("antichains".to_string(), 0u64),
        ("filtered_families".to_string(), 0u64),
    ]);
    let mut witness = None;
    let mut stack: Vec<(u64, usize, u64)> = vec![(0, 0, 0)];
    while let Some((chosen, start, blocked)) = stack.pop() {
        if chosen != 0 {
            *counts.get_mut("antichains").unwrap() += 1;
            let gens: Vec<Subset> = (0..m).filter(|&i| chosen >> i & 1 == 1).map(|i| k[i]).collect();
            let family: Vec<Subset> = k.iter().copied().filter(|&c| gens.iter().any(|&g| g.is_subset(c))).collect();
            // Every member contains a generator, so pairs of generators decide filteredness.
            let filtered =
                gens.iter().all(|&a| gens.iter().all(|&b| family.iter().any(|&c| c.is_subset(a & b))));
            if filtered {
                *counts.get_mut("filtered_families").unwrap() += 1;
                let meet = family.iter().fold(x.all(), |acc, &c| acc & c);
                if let Some(&u) = opens.iter().find(|&&u| meet.is_subset(u) && !family.iter().any(|c| c.is_subset(u))) {
                    witness = Some(json!({
                        "family": family.iter().map(|&c| x.labels_of(c)).collect::<Vec<_>>(),
                        "open": x.labels_of(u),
                    }));
                    break;
                }
            }
        }
        for i in (start..m).rev() {
            if blocked >> i & 1 == 0 {
                stack.push((chosen | 1 << i, i + 1, blocked | comparable[i]));
            }
        }
    }
    Ok(PropertyCheck { property: Property::WellFiltered, holds: witness.is_none(), counts, witness })
}

fn check_d_space(x: &FiniteSpace) -> Result<PropertyCheck> {
    let spec = x.specialization();
    let directed = spec.directed_subsets()?;
    let no_sup = directed.iter().find(|&&d| spec.sup(d).is_none());
    let opens = x.open_sets();
    let not_scott = opens.iter().find(|&&u| {
        directed.iter().any(|&d| spec.sup(d).is_some_and(|s| u.contains(s)) && !d.intersects(u))
    });
    let witness = match (no_sup, not_scott) {
        (Some(&d), _) => Some(json!({ "directed_without_sup": x.labels_of(d) })),
        (None, Some(&u)) => Some(json!({ "open_not_scott_open": x.labels_of(u) })),
        (None, None) => None,
    };
    Ok(PropertyCheck {
        property: Property::DSpace,
        holds: witness.is_none(),
        counts: BTreeMap::from([
            ("directed_sets".to_string(), directed.len() as u64),
            ("opens".to_string(), opens.len() as u64),
        ]),
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::FinitePoset;
    use crate::topology::alexandroff;

    #[test]
    fn sierpinski_has_all_three() {
        let s = FiniteSpace::sierpinski();
        for p in Property::ALL {
            assert!(check(&s, p).unwrap().holds, "{p}");
        }
    }

    #[test]
    fn diamond_has_all_three() {
        let d = FinitePoset::new(&["0", "a", "b", "1"], &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")]).unwrap();
        let x = alexandroff(&d);
        for p in Property::ALL {
            let c = check(&x, p).unwrap();
            assert!(c.holds, "{p}");
        }
        let wf = check(&x, Property::WellFiltered).unwrap();
        assert_eq!(wf.counts["compact_saturated"], 5);
    }

    #[test]
    fn compact_saturated_of_sierpinski() {
        let s = FiniteSpace::sierpinski();
        let k = s.compact_saturated().unwrap();
        assert_eq!(k.members, vec![Subset::singleton(1), Subset::full(2)]);
        assert_eq!(k.smyth_maximum(), Some(Subset::singleton(1)));
        assert!(CompactSatFamily::smyth_leq(Subset::full(2), Subset::singleton(1)));
    }

    #[test]
    fn discrete_compact_saturated_is_every_nonempty_subset() {
        let d = FiniteSpace::discrete(3);
        assert_eq!(d.compact_saturated().unwrap().len(), 7);
        for a in Subset::all(3) {
            assert!(d.is_compact_by_covers(a).unwrap());
        }
    }

    #[test]
    fn property_names_parse() {
        for p in Property::ALL {
            assert_eq!(p.name().parse::<Property>().unwrap(), p);
        }
        assert!("compact".parse::<Property>().is_err());
    }
}

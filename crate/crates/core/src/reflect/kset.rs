use serde::Serialize;

use super::KindTag;
use crate::error::{Error, Result};
use crate::subset::Subset;
use crate::topology::{check, FiniteSpace};

/// Why a K-set family is known exactly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Justification {
    /// Finite space: directed closures and irreducibles coincide.
    FiniteCollapse,
    /// The two ends of the interval coincide.
    SandwichCollapse,
    /// Sober sets are exactly the irreducible closed sets.
    SobIsIrc,
    /// The space is itself a K-space, so only point closures are K-sets.
    KSpace,
    /// Irreducibles are the point closures plus the whole space, and the
    /// space is not a K-space, so the whole space is a K-set too.
    Characterization,
}

/// `𝒮_c ⊆ 𝒟_c ⊆ K(X) ⊆ ir_c` for a finite space, each family sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KSetInterval {
    pub kind: KindTag,
    pub point_closures: Vec<Subset>,
    pub lower: Vec<Subset>,
    pub upper: Vec<Subset>,
    pub resolved: Option<(Vec<Subset>, Justification)>,
}

fn included(a: &[Subset], b: &[Subset]) -> bool {
    a.iter().all(|x| b.contains(x))
}

pub fn kset_interval(x: &FiniteSpace, kind: KindTag) -> Result<KSetInterval> {
    let mut point_closures = x.point_closures();
    point_closures.sort();
    point_closures.dedup();
    let lower = x.directed_closures()?;
    let mut upper = x.irreducibles();
    upper.sort();
    assert!(included(&point_closures, &lower), "point closures are closures of directed singletons");
    assert!(included(&lower, &upper), "directed closures are irreducible");

    let resolved = if lower == upper {
        Some((lower.clone(), Justification::FiniteCollapse))
    } else if kind == KindTag::Sob {
        Some((upper.clone(), Justification::SobIsIrc))
    } else if check(x, kind.property())?.holds {
        Some((point_closures.clone(), Justification::KSpace))
    } else {
        None
    };
    if let Some((family, _)) = &resolved {
        if !(included(&lower, family) && included(family, &upper)) {
            return Err(Error::HypothesisFailed("resolved family leaves the interval".into()));
        }
    }
    Ok(KSetInterval { kind, point_closures, lower, upper, resolved })
}

impl KSetInterval {
    pub fn resolved_family(&self) -> Result<&[Subset]> {
        self.resolved
            .as_ref()
            .map(|(f, _)| f.as_slice())
            .ok_or_else(|| Error::Unresolved(format!("K-sets for kind {} lie strictly inside the interval", self.kind)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finite_spaces_collapse() {
        let s = FiniteSpace::sierpinski();
        for kind in KindTag::ALL {
            let k = kset_interval(&s, kind).unwrap();
            assert_eq!(k.lower, k.upper);
            assert_eq!(k.point_closures, k.upper);
            assert_eq!(k.resolved.as_ref().unwrap().1, Justification::FiniteCollapse);
        }
    }
}

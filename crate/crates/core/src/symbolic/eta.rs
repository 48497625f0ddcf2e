//! Continuity of `x ↦ cl{x}` into the Scott space of irreducible closed sets.

use serde::Serialize;

use super::{closed_catalog, is_scott_closed, NatSet, SpaceId, JOHNSTONE_BOUND};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EtaWitness {
    /// A Scott-open set of the target.
    pub open_in_target: String,
    /// Its preimage, which is not open.
    pub preimage: NatSet,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EtaVerdict {
    pub space: SpaceId,
    /// The catalog space whose order is `ir_c` of the source under inclusion.
    pub target: SpaceId,
    pub continuous: bool,
    pub checked: u64,
    pub note: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<EtaWitness>,
}

/// The catalog space isomorphic to `(ir_c(X), ⊆)`.
pub fn irc_target(space: SpaceId) -> Result<SpaceId> {
    match space {
        SpaceId::NatChain => Ok(SpaceId::NatTop),
        SpaceId::NatAb => Ok(SpaceId::NatAbc),
        SpaceId::Johnstone => Ok(SpaceId::JohnstoneTop),
        SpaceId::CofiniteNat => Ok(SpaceId::CofiniteNatTop),
        SpaceId::NatTop | SpaceId::NatAbc => Ok(space),
        SpaceId::JohnstoneTop | SpaceId::CofiniteNatTop => Err(Error::Unresolved(format!(
            "{space} has a non-principal irreducible below its top, so ir_c({space}) is not in the catalog"
        ))),
    }
}

/// Searches closed sets of the target for one whose preimage under `η` is not closed.
pub fn eta_sigma_continuity(space: SpaceId) -> Result<EtaVerdict> {
    let target = irc_target(space)?;
    if space == SpaceId::CofiniteNat {
        return Ok(cofinite(target));
    }
    // η sends each point to its own copy; the extra irreducible maps to the new point,
    // which has no preimage.
    let mut checked = 0;
    for t in closed_catalog(target, JOHNSTONE_BOUND) {
        checked += 1;
        let pre = t.to_set().reinterpret(space)?;
        if !is_scott_closed(&pre) {
            return Err(Error::Unresolved(format!("preimage of {t} is {pre}, which is not closed")));
        }
    }
    Ok(EtaVerdict {
        space,
        target,
        continuous: true,
        checked,
        note: format!("every catalog closed set of {target} pulls back to a closed set of {space}"),
        witness: None,
    })
}

/// Every subset `C` gives the Scott-open `{{x} : x ∈ C} ∪ {X}`, since the
/// singletons are pairwise incomparable under `X`. Its preimage is `C`, which
/// is open only when empty or cofinite.
fn cofinite(target: SpaceId) -> EtaVerdict {
    let candidates = [
        NatSet::periodic(2, &[0]),
        NatSet::periodic(2, &[1]),
        NatSet::periodic(3, &[0]),
        NatSet::cofinite([0]),
        NatSet::finite([0]),
    ];
    let mut checked = 0;
    for c in candidates {
        checked += 1;
        let open = c.is_empty() || c.is_cofinite();
        if !open {
            return EtaVerdict {
                space: SpaceId::CofiniteNat,
                target,
                continuous: false,
                checked,
                note: "the order on ir_c has only trivial directed sets, so every up-set is Scott-open".into(),
                witness: Some(EtaWitness { open_in_target: format!("{{{{x}} : x ∈ {c}}} ∪ {{X}}"), preimage: c }),
            };
        }
    }
    unreachable!("the candidate list holds an infinite coinfinite set")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cofinite_witness_is_the_evens() {
        let v = eta_sigma_continuity(SpaceId::CofiniteNat).unwrap();
        assert!(!v.continuous);
        assert_eq!(v.witness.unwrap().preimage, NatSet::periodic(2, &[0]));
    }

    #[test]
    fn scott_examples_are_continuous() {
        for s in [SpaceId::NatChain, SpaceId::NatAb, SpaceId::Johnstone, SpaceId::NatTop, SpaceId::NatAbc] {
            assert!(eta_sigma_continuity(s).unwrap().continuous, "{s}");
        }
        assert!(matches!(eta_sigma_continuity(SpaceId::JohnstoneTop), Err(Error::Unresolved(_))));
    }
}

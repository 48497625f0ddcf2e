use serde::Serialize;
use serde_json::json;

use super::{k_reflection, KindTag};
use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::order::{FinitePoset, MonotoneMap};
use crate::subset::Subset;
use crate::topology::{check, scott_space, Property};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Variant {
    #[serde(rename = "D_s")]
    Ds,
    #[serde(rename = "Sob_s")]
    SobS,
    #[serde(rename = "WF_s")]
    WfS,
}

impl Variant {
    pub fn of(kind: KindTag) -> Self {
        match kind {
            KindTag::Sob => Variant::SobS,
            KindTag::D => Variant::Ds,
            KindTag::Wf => Variant::WfS,
        }
    }
}

/// A completion `P → P̃` of a finite poset, `map[x]` being the image of `x`.
#[derive(Clone, Debug)]
pub struct Completion {
    pub variant: Variant,
    pub source: FinitePoset,
    pub target: FinitePoset,
    pub map: Vec<usize>,
    /// The down-set of the source that each target point stands for.
    pub members: Vec<Subset>,
    pub evidence: Vec<Certificate>,
}

fn scott_continuous(law: &str, f: &MonotoneMap) -> Result<Certificate> {
    let v = f.scott_continuity_check()?;
    let mut c = Certificate::pass(law).count("directed_sets", v.directed_sets_checked as u64);
    if !v.continuous {
        c.fail(json!(v.witness));
    }
    Ok(c)
}

/// `Id P` under inclusion with `φ(x) = ↓x`.
pub fn d_completion_alexandroff(p: &FinitePoset) -> Result<Completion> {
    let ideals = p.ideals()?;
    let target = ideals.poset(p);
    let map: Vec<usize> = (0..p.len())
        .map(|x| ideals.ideals.iter().position(|&i| i == p.down(x)).expect("principal ideals are ideals"))
        .collect();
    let phi = MonotoneMap::new(p.clone(), target.clone(), map.clone())?;
    let mut algebraic = Certificate::pass("algebraic-domain").count("elements", target.len() as u64);
    if !target.is_algebraic_domain()? {
        algebraic.fail(json!({ "target": target.to_json(false) }));
    }
    let sober = check(&scott_space(&target)?, Property::Sober)?;
    let mut sober_cert = Certificate::pass("scott-sober").count("irreducibles", sober.counts["irreducibles"]);
    if !sober.holds {
        sober_cert.fail(sober.witness.unwrap_or_default());
    }
    let evidence = vec![algebraic, sober_cert, scott_continuous("map-scott-continuous", &phi)?];
    Ok(Completion { variant: Variant::Ds, source: p.clone(), target, map, members: ideals.ideals, evidence })
}

/// `f*(I) = ⋁ f(I)` on `Id P`.
pub fn ideal_extension(f: &MonotoneMap) -> Result<MonotoneMap> {
    let q = f.target();
    if !q.is_dcpo()? {
        return Err(Error::TargetNotDcpo("some directed subset has no supremum".into()));
    }
    let c = d_completion_alexandroff(f.source())?;
    let graph = c
        .members
        .iter()
        .map(|&i| q.sup(f.image(i)).ok_or_else(|| Error::TargetNotDcpo(format!("no supremum for {}", q.show(f.image(i))))))
        .collect::<Result<Vec<_>>>()?;
    let ext = MonotoneMap::new(c.target.clone(), q.clone(), graph)?;
    if (0..f.source().len()).any(|x| ext.apply(c.map[x]) != f.apply(x)) {
        return Err(Error::HypothesisFailed("f* ∘ φ differs from f".into()));
    }
    if !ext.scott_continuity_check()?.continuous {
        return Err(Error::HypothesisFailed("f* is not Scott-continuous".into()));
    }
    Ok(ext)
}

/// `K_s(P) = K(Σ P)` with `x ↦ ↓x`.
pub fn ks_completion(p: &FinitePoset, kind: KindTag) -> Result<Completion> {
    let r = k_reflection(&scott_space(p)?, kind)?;
    let target = r.target.specialization();
    let map = r.eta.graph().to_vec();
    let eta = MonotoneMap::new(p.clone(), target.clone(), map.clone())?;
    let mut evidence = r.evidence.clone();
    evidence.push(scott_continuous("map-scott-continuous", &eta)?);
    Ok(Completion { variant: Variant::of(kind), source: p.clone(), target, map, members: r.members, evidence })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::find_isomorphism;

    #[test]
    fn finite_ideal_completion_is_the_poset() {
        let p = FinitePoset::new(&["a", "b", "c"], &[("a", "c"), ("b", "c")]).unwrap();
        let c = d_completion_alexandroff(&p).unwrap();
        assert!(find_isomorphism(&p, &c.target).unwrap().is_some());
        assert!(c.evidence.iter().all(Certificate::passed));
    }

    #[test]
    fn extension_on_a_chain() {
        let p = FinitePoset::chain(3);
        let f = MonotoneMap::identity(&p);
        let e = ideal_extension(&f).unwrap();
        let c = d_completion_alexandroff(&p).unwrap();
        for k in 0..3 {
            assert_eq!(e.apply(c.map[k]), k);
        }
    }

    #[test]
    fn ks_completion_of_finite_poset_is_itself() {
        let p = FinitePoset::new(&["x", "y", "z"], &[("x", "y")]).unwrap();
        for kind in KindTag::ALL {
            let c = ks_completion(&p, kind).unwrap();
            assert!(find_isomorphism(&p, &c.target).unwrap().is_some());
            assert!(c.evidence.iter().all(Certificate::passed), "{kind}");
        }
    }
}

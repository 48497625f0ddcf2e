use std::collections::HashMap;

use rayon::prelude::*;
use serde_json::json;

use super::{kset_interval, KindTag};
use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::limits;
use crate::order::{unlabeled_posets, FinitePoset};
use crate::subset::Subset;
use crate::topology::{alexandroff, check, continuous_maps, hoare_space, scott_space, ContinuousMap, FiniteSpace};

/// Largest target on which factorings are counted by brute force.
pub const UNIQUENESS_CAP: usize = 5;

/// A reflection `η: X → X^k` whose target points are closed sets of `X`.
#[derive(Clone, Debug)]
pub struct Reflection {
    pub kind: KindTag,
    pub source: FiniteSpace,
    pub target: FiniteSpace,
    /// `members[i]` is the closed set of the source named by target point `i`.
    pub members: Vec<Subset>,
    pub eta: ContinuousMap,
    pub justification: String,
    pub evidence: Vec<Certificate>,
}

fn verdict(law: &str, holds: bool, witness: serde_json::Value) -> Certificate {
    let mut c = Certificate::pass(law).count("checks", 1);
    if !holds {
        c.fail(witness);
    }
    c
}

/// `P_H(K(X))` with `η(x) = cl{x}`.
pub fn k_reflection(x: &FiniteSpace, kind: KindTag) -> Result<Reflection> {
    let ks = kset_interval(x, kind)?;
    let family = ks.resolved_family()?.to_vec();
    let h = hoare_space(x, &family)?;
    let eta = h.canonical_map(x)?;
    let target_check = check(&h.space, kind.property())?;
    let evidence = vec![
        Certificate::pass("eta-continuous").count("closed_sets", h.space.closed_sets().len() as u64),
        verdict("eta-embedding", eta.is_embedding(), json!({ "eta": eta.graph() })),
        verdict(&format!("target-{}", kind.property()), target_check.holds, target_check.witness.clone().into()),
    ];
    let justification = format!("{:?}", ks.resolved.as_ref().expect("resolved").1);
    Ok(Reflection { kind, source: x.clone(), target: h.space, members: h.members, eta, justification, evidence })
}

pub fn sobrify(x: &FiniteSpace) -> Result<Reflection> {
    k_reflection(x, KindTag::Sob)
}

/// `Γ P → Σ Id P` with `x ↦ ↓x`; the ideals are the closed sets of `Γ P` named by the target.
pub fn alexandroff_reflection(p: &FinitePoset, kind: KindTag) -> Result<Reflection> {
    let source = alexandroff(p);
    let ideals = p.ideals()?;
    let target = scott_space(&ideals.poset(p))?;
    let graph = (0..p.len())
        .map(|x| ideals.ideals.iter().position(|&i| i == p.down(x)).expect("principal ideals are ideals"))
        .collect();
    let eta = ContinuousMap::new(source.clone(), target.clone(), graph)?;
    let target_check = check(&target, kind.property())?;
    let evidence = vec![
        Certificate::pass("eta-continuous").count("closed_sets", target.closed_sets().len() as u64),
        verdict(&format!("target-{}", kind.property()), target_check.holds, target_check.witness.clone().into()),
    ];
    Ok(Reflection {
        kind,
        source,
        target,
        members: ideals.ideals,
        eta,
        justification: "ideal-completion".into(),
        evidence,
    })
}

/// The factoring map `f*`, checked against every continuous map `X^k → Y`.
#[derive(Clone, Debug)]
pub struct Extension {
    pub map: ContinuousMap,
    /// Continuous maps out of the target that agree with `f` along `η`; always 1.
    pub factorings: usize,
}

/// `f*(A)` is the point whose closure is `cl f(A)`.
fn formula(r: &Reflection, f: &[usize], y: &FiniteSpace) -> Result<Vec<usize>> {
    r.members
        .iter()
        .map(|&a| {
            let image = Subset::from_indices(a.iter().map(|x| f[x]));
            let c = y.closure(image);
            (0..y.len()).find(|&p| y.point_closure(p) == c).ok_or_else(|| Error::NoUniquePoint(r.source.show(a)))
        })
        .collect()
}

pub fn extend_map(r: &Reflection, f: &ContinuousMap) -> Result<Extension> {
    if f.source() != &r.source {
        return Err(Error::SignatureMismatch);
    }
    let y = f.target();
    if !check(y, crate::topology::Property::Sober)?.holds {
        return Err(Error::TargetNotSober);
    }
    limits::ensure("uniqueness target", y.len(), UNIQUENESS_CAP)?;
    let graph = formula(r, f.graph(), y)?;
    let map = ContinuousMap::new(r.target.clone(), y.clone(), graph)?;
    if (0..r.source.len()).any(|x| map.apply(r.eta.apply(x)) != f.apply(x)) {
        return Err(Error::HypothesisFailed("f* ∘ η differs from f".into()));
    }
    let factorings = continuous_maps(&r.target, y)?
        .into_iter()
        .filter(|g| (0..r.source.len()).all(|x| g[r.eta.apply(x)] == f.apply(x)))
        .count();
    if factorings != 1 {
        return Err(Error::HypothesisFailed(format!("{factorings} maps factor f through η")));
    }
    Ok(Extension { map, factorings })
}

/// Checks existence and uniqueness of factorings through `η` for every map into
/// every finite K-space with at most `max_target` points, up to homeomorphism.
pub fn universal_property_check(r: &Reflection, max_target: usize) -> Result<Certificate> {
    limits::ensure("target size", max_target, UNIQUENESS_CAP)?;
    let targets: Vec<FiniteSpace> = (1..=max_target)
        .map(unlabeled_posets)
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .map(|q| alexandroff(&q))
        .collect();
    let parts: Vec<Result<Certificate>> = targets.par_iter().map(|y| check_target(r, y)).collect();
    let mut cert = Certificate::pass("universal-property");
    for part in parts {
        cert.absorb(&part?);
    }
    Ok(cert)
}

fn check_target(r: &Reflection, y: &FiniteSpace) -> Result<Certificate> {
    let mut cert = Certificate::pass("universal-property");
    if !check(y, r.kind.property())?.holds {
        return Ok(cert.count("skipped_targets", 1));
    }
    cert.add("targets", 1);
    let mut by_restriction: HashMap<Vec<usize>, Vec<Vec<usize>>> = HashMap::new();
    for g in continuous_maps(&r.target, y)? {
        let key = (0..r.source.len()).map(|x| g[r.eta.apply(x)]).collect();
        by_restriction.entry(key).or_default().push(g);
    }
    for f in continuous_maps(&r.source, y)? {
        cert.add("maps", 1);
        let found = by_restriction.get(&f).map_or(&[][..], Vec::as_slice);
        let expected = formula(r, &f, y);
        let ok = found.len() == 1 && expected.as_ref().is_ok_and(|e| *e == found[0]);
        if ok {
            cert.add("factorings", 1);
        } else {
            cert.fail(json!({
                "target": y.to_json(),
                "f": f,
                "factorings": found,
                "formula": expected.ok(),
            }));
        }
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sierpinski_reflects_to_itself() {
        let s = FiniteSpace::sierpinski();
        let r = sobrify(&s).unwrap();
        assert!(r.eta.is_homeomorphism());
        assert!(r.evidence.iter().all(Certificate::passed));
        let id = ContinuousMap::identity(&s);
        let e = extend_map(&r, &id).unwrap();
        assert_eq!(e.factorings, 1);
        assert_eq!(e.map.graph(), r.eta.graph());
    }

    #[test]
    fn discrete_pair() {
        let d = FiniteSpace::discrete(2);
        let r = sobrify(&d).unwrap();
        assert_eq!(r.target.len(), 2);
        assert_eq!(r.target.closed_sets().len(), 4);
    }

    #[test]
    fn constant_map_extends_to_constant() {
        let s = FiniteSpace::sierpinski();
        let r = sobrify(&s).unwrap();
        let f = ContinuousMap::new(s.clone(), s.clone(), vec![1, 1]).unwrap();
        let e = extend_map(&r, &f).unwrap();
        assert!(e.map.graph().iter().all(|&v| v == 1));
    }

    #[test]
    fn sierpinski_universal_property_up_to_three() {
        let r = sobrify(&FiniteSpace::sierpinski()).unwrap();
        let c = universal_property_check(&r, 3).unwrap();
        assert!(c.passed(), "{c:?}");
        assert_eq!(c.counts["targets"], 1 + 2 + 5);
        assert_eq!(c.counts["maps"], c.counts["factorings"]);
    }

    #[test]
    fn chain_alexandroff_reflection() {
        let p = FinitePoset::chain(3);
        let r = alexandroff_reflection(&p, KindTag::D).unwrap();
        assert!(r.eta.is_homeomorphism());
        assert!(universal_property_check(&r, 3).unwrap().passed());
    }
}

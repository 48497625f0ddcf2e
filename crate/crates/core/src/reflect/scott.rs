//! Reflections and completions of the symbolic example spaces.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use super::{Justification, KindTag, Variant};
use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::order::unlabeled_posets;
use crate::symbolic::{
    closed_catalog, closure, eta_sigma_continuity, fragment, irc_extras, irc_target, irreducible, leq_unchecked,
    sup_directed, wf_witness, ClosedSetRep, ColumnSet, DirectedDesc, DirectedForm, EtaVerdict, Family,
    Irreducibility, NatSet, Point, SpaceId, SupOutcome, SymbolicSet, WfWitness, JOHNSTONE_BOUND,
};
use crate::topology::{alexandroff, FiniteSpace};

/// Default number of steps in a generated eventually-constant map.
pub const STEP_BOUND: usize = 6;

/// Truncation level for the elementwise isomorphism checks.
const ISO_LEVEL: u64 = 12;

/// The interval for a symbolic space; every family is the point closures plus the listed extras.
#[derive(Clone, Debug, Serialize)]
pub struct SymbolicKSetInterval {
    pub space: SpaceId,
    pub kind: KindTag,
    pub bound: u64,
    /// Closures of directed sets that are not point closures.
    pub lower_extras: Vec<ClosedSetRep>,
    /// Non-principal irreducible closed sets among the forms below `bound`.
    pub upper_extras: Vec<ClosedSetRep>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub resolved_extras: Option<Vec<ClosedSetRep>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub justification: Option<Justification>,
}

/// A directed set without a greatest element is an infinite subset of ℕ or of
/// the finite rows of one column, and has the same closure as all of it.
fn directed_extras(space: SpaceId) -> Result<Vec<ClosedSetRep>> {
    let chains: Vec<SymbolicSet> = match space.family() {
        Family::NatLike => vec![SymbolicSet::nat(space, NatSet::all(), &[])?],
        Family::Johnstone => (0..JOHNSTONE_BOUND)
            .map(|j| {
                let col = ColumnSet { rows: NatSet::all(), omega: false };
                SymbolicSet::grid(space, ColumnSet::empty(), BTreeMap::from([(j, col)]), false)
            })
            .collect::<Result<_>>()?,
        Family::Cofinite => vec![],
    };
    let mut out = Vec::new();
    for c in chains {
        let cl = closure(&c);
        if !matches!(irreducible(&cl)?, Irreducibility::Principal { .. }) && !out.contains(&cl) {
            out.push(cl);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct KSpaceVerdict {
    pub space: SpaceId,
    pub kind: KindTag,
    pub holds: bool,
    pub certificate: Certificate,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WfWitness>,
}

/// Sober iff no extra irreducibles; a d-space iff no extra directed closures;
/// well-filtered when sober, and not when a witness family verifies.
pub fn is_k_space(space: SpaceId, kind: KindTag) -> Result<KSpaceVerdict> {
    let name = format!("{space}-is-{}", kind.property());
    let catalog = closed_catalog(space, JOHNSTONE_BOUND).len() as u64;
    let extras = irc_extras(space, JOHNSTONE_BOUND)?;
    let (holds, witness, mut cert) = match kind {
        KindTag::Sob => (extras.is_empty(), None, Certificate::pass(name).count("closed_forms", catalog)),
        KindTag::D => {
            let d = directed_extras(space)?;
            let mut c = Certificate::pass(name).count("directed_closures", d.len() as u64);
            if let Some(first) = d.first() {
                c.witness = Some(json!({ "directed_closure": first.to_string() }));
            }
            (d.is_empty(), None, c)
        }
        KindTag::Wf if extras.is_empty() => (true, None, Certificate::pass(name).count("closed_forms", catalog)),
        KindTag::Wf => {
            let w = wf_witness(space).map_err(|e| Error::Unresolved(e.to_string()))?;
            if !w.verified() {
                return Err(Error::Unresolved(format!("the witness family for {space} does not verify")));
            }
            let checked = w.clauses.iter().map(|c| c.checked).sum();
            (false, Some(w), Certificate::pass(name).count("clause_instances", checked))
        }
    };
    if kind == KindTag::Sob {
        if let Some(first) = extras.first() {
            cert.witness = Some(json!({ "irreducible": first.to_string() }));
        }
    }
    cert.add("holds", holds as u64);
    Ok(KSpaceVerdict { space, kind, holds, certificate: cert, witness })
}

pub fn symbolic_kset_interval(space: SpaceId, kind: KindTag) -> Result<SymbolicKSetInterval> {
    let lower = directed_extras(space)?;
    let upper = irc_extras(space, JOHNSTONE_BOUND)?;
    assert!(lower.iter().all(|d| upper.contains(d)), "directed closures are irreducible");
    let whole_only = upper == [ClosedSetRep::whole(space)];
    let (resolved, justification) = if lower == upper {
        (Some(lower.clone()), Some(Justification::SandwichCollapse))
    } else if kind == KindTag::Sob {
        (Some(upper.clone()), Some(Justification::SobIsIrc))
    } else {
        let k = is_k_space(space, kind)?;
        if k.holds {
            (Some(vec![]), Some(Justification::KSpace))
        } else if whole_only {
            (Some(upper.clone()), Some(Justification::Characterization))
        } else {
            (None, None)
        }
    };
    Ok(SymbolicKSetInterval {
        space,
        kind,
        bound: JOHNSTONE_BOUND,
        lower_extras: lower,
        upper_extras: upper,
        resolved_extras: resolved,
        justification,
    })
}

/// The space with a top adjoined, when it is in the catalog.
pub fn with_top(space: SpaceId) -> Option<SpaceId> {
    match space {
        SpaceId::NatChain => Some(SpaceId::NatTop),
        SpaceId::Johnstone => Some(SpaceId::JohnstoneTop),
        SpaceId::CofiniteNat => Some(SpaceId::CofiniteNatTop),
        _ => None,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SymbolicReflection {
    pub source: SpaceId,
    pub kind: KindTag,
    pub target: SpaceId,
    /// `k-space`, `top` or `direct`.
    pub route: &'static str,
    pub eta: String,
    pub evidence: Vec<Certificate>,
}

#[derive(Clone, Debug, Serialize)]
pub struct NotScottCertificate {
    pub source: SpaceId,
    pub kind: KindTag,
    pub failing_hypothesis: String,
    pub evidence: Vec<Certificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WfWitness>,
}

/// For spaces that are not Scott spaces: the two conditions, reported separately.
#[derive(Clone, Debug, Serialize)]
pub struct ConditionsReport {
    pub source: SpaceId,
    pub kind: KindTag,
    pub irc_shape: Certificate,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eta_sigma: Option<EtaVerdict>,
    pub note: String,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "kebab-case", tag = "outcome")]
pub enum ScottKOutcome {
    Reflection(SymbolicReflection),
    NotScott(NotScottCertificate),
    ConditionsOnly(ConditionsReport),
}

/// Whether the irreducibles are the point closures plus the whole space.
fn irc_shape(space: SpaceId) -> Result<(bool, Certificate)> {
    let extras = irc_extras(space, JOHNSTONE_BOUND)?;
    let holds = extras == [ClosedSetRep::whole(space)];
    let mut c = Certificate::pass(format!("{space}-irc-shape"))
        .count("closed_forms", closed_catalog(space, JOHNSTONE_BOUND).len() as u64)
        .count("extras", extras.len() as u64)
        .count("bound", JOHNSTONE_BOUND);
    if !holds {
        c.fail(json!({ "extras": extras.iter().map(ToString::to_string).collect::<Vec<_>>() }));
    }
    Ok((holds, c))
}

fn eta_certificate(space: SpaceId) -> Result<Certificate> {
    let v = eta_sigma_continuity(space)?;
    let mut c = Certificate::pass(format!("{space}-eta-continuous")).count("closed_forms", v.checked);
    if !v.continuous {
        c.fail(json!(v.witness));
    }
    Ok(c)
}

/// Checks that `↓x ↦ x` plus `extra ↦ fresh` is an order isomorphism from the
/// family (ordered by inclusion) onto `target`, on the level-`n` fragment.
fn family_isomorphism(space: SpaceId, target: SpaceId, extras: &[ClosedSetRep], n: u64) -> Result<Certificate> {
    let fresh: Vec<Point> = target
        .specials()
        .iter()
        .filter(|s| !space.specials().contains(s))
        .map(|&s| Point::Special(s))
        .collect();
    if fresh.len() != extras.len() {
        return Err(Error::Unresolved(format!("{} extra sets but {} new points in {target}", extras.len(), fresh.len())));
    }
    let mut reps: Vec<(ClosedSetRep, Point)> = fragment(space, n)
        .into_iter()
        .map(|p| Ok((ClosedSetRep::point_closure(space, &p)?, p)))
        .collect::<Result<_>>()?;
    reps.extend(extras.iter().cloned().zip(fresh));
    let mut cert = Certificate::pass(format!("{space}-to-{target}-isomorphism")).count("level", n);
    let mut images: Vec<Point> = reps.iter().map(|(_, p)| *p).collect();
    images.sort();
    let mut expected = fragment(target, n);
    expected.sort();
    if images != expected {
        cert.fail(json!({ "images": images.len(), "fragment": expected.len() }));
    }
    for (a, pa) in &reps {
        for (b, pb) in &reps {
            cert.add("pairs", 1);
            if a.is_subset(b)? != leq_unchecked(target, pa, pb) {
                cert.fail(json!({ "left": a.to_string(), "right": b.to_string() }));
            }
        }
    }
    Ok(cert)
}

fn extra_map(extras: &[ClosedSetRep], space: SpaceId, target: SpaceId) -> String {
    let fresh: Vec<String> = target
        .specials()
        .iter()
        .filter(|s| !space.specials().contains(s))
        .map(|s| s.name().to_string())
        .collect();
    let mut parts = vec!["↓x ↦ x".to_string()];
    parts.extend(extras.iter().zip(&fresh).map(|(e, p)| format!("{e} ↦ {p}")));
    parts.join(", ")
}

/// Decides whether the K-reflection of a Scott space stays a Scott space.
pub fn scott_kreflection(space: SpaceId, kind: KindTag) -> Result<ScottKOutcome> {
    let ks = symbolic_kset_interval(space, kind)?;
    let resolved = ks
        .resolved_extras
        .clone()
        .ok_or_else(|| Error::Unresolved(format!("K-sets of {space} for kind {kind} are not determined")))?;
    let k = is_k_space(space, kind)?;
    if k.holds {
        return Ok(ScottKOutcome::Reflection(SymbolicReflection {
            source: space,
            kind,
            target: space,
            route: "k-space",
            eta: "x ↦ x".into(),
            evidence: vec![k.certificate],
        }));
    }
    let (shape, shape_cert) = irc_shape(space)?;
    if !space.is_scott() {
        return Ok(ScottKOutcome::ConditionsOnly(ConditionsReport {
            source: space,
            kind,
            irc_shape: shape_cert,
            eta_sigma: eta_sigma_continuity(space).ok(),
            note: format!("{space} is not a Scott space; both conditions are reported without a verdict"),
        }));
    }
    if shape {
        let top = with_top(space).ok_or_else(|| Error::Unresolved(format!("{space} has no catalog top")))?;
        let tk = is_k_space(top, kind)?;
        let iso = family_isomorphism(space, top, &resolved, ISO_LEVEL)?;
        let mut evidence = vec![shape_cert, k.certificate, tk.certificate.clone(), iso];
        if tk.holds {
            evidence.push(eta_certificate(space)?);
            return Ok(ScottKOutcome::Reflection(SymbolicReflection {
                source: space,
                kind,
                target: top,
                route: "top",
                eta: "x ↦ x".into(),
                evidence,
            }));
        }
        // Not well-filtered implies not sober, so one witness serves both kinds.
        let witness = match kind {
            KindTag::Sob | KindTag::Wf => {
                let w = wf_witness(top)?;
                let mut c = Certificate::pass(format!("{top}-not-well-filtered"))
                    .count("clause_instances", w.clauses.iter().map(|c| c.checked).sum());
                if !w.verified() {
                    c.fail(json!(w.clauses));
                }
                evidence.push(c);
                Some(w)
            }
            KindTag::D => None,
        };
        let failing = match kind {
            KindTag::Sob => format!("Σ {top} is not sober: it is not even well-filtered"),
            _ => format!("Σ {top} is not {}", kind.property()),
        };
        return Ok(ScottKOutcome::NotScott(NotScottCertificate {
            source: space,
            kind,
            failing_hypothesis: failing,
            evidence,
            witness,
        }));
    }
    let target = irc_target(space)?;
    if resolved != ks.upper_extras {
        return Err(Error::Unresolved(format!("K-sets of {space} are not all irreducibles; no catalog target")));
    }
    let tk = is_k_space(target, kind)?;
    let iso = family_isomorphism(space, target, &resolved, ISO_LEVEL)?;
    let evidence = vec![k.certificate, tk.certificate, iso, eta_certificate(space)?];
    if !tk.holds {
        return Ok(ScottKOutcome::NotScott(NotScottCertificate {
            source: space,
            kind,
            failing_hypothesis: format!("Σ {target} is not {}", kind.property()),
            evidence,
            witness: None,
        }));
    }
    Ok(ScottKOutcome::Reflection(SymbolicReflection {
        source: space,
        kind,
        target,
        route: "direct",
        eta: extra_map(&resolved, space, target),
        evidence,
    }))
}

#[derive(Clone, Debug, Serialize)]
pub struct SymbolicCompletion {
    pub source: SpaceId,
    pub variant: Variant,
    pub target: SpaceId,
    pub route: &'static str,
    pub map: String,
    pub evidence: Vec<Certificate>,
}

fn poset_tag(space: SpaceId) -> Result<()> {
    if space.is_scott() {
        Ok(())
    } else {
        Err(Error::Unsupported(format!("{space} is not the Scott space of a poset")))
    }
}

/// `K_s(P)`, read off the K-reflection of `Σ P`.
pub fn ks_completion_symbolic(space: SpaceId, kind: KindTag) -> Result<SymbolicCompletion> {
    poset_tag(space)?;
    match scott_kreflection(space, kind)? {
        ScottKOutcome::Reflection(r) => Ok(SymbolicCompletion {
            source: space,
            variant: Variant::of(kind),
            target: r.target,
            route: r.route,
            map: r.eta,
            evidence: r.evidence,
        }),
        ScottKOutcome::NotScott(c) => Err(Error::HypothesisFailed(c.failing_hypothesis)),
        ScottKOutcome::ConditionsOnly(_) => unreachable!("Scott spaces get a verdict"),
    }
}

/// `K_s(P) = P_⊤`, valid when the irreducibles of `Σ P` are the point closures
/// plus `P` and `Σ P_⊤` is a K-space.
pub fn ks_completion_top_route(space: SpaceId, kind: KindTag) -> Result<SymbolicCompletion> {
    poset_tag(space)?;
    let (shape, shape_cert) = irc_shape(space)?;
    if !shape {
        let extras = irc_extras(space, JOHNSTONE_BOUND)?;
        let listed: Vec<String> = extras.iter().map(ToString::to_string).collect();
        return Err(Error::HypothesisFailed(format!(
            "irreducibles of Σ {space} are not the point closures plus the whole space (extras: {})",
            listed.join(", ")
        )));
    }
    let top = with_top(space).ok_or_else(|| Error::HypothesisFailed(format!("{space} has no catalog top")))?;
    let tk = is_k_space(top, kind)?;
    if !tk.holds {
        return Err(Error::HypothesisFailed(format!("Σ {top} is not {}", kind.property())));
    }
    Ok(SymbolicCompletion {
        source: space,
        variant: Variant::of(kind),
        target: top,
        route: "top",
        map: "x ↦ x".into(),
        evidence: vec![shape_cert, tk.certificate],
    })
}

/// Ideal completion of an ℕ-based poset, matched against a catalog space.
#[derive(Clone, Debug, Serialize)]
pub struct IdealCompletion {
    pub source: SpaceId,
    pub target: SpaceId,
    pub non_principal: Vec<String>,
    pub evidence: Vec<Certificate>,
}

/// Enumerates the down-sets `N ∪ S` with `N` a segment or ℕ and `S` a set of
/// named points, keeps the directed ones, and identifies `Id P` with a catalog space.
pub fn symbolic_ideals(space: SpaceId) -> Result<IdealCompletion> {
    if space.family() != Family::NatLike {
        return Err(Error::Unsupported(format!("ideal normal forms are enumerated for the ℕ-based posets, not {space}")));
    }
    let n = ISO_LEVEL;
    let specials = space.specials();
    let probe = fragment(space, n + 1);
    let mut cert = Certificate::pass(format!("{space}-ideals"));
    let mut non_principal = Vec::new();
    let naturals = (0..=n).map(|k| if k == 0 { NatSet::empty() } else { NatSet::upto(k - 1) }).chain([NatSet::all()]);
    for nat in naturals {
        for mask in 0u32..1 << specials.len() {
            let chosen: Vec<_> = (0..specials.len()).filter(|i| mask >> i & 1 == 1).map(|i| specials[i]).collect();
            let set = SymbolicSet::nat(space, nat.clone(), &chosen)?;
            cert.add("candidates", 1);
            let members: Vec<Point> = probe.iter().copied().filter(|p| set.contains(p)).collect();
            let down = members.iter().all(|m| probe.iter().all(|p| !leq_unchecked(space, p, m) || set.contains(p)));
            if !down || set.is_empty() {
                continue;
            }
            cert.add("down_sets", 1);
            // ℕ is infinite, so the greatest element, if any, is named or a finite segment's end.
            let greatest = members.iter().find(|g| members.iter().all(|p| leq_unchecked(space, p, g)));
            let infinite = nat.is_all();
            let greatest = greatest.filter(|g| !infinite || matches!(g, Point::Special(_)));
            let directed = greatest.is_some() || (infinite && chosen.is_empty());
            if !directed {
                continue;
            }
            cert.add("ideals", 1);
            if greatest.is_none() {
                non_principal.push(closure(&set));
            }
        }
    }
    let extras = irc_extras(space, JOHNSTONE_BOUND)?;
    if non_principal != extras {
        return Err(Error::Unsupported(format!("Id {space} has no catalog counterpart")));
    }
    let target = irc_target(space)?;
    let iso = family_isomorphism(space, target, &non_principal, n)?;
    Ok(IdealCompletion {
        source: space,
        target,
        non_principal: non_principal.iter().map(ToString::to_string).collect(),
        evidence: vec![cert, iso],
    })
}

/// Universal property of `Σ P → Σ K(Σ P)` for `P` = ℕ or ℕ ∪ {a,b}, against
/// every finite sober target with at most `max_target` points.
///
/// A monotone map from ℕ into a finite poset is eventually constant; the
/// generator takes those constant from `steps` on.
pub fn symbolic_universal_property(space: SpaceId, max_target: usize, steps: usize) -> Result<Certificate> {
    if !matches!(space, SpaceId::NatChain | SpaceId::NatAb) {
        return Err(Error::Unsupported(format!("map generation is implemented for nat and nat-ab, not {space}")));
    }
    crate::limits::ensure("target size", max_target, super::UNIQUENESS_CAP)?;
    let target = irc_target(space)?;
    let full = |s| sup_directed(&DirectedDesc { space: s, form: DirectedForm::FullChain });
    let nu = match full(target)? {
        SupOutcome::Sup { point } => point,
        SupOutcome::NoSup(_) => return Err(Error::HypothesisFailed(format!("ℕ has no supremum in {target}"))),
    };
    let source_sup = match full(space)? {
        SupOutcome::Sup { point } => Some(point),
        SupOutcome::NoSup(_) => None,
    };
    let ys: Vec<FiniteSpace> = (1..=max_target)
        .map(unlabeled_posets)
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .map(|q| alexandroff(&q))
        .collect();
    let ctx = Ctx { space, target, nu, source_sup, steps };
    let parts: Vec<Certificate> = ys.par_iter().map(|y| ctx.check(y)).collect();
    let mut cert = Certificate::pass(format!("{space}-universal-property")).count("steps", steps as u64);
    for p in &parts {
        cert.absorb(p);
    }
    Ok(cert)
}

struct Ctx {
    space: SpaceId,
    target: SpaceId,
    nu: Point,
    source_sup: Option<Point>,
    steps: usize,
}

impl Ctx {
    fn check(&self, y: &FiniteSpace) -> Certificate {
        let mut cert = Certificate::pass("universal-property").count("targets", 1);
        let order = y.specialization();
        let opens = y.open_sets();
        let specials = self.space.specials();
        for seq in monotone_sequences(&order, self.steps + 1) {
            let last = seq[self.steps];
            let above: Vec<usize> = (0..y.len()).filter(|&v| order.leq(last, v)).collect();
            for vals in product(&above, specials.len()) {
                let named: BTreeMap<Point, usize> =
                    specials.iter().map(|&s| Point::Special(s)).zip(vals.iter().copied()).collect();
                let value = |p: &Point, extra: Option<usize>| match (p, extra) {
                    (Point::Nat(n), _) => seq[(*n as usize).min(self.steps)],
                    (p, Some(v)) if *p == self.nu => v,
                    (p, _) => named[p],
                };
                if !self.continuous(self.space, self.source_sup, &order, &opens, &seq, |p| value(p, None)) {
                    continue;
                }
                cert.add("maps", 1);
                let valid: Vec<usize> = (0..y.len())
                    .filter(|&v| {
                        self.continuous(self.target, Some(self.nu), &order, &opens, &seq, |p| value(p, Some(v)))
                    })
                    .collect();
                // f*(ℕ) is the point whose closure is the closure of f(ℕ).
                let image = crate::subset::Subset::from_indices(seq.iter().copied());
                let formula = (0..y.len()).find(|&v| y.point_closure(v) == y.closure(image));
                if valid.len() == 1 && formula == Some(valid[0]) {
                    cert.add("factorings", 1);
                } else {
                    cert.fail(json!({
                        "target": y.to_json(),
                        "naturals": seq,
                        "named": vals,
                        "extensions": valid,
                        "formula": formula,
                    }));
                }
            }
        }
        cert
    }

    /// Monotone on a fragment past the last step, and the supremum of ℕ, if
    /// any, lands in every open set that some `f(n)` enters.
    fn continuous(
        &self,
        space: SpaceId,
        sup: Option<Point>,
        order: &crate::order::FinitePoset,
        opens: &[crate::subset::Subset],
        seq: &[usize],
        f: impl Fn(&Point) -> usize,
    ) -> bool {
        let pts = fragment(space, self.steps as u64 + 2);
        let monotone = pts
            .iter()
            .all(|a| pts.iter().all(|b| !leq_unchecked(space, a, b) || order.leq(f(a), f(b))));
        let scott = sup.map_or(true, |s| {
            let v = f(&s);
            opens.iter().all(|u| !u.contains(v) || seq.iter().any(|&w| u.contains(w)))
        });
        monotone && scott
    }
}

fn monotone_sequences(order: &crate::order::FinitePoset, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut stack: Vec<Vec<usize>> = (0..order.len()).map(|v| vec![v]).collect();
    while let Some(s) = stack.pop() {
        if s.len() == len {
            out.push(s);
            continue;
        }
        let last = *s.last().expect("nonempty");
        for v in 0..order.len() {
            if order.leq(last, v) {
                let mut t = s.clone();
                t.push(v);
                stack.push(t);
            }
        }
    }
    out.sort();
    out
}

fn product(choices: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|p| {
                choices.iter().map(move |&c| {
                    let mut q = p.clone();
                    q.push(c);
                    q
                })
            })
            .collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn intervals() {
        let ab = symbolic_kset_interval(SpaceId::NatAb, KindTag::Wf).unwrap();
        assert_eq!(ab.justification, Some(Justification::SandwichCollapse));
        assert_eq!(ab.resolved_extras.unwrap()[0].to_string(), ab.upper_extras[0].to_string());
        let j = symbolic_kset_interval(SpaceId::Johnstone, KindTag::Wf).unwrap();
        assert_eq!(j.justification, Some(Justification::Characterization));
        assert_eq!(j.resolved_extras.unwrap(), vec![ClosedSetRep::whole(SpaceId::Johnstone)]);
        let jd = symbolic_kset_interval(SpaceId::Johnstone, KindTag::D).unwrap();
        assert_eq!(jd.justification, Some(Justification::KSpace));
        let jt = symbolic_kset_interval(SpaceId::JohnstoneTop, KindTag::Wf).unwrap();
        assert!(jt.resolved_extras.is_none());
    }

    #[test]
    fn nat_reflects_to_nat_top() {
        for kind in KindTag::ALL {
            match scott_kreflection(SpaceId::NatChain, kind).unwrap() {
                ScottKOutcome::Reflection(r) => {
                    assert_eq!(r.target, SpaceId::NatTop);
                    assert!(r.evidence.iter().all(Certificate::passed), "{kind}: {:?}", r.evidence);
                }
                other => panic!("{kind}: {other:?}"),
            }
        }
    }

    #[test]
    fn nat_ab_reflects_to_q() {
        for kind in KindTag::ALL {
            let ScottKOutcome::Reflection(r) = scott_kreflection(SpaceId::NatAb, kind).unwrap() else { panic!() };
            assert_eq!(r.target, SpaceId::NatAbc);
            assert_eq!(r.route, "direct");
            assert!(r.evidence.iter().all(Certificate::passed));
        }
    }

    #[test]
    fn johnstone_is_not_scott() {
        for kind in [KindTag::Sob, KindTag::Wf] {
            let ScottKOutcome::NotScott(c) = scott_kreflection(SpaceId::Johnstone, kind).unwrap() else { panic!() };
            assert!(c.witness.unwrap().verified());
            assert!(c.evidence[0].passed());
        }
        let ScottKOutcome::Reflection(r) = scott_kreflection(SpaceId::Johnstone, KindTag::D).unwrap() else {
            panic!()
        };
        assert_eq!(r.target, SpaceId::Johnstone);
    }

    #[test]
    fn cofinite_reports_conditions() {
        let ScottKOutcome::ConditionsOnly(c) = scott_kreflection(SpaceId::CofiniteNat, KindTag::Sob).unwrap() else {
            panic!()
        };
        assert!(c.irc_shape.passed());
        assert!(!c.eta_sigma.unwrap().continuous);
    }

    #[test]
    fn completions() {
        assert_eq!(ks_completion_symbolic(SpaceId::NatChain, KindTag::Wf).unwrap().target, SpaceId::NatTop);
        assert_eq!(ks_completion_top_route(SpaceId::NatChain, KindTag::Wf).unwrap().target, SpaceId::NatTop);
        assert_eq!(ks_completion_symbolic(SpaceId::NatAb, KindTag::Sob).unwrap().target, SpaceId::NatAbc);
        assert!(matches!(ks_completion_top_route(SpaceId::NatAb, KindTag::Sob), Err(Error::HypothesisFailed(_))));
        assert!(matches!(ks_completion_symbolic(SpaceId::Johnstone, KindTag::Wf), Err(Error::HypothesisFailed(_))));
    }

    #[test]
    fn ideal_completions() {
        assert_eq!(symbolic_ideals(SpaceId::NatChain).unwrap().target, SpaceId::NatTop);
        let ab = symbolic_ideals(SpaceId::NatAb).unwrap();
        assert_eq!(ab.target, SpaceId::NatAbc);
        assert!(ab.evidence.iter().all(Certificate::passed));
        assert!(symbolic_ideals(SpaceId::NatTop).is_err());
    }

    #[test]
    fn universal_property_small() {
        let c = symbolic_universal_property(SpaceId::NatChain, 3, 3).unwrap();
        assert!(c.passed(), "{c:?}");
        assert_eq!(c.counts["maps"], c.counts["factorings"]);
        assert!(symbolic_universal_property(SpaceId::NatAb, 3, 3).unwrap().passed());
    }
}

use rayon::prelude::*;
use serde_json::json;

use super::{expect, Scale};
use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::reflect::{scott_kreflection, symbolic_universal_property, KindTag, ScottKOutcome};
use crate::symbolic::{
    closed_catalog, eta_sigma_continuity, irc_extras, irreducible, split_search, wf_witness, ClosedSetRep,
    CompactForm, CompactSatRep, Irreducibility, NatSet, SpaceId,
};

pub fn l10(s: &Scale) -> Result<Certificate> {
    let bound = s.get("bound");
    let level = s.get("fragment");
    let mut cert = Certificate::pass("L10").count("bound", bound);
    let extras = irc_extras(SpaceId::Johnstone, bound)?;
    expect(&mut cert, "shape_checks", extras == [ClosedSetRep::whole(SpaceId::Johnstone)], || {
        json!({ "extras": extras.iter().map(ToString::to_string).collect::<Vec<_>>() })
    });
    let forms: Vec<ClosedSetRep> = closed_catalog(SpaceId::Johnstone, bound).into_iter().skip(1).collect();
    let parts: Vec<Result<Certificate>> = forms
        .par_iter()
        .map(|rep| {
            let mut c = Certificate::pass("L10");
            let decided = irreducible(rep)?;
            c.add(
                match decided {
                    Irreducibility::Principal { .. } => "principal",
                    Irreducibility::NonPrincipal => "non_principal",
                    Irreducibility::Reducible { .. } => "reducible",
                },
                1,
            );
            let found = split_search(rep, level)?;
            expect(&mut c, "split_searches", decided.is_irreducible() == found.is_none(), || {
                json!({ "form": rep.to_string(), "decision": decided, "search": found.map(|(a, b)| (a.to_string(), b.to_string())) })
            });
            Ok(c)
        })
        .collect();
    for p in parts {
        cert.absorb(&p?);
    }
    Ok(cert)
}

fn witness_cert(cert: &mut Certificate, space: SpaceId) -> Result<()> {
    let w = wf_witness(space)?;
    for c in &w.clauses {
        cert.add(&format!("{space}_{}", c.name), c.checked);
    }
    expect(cert, "witnesses", w.verified(), || json!(w));
    Ok(())
}

pub fn l11(_: &Scale) -> Result<Certificate> {
    let mut cert = Certificate::pass("L11");
    witness_cert(&mut cert, SpaceId::JohnstoneTop)?;
    witness_cert(&mut cert, SpaceId::Johnstone)?;
    Ok(cert)
}

pub fn l12(_: &Scale) -> Result<Certificate> {
    let mut cert = Certificate::pass("L12");
    for kind in [KindTag::Sob, KindTag::Wf] {
        let outcome = scott_kreflection(SpaceId::Johnstone, kind)?;
        let ok = match &outcome {
            ScottKOutcome::NotScott(c) => {
                for e in &c.evidence {
                    cert.absorb(e);
                }
                c.witness.as_ref().is_some_and(|w| w.verified())
            }
            _ => false,
        };
        expect(&mut cert, "certificates", ok, || json!({ "kind": kind, "outcome": outcome }));
    }
    Ok(cert)
}

fn positive(law: &str, space: SpaceId, target: SpaceId, s: &Scale) -> Result<Certificate> {
    let mut cert = Certificate::pass(law);
    for kind in KindTag::ALL {
        let outcome = scott_kreflection(space, kind)?;
        let ok = match &outcome {
            ScottKOutcome::Reflection(r) => {
                for e in &r.evidence {
                    cert.absorb(e);
                }
                r.target == target
            }
            _ => false,
        };
        expect(&mut cert, "reflections", ok, || json!({ "kind": kind, "outcome": outcome }));
    }
    cert.absorb(&symbolic_universal_property(space, s.usize("target"), s.usize("steps"))?);
    Ok(cert)
}

pub fn l13(s: &Scale) -> Result<Certificate> {
    positive("L13", SpaceId::NatChain, SpaceId::NatTop, s)
}

pub fn l14(s: &Scale) -> Result<Certificate> {
    positive("L14", SpaceId::NatAb, SpaceId::NatAbc, s)
}

pub fn l15(_: &Scale) -> Result<Certificate> {
    let mut cert = Certificate::pass("L15");
    let v = eta_sigma_continuity(SpaceId::CofiniteNat)?;
    let witnessed = v.witness.as_ref().is_some_and(|w| !w.preimage.is_empty() && !w.preimage.is_cofinite());
    expect(&mut cert, "eta_checks", !v.continuous && witnessed, || json!(v));
    witness_cert(&mut cert, SpaceId::CofiniteNat)?;
    let samples = [
        NatSet::finite([0]),
        NatSet::finite([1, 3, 8]),
        NatSet::upto(20),
        NatSet::cofinite([0]),
        NatSet::cofinite([2, 5, 7]),
        NatSet::from(4),
        NatSet::all(),
    ];
    for nat in samples {
        let k = CompactSatRep::new(SpaceId::CofiniteNat, CompactForm::Subset { nat: nat.clone(), top: false })?;
        let compact = k.is_compact().compact;
        let saturated = k.to_set() == crate::symbolic::SymbolicSet::nat(SpaceId::CofiniteNat, nat.clone(), &[])?;
        expect(&mut cert, "compact_subsets", compact && saturated, || json!({ "set": nat }));
    }
    let empty = CompactSatRep::new(SpaceId::CofiniteNat, CompactForm::Subset { nat: NatSet::empty(), top: false });
    expect(&mut cert, "empty_rejected", matches!(empty, Err(Error::EmptySet)), || json!("the empty set was accepted"));
    Ok(cert)
}

use std::collections::HashSet;

use rayon::prelude::*;
use serde_json::json;

use super::{expect, merge, Scale};
use crate::certificate::Certificate;
use crate::error::Result;
use crate::order::{count_labeled_relations, find_isomorphism, labeled_posets, monotone_maps, unlabeled_posets, FinitePoset};
use crate::reflect::{
    alexandroff_reflection, d_completion_alexandroff, ideal_extension, is_k_space, k_reflection, sobrify,
    symbolic_ideals, universal_property_check, KindTag, ScottKOutcome,
};
use crate::subset::Subset;
use crate::symbolic::{sup_directed, DirectedDesc, DirectedForm, NoSup, Point, SpaceId, SupOutcome};
use crate::topology::{
    alexandroff, check, continuous_maps, equalizer, find_homeomorphism, hoare_space, is_continuous, scott_space,
    subspace, x_top, ContinuousMap, FiniteSpace, Property, SubspaceKind,
};
use crate::MonotoneMap;

/// Labelled posets on `1..=n` points, smallest first.
fn posets(n: usize) -> Vec<FinitePoset> {
    (1..=n).flat_map(labeled_posets).collect()
}

/// Every finite T0 space is the Alexandroff space of its specialization order.
fn spaces(n: usize) -> Vec<FiniteSpace> {
    posets(n).iter().map(alexandroff).collect()
}

fn props(x: &FiniteSpace) -> Result<[bool; 3]> {
    Ok([check(x, Property::Sober)?.holds, check(x, Property::WellFiltered)?.holds, check(x, Property::DSpace)?.holds])
}

pub fn l1(s: &Scale) -> Result<Certificate> {
    let n = s.usize("carrier");
    let mut cert = Certificate::pass("L1");
    for k in 1..=n {
        let generated = labeled_posets(k).len() as u64;
        cert.add(&format!("spaces_{k}"), generated);
        expect(&mut cert, "enumeration_cross_checks", generated == count_labeled_relations(k), || {
            json!({ "size": k, "generated": generated })
        });
    }
    let items = spaces(n);
    let parts = items.par_iter().map(|x| -> Result<Certificate> {
        let mut c = Certificate::pass("L1");
        let p = props(x)?;
        expect(&mut c, "property_checks", p == [true; 3], || json!({ "space": x.to_json(), "properties": p }));
        let mut pc = x.point_closures();
        pc.sort();
        let dc = x.directed_closures()?;
        let mut ir = x.irreducibles();
        ir.sort();
        expect(&mut c, "family_checks", pc == dc && dc == ir, || json!({ "space": x.to_json() }));
        Ok(c)
    });
    let swept = merge("L1", parts.collect::<Vec<_>>())?;
    cert.absorb(&swept);
    Ok(cert)
}

pub fn l2(s: &Scale) -> Result<Certificate> {
    let items = spaces(s.usize("carrier"));
    let parts = items.par_iter().map(|x| -> Result<Certificate> {
        let mut c = Certificate::pass("L2");
        let closed: Vec<Subset> = x.closed_sets().iter().copied().filter(|g| !g.is_empty()).collect();
        for mask in 1u64..1 << closed.len() {
            let family: Vec<Subset> = (0..closed.len()).filter(|i| mask >> i & 1 == 1).map(|i| closed[i]).collect();
            let h = hoare_space(x, &family)?;
            let sober = check(&h.space, Property::Sober)?.holds;
            expect(&mut c, "families", sober, || {
                json!({ "space": x.to_json(), "family": family.iter().map(|&g| x.labels_of(g)).collect::<Vec<_>>() })
            });
        }
        Ok(c)
    });
    merge("L2", parts.collect::<Vec<_>>())
}

pub fn l3(s: &Scale) -> Result<Certificate> {
    let items = spaces(s.usize("carrier"));
    let parts = items.par_iter().map(|x| -> Result<Certificate> {
        let mut c = Certificate::pass("L3");
        let r = sobrify(x)?;
        let h = hoare_space(x, &r.members)?;
        for a in Subset::all(x.len()) {
            let lhs = r.target.closure(r.eta.image(a));
            let rhs = h.box_of(x.closure(a));
            expect(&mut c, "subsets", lhs == rhs, || json!({ "space": x.to_json(), "subset": x.labels_of(a) }));
        }
        Ok(c)
    });
    merge("L3", parts.collect::<Vec<_>>())
}

pub fn l4(s: &Scale) -> Result<Certificate> {
    let codomains: Vec<FiniteSpace> = (1..=s.usize("equalizer"))
        .map(unlabeled_posets)
        .collect::<Result<Vec<_>>>()?
        .iter()
        .flatten()
        .map(alexandroff)
        .collect();
    let items = spaces(s.usize("carrier"));
    let parts = items.par_iter().map(|x| -> Result<Certificate> {
        let mut c = Certificate::pass("L4");
        let px = props(x)?;
        let mut seen = HashSet::new();
        for y in &codomains {
            let maps = continuous_maps(x, y)?;
            for f in &maps {
                for g in &maps {
                    c.add("pairs", 1);
                    let agree = Subset::from_indices((0..x.len()).filter(|&i| f[i] == g[i]));
                    if !seen.insert(agree) {
                        continue;
                    }
                    let fm = ContinuousMap::new(x.clone(), y.clone(), f.clone())?;
                    let gm = ContinuousMap::new(x.clone(), y.clone(), g.clone())?;
                    let e = props(&equalizer(&fm, &gm)?)?;
                    let kept = (0..3).all(|i| !px[i] || e[i]);
                    expect(&mut c, "equalizers", kept, || {
                        json!({ "space": x.to_json(), "f": f, "g": g, "codomain": y.to_json() })
                    });
                }
            }
        }
        Ok(c)
    });
    merge("L4", parts.collect::<Vec<_>>())
}

pub fn l5(s: &Scale) -> Result<Certificate> {
    let items = spaces(s.usize("carrier"));
    let parts = items.par_iter().map(|x| -> Result<Certificate> {
        let mut c = Certificate::pass("L5");
        let px = props(x)?;
        for a in Subset::all(x.len()) {
            for (kind, key) in [(SubspaceKind::Closed, "closed_subspaces"), (SubspaceKind::Saturated, "saturated_subspaces")] {
                let Ok(sub) = subspace(x, a, kind) else { continue };
                let ps = props(&sub)?;
                let kept = (0..3).all(|i| !px[i] || ps[i]);
                expect(&mut c, key, kept, || json!({ "space": x.to_json(), "subset": x.labels_of(a), "kind": key }));
            }
        }
        Ok(c)
    });
    merge("L5", parts.collect::<Vec<_>>())
}

pub fn l6(s: &Scale) -> Result<Certificate> {
    let xs = spaces(s.usize("carrier"));
    let spaces_part = xs.par_iter().map(|x| -> Result<Certificate> {
        let mut c = Certificate::pass("L6");
        let (xt, _) = x_top(x);
        let (a, b) = (props(x)?, props(&xt)?);
        expect(&mut c, "spaces", a == b, || json!({ "space": x.to_json(), "base": a, "with_top": b }));
        Ok(c)
    });
    let ps = posets(s.usize("poset"));
    let posets_part = ps.par_iter().map(|p| -> Result<Certificate> {
        let mut c = Certificate::pass("L6");
        let (lifted, _) = x_top(&scott_space(p)?);
        let (pt, _) = p.add_top();
        let direct = scott_space(&pt)?;
        let same = find_homeomorphism(&lifted, &direct)?.is_some();
        expect(&mut c, "posets", same, || json!({ "poset": p.to_json(false) }));
        Ok(c)
    });
    let mut parts: Vec<Result<Certificate>> = spaces_part.collect();
    parts.extend(posets_part.collect::<Vec<_>>());
    merge("L6", parts)
}

/// Continuity into the Scott space against preservation of directed suprema,
/// with both sides computed from scratch for every pair of posets.
pub fn l7(s: &Scale) -> Result<Certificate> {
    let all = posets(s.usize("maps"));
    let prepared: Vec<(FiniteSpace, Vec<(Subset, usize)>)> = all
        .iter()
        .map(|p| Ok((scott_space(p)?, p.directed_with_sup()?)))
        .collect::<Result<_>>()?;
    let parts = (0..all.len()).into_par_iter().map(|i| -> Result<Certificate> {
        let mut c = Certificate::pass("L7");
        let (p, (sp, dsets)) = (&all[i], &prepared[i]);
        for (q, (sq, _)) in all.iter().zip(&prepared) {
            for f in monotone_maps(p, q) {
                let continuous = is_continuous(sp, sq, &f);
                let preserves = dsets.iter().all(|&(d, sup)| {
                    let image = Subset::from_indices(d.iter().map(|x| f[x]));
                    q.sup(image) == Some(f[sup])
                });
                expect(&mut c, "maps", continuous == preserves, || {
                    json!({ "source": p.to_json(false), "target": q.to_json(false), "map": f })
                });
            }
        }
        Ok(c)
    });
    merge("L7", parts.collect::<Vec<_>>())
}

pub fn l8(s: &Scale) -> Result<Certificate> {
    let items = posets(s.usize("poset"));
    let parts = items.par_iter().map(|p| -> Result<Certificate> {
        let mut c = Certificate::pass("L8");
        if !p.is_continuous_domain()? {
            return Ok(c.count("not_continuous", 1));
        }
        let sober = check(&scott_space(p)?, Property::Sober)?.holds;
        expect(&mut c, "domains", sober, || json!({ "poset": p.to_json(false) }));
        Ok(c)
    });
    merge("L8", parts.collect::<Vec<_>>())
}

pub fn l9(s: &Scale) -> Result<Certificate> {
    let items = posets(s.usize("poset"));
    let parts = items.par_iter().map(|p| -> Result<Certificate> {
        let mut c = Certificate::pass("L9");
        if !p.is_complete_lattice()? {
            return Ok(c.count("not_lattices", 1));
        }
        let wf = check(&scott_space(p)?, Property::WellFiltered)?.holds;
        expect(&mut c, "lattices", wf, || json!({ "poset": p.to_json(false) }));
        Ok(c)
    });
    merge("L9", parts.collect::<Vec<_>>())
}

pub fn l16(s: &Scale) -> Result<Certificate> {
    let target = s.usize("target");
    let codomains: Vec<FinitePoset> =
        (1..=target.min(3)).map(unlabeled_posets).collect::<Result<Vec<_>>>()?.into_iter().flatten().collect();
    let items = posets(s.usize("maps"));
    let parts = items.par_iter().map(|p| -> Result<Certificate> {
        let mut c = Certificate::pass("L16");
        let r = alexandroff_reflection(p, KindTag::D)?;
        c.absorb(&universal_property_check(&r, target)?);
        for q in &codomains {
            for f in monotone_maps(p, q) {
                let m = MonotoneMap::new(p.clone(), q.clone(), f.clone())?;
                let ok = ideal_extension(&m).is_ok();
                expect(&mut c, "extensions", ok, || json!({ "poset": p.to_json(false), "map": f }));
            }
        }
        Ok(c)
    });
    let mut cert = merge("L16", parts.collect::<Vec<_>>())?;
    // ℕ into ℕ_⊤: the ideal ℕ goes to the supremum of the inclusion's image.
    let sup = sup_directed(&DirectedDesc::new(SpaceId::NatTop, DirectedForm::FullChain)?)?;
    expect(&mut cert, "symbolic_extensions", sup == SupOutcome::Sup { point: Point::TOP }, || json!(sup));
    let ideals = symbolic_ideals(SpaceId::NatChain)?;
    expect(&mut cert, "symbolic_ideal_completions", ideals.target == SpaceId::NatTop, || json!(ideals));
    for e in &ideals.evidence {
        cert.absorb(e);
    }
    Ok(cert)
}

pub fn l17(s: &Scale) -> Result<Certificate> {
    let items = posets(s.usize("poset"));
    let parts = items.par_iter().map(|p| -> Result<Certificate> {
        let mut c = Certificate::pass("L17");
        let ideal = d_completion_alexandroff(p)?;
        let gamma = alexandroff(p);
        for kind in KindTag::ALL {
            let r = k_reflection(&gamma, kind)?;
            let same = find_isomorphism(&r.target.specialization(), &ideal.target)?.is_some();
            let sigma = find_homeomorphism(&r.target, &scott_space(&ideal.target)?)?.is_some();
            expect(&mut c, "completions", same && sigma, || json!({ "poset": p.to_json(false), "kind": kind }));
        }
        Ok(c)
    });
    let mut cert = merge("L17", parts.collect::<Vec<_>>())?;
    // On ℕ the Alexandroff and Scott topologies agree, so each reflection of Γℕ is the one of Σℕ.
    let ideals = symbolic_ideals(SpaceId::NatChain)?;
    for kind in KindTag::ALL {
        let outcome = crate::reflect::scott_kreflection(SpaceId::NatChain, kind)?;
        let target = match &outcome {
            ScottKOutcome::Reflection(r) => Some(r.target),
            _ => None,
        };
        expect(&mut cert, "nat_completions", target == Some(ideals.target), || json!({ "kind": kind, "outcome": outcome }));
    }
    Ok(cert)
}

pub fn l18(s: &Scale) -> Result<Certificate> {
    let items = posets(s.usize("poset"));
    let parts = items.par_iter().map(|p| -> Result<Certificate> {
        let mut c = Certificate::pass("L18");
        let gamma = alexandroff(p);
        let [sober, wf, d] = props(&gamma)?;
        let dcpo = p.is_dcpo()?;
        let all_compact = dcpo && p.compact_elements()? == p.all();
        let equal = dcpo && gamma == scott_space(p)?;
        let conditions = [sober, wf, d, p.is_noetherian()?, all_compact, equal];
        expect(&mut c, "posets", conditions.iter().all(|&v| v == conditions[0]), || {
            json!({ "poset": p.to_json(false), "conditions": conditions })
        });
        Ok(c)
    });
    let mut cert = merge("L18", parts.collect::<Vec<_>>())?;
    // ℕ: its Alexandroff and Scott topologies coincide, so the symbolic checks of Σℕ apply.
    let sup = sup_directed(&DirectedDesc::new(SpaceId::NatChain, DirectedForm::FullChain)?)?;
    // Any directed subset of ℕ without a greatest element is cofinal, so ℕ decides both.
    let dcpo = !matches!(sup, SupOutcome::NoSup(NoSup::NoUpperBound | NoSup::IncomparableMinimal { .. }));
    let noetherian = matches!(sup, SupOutcome::Sup { point: Point::Nat(_) });
    let conditions = [
        is_k_space(SpaceId::NatChain, KindTag::Sob)?.holds,
        is_k_space(SpaceId::NatChain, KindTag::Wf)?.holds,
        is_k_space(SpaceId::NatChain, KindTag::D)?.holds,
        noetherian,
        dcpo,
        dcpo,
    ];
    expect(&mut cert, "nat", conditions == [false; 6], || json!({ "conditions": conditions }));
    cert.witness.get_or_insert(json!({ "nat": { "noetherian": false, "ascending_chain": "0<1<2<..." } }));
    Ok(cert)
}

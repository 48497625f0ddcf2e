//! Ideal completions and the D, WF and Sob completions of posets.

use reflekt::order::find_isomorphism;
use reflekt::reflect::{
    d_completion_alexandroff, ideal_extension, ks_completion, ks_completion_symbolic, symbolic_ideals, KindTag,
};
use reflekt::symbolic::SpaceId;
use reflekt::{FinitePoset, MonotoneMap, Result};

fn main() -> Result<()> {
    let p = FinitePoset::new(&["x", "y", "z", "w"], &[("x", "z"), ("y", "z"), ("y", "w")])?;
    let d = d_completion_alexandroff(&p)?;
    println!("Id P has {} elements: {:?}", d.target.len(), d.target.labels());
    for c in &d.evidence {
        println!("  {} {:?}", c.law, c.status);
    }
    for kind in KindTag::ALL {
        let c = ks_completion(&p, kind)?;
        let same = find_isomorphism(&c.target, &d.target)?.is_some();
        println!("{} completion ≅ Id P: {same}", serde_json::to_value(c.variant).unwrap());
    }

    // A monotone map into a dcpo extends to the ideals by taking suprema.
    let two = FinitePoset::chain(2);
    let f = MonotoneMap::from_labels(p.clone(), two, &[("x", "0"), ("y", "0"), ("z", "1"), ("w", "0")])?;
    let ext = ideal_extension(&f)?;
    let q = ext.source();
    for i in 0..q.len() {
        println!("  f*({}) = {}", q.label(i), ext.target().label(ext.apply(i)));
    }

    println!();
    for space in [SpaceId::NatChain, SpaceId::NatAb] {
        let ideals = symbolic_ideals(space)?;
        println!("Id {space} ≅ {} (non-principal ideals {:?})", ideals.target, ideals.non_principal);
        for kind in KindTag::ALL {
            let c = ks_completion_symbolic(space, kind)?;
            println!("  {kind}: {} by {}", c.target, c.map);
        }
    }
    match ks_completion_symbolic(SpaceId::Johnstone, KindTag::Sob) {
        Ok(c) => println!("johnstone sob completion: {}", c.target),
        Err(e) => println!("johnstone sob completion: {e}"),
    }
    Ok(())
}

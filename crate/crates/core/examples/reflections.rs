//! K-reflections: finite spaces, the Alexandroff route, and the symbolic examples.

use reflekt::reflect::{
    alexandroff_reflection, k_reflection, scott_kreflection, symbolic_kset_interval, symbolic_universal_property,
    universal_property_check, KindTag, Report, ScottKOutcome,
};
use reflekt::symbolic::SpaceId;
use reflekt::topology::scott_space;
use reflekt::{FinitePoset, Result};

fn main() -> Result<()> {
    let p = FinitePoset::new(&["a", "b", "c"], &[("a", "c"), ("b", "c")])?;
    let r = k_reflection(&scott_space(&p)?, KindTag::Wf)?;
    println!("{}", serde_json::to_string_pretty(&Report::from(&r)).unwrap());
    let cert = universal_property_check(&r, 3)?;
    println!("universal property against targets ≤ 3: {:?} {:?}", cert.status, cert.counts);

    let chain = FinitePoset::chain(3);
    let a = alexandroff_reflection(&chain, KindTag::Sob)?;
    println!("\nΓ(chain 3) reflects onto the ideals: {:?}", a.target.carrier());

    println!();
    for space in SpaceId::ALL {
        for kind in KindTag::ALL {
            let iv = symbolic_kset_interval(space, kind)?;
            let k: Vec<String> = match &iv.resolved_extras {
                Some(e) => e.iter().map(ToString::to_string).collect(),
                None => vec!["unresolved".into()],
            };
            let outcome = match scott_kreflection(space, kind) {
                Ok(ScottKOutcome::Reflection(r)) => format!("→ {} ({} route)", r.target, r.route),
                Ok(ScottKOutcome::NotScott(_)) => "not a Scott space".into(),
                Ok(ScottKOutcome::ConditionsOnly(_)) => "conditions only".into(),
                Err(e) => format!("{e}"),
            };
            println!("{space:14} {kind:3} K extras [{}]  {outcome}", k.join(", "));
        }
    }

    for space in [SpaceId::NatChain, SpaceId::NatAb] {
        let c = symbolic_universal_property(space, 3, 4)?;
        println!("{space} universal property (targets ≤ 3): {:?} {:?}", c.status, c.counts);
    }
    Ok(())
}

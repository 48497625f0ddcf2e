//! Sobrification through the Hoare space of irreducible closed sets.

use reflekt::reflect::{extend_map, kset_interval, sobrify, KindTag};
use reflekt::symbolic::{irc_extras, irreducible, SpaceId};
use reflekt::topology::{alexandroff, hoare_space, scott_space};
use reflekt::{ContinuousMap, FinitePoset, FiniteSpace, Result};

fn main() -> Result<()> {
    let x = FiniteSpace::from_labels(&["p", "q", "r"], &[&[], &["p"], &["q"], &["p", "q"], &["p", "q", "r"]])?;
    println!("irreducible closed sets of X: {:?}", x.irreducibles().iter().map(|&c| x.show(c)).collect::<Vec<_>>());

    let r = sobrify(&x)?;
    println!("sobrification has {} points, η homeomorphism: {}", r.target.len(), r.eta.is_homeomorphism());
    for i in 0..x.len() {
        println!("  η({}) = {}", x.label(i), r.target.label(r.eta.apply(i)));
    }

    // A Hoare space over all nonempty closed sets: sober, but η is no longer onto.
    let family: Vec<_> = x.closed_sets().iter().copied().filter(|c| !c.is_empty()).collect();
    let h = hoare_space(&x, &family)?;
    println!("Hoare space over every nonempty closed set: {} points", h.space.len());
    let c = x.subset_of(&["p", "q"])?;
    println!("  □{} = {}", x.show(c), h.space.show(h.box_of(c)));

    // Every map into a sober space extends uniquely along η.
    let y = scott_space(&FinitePoset::chain(2))?;
    let f = ContinuousMap::new(x.clone(), y.clone(), vec![0, 0, 1])?;
    let ext = extend_map(&r, &f)?;
    println!("extension found among {} candidate factorings", ext.factorings);

    let p = FinitePoset::new(&["a", "b", "c"], &[("a", "c"), ("b", "c")])?;
    for kind in KindTag::ALL {
        let iv = kset_interval(&alexandroff(&p), kind)?;
        println!("{kind}: {} point closures, resolved by {:?}", iv.point_closures.len(), iv.resolved.map(|(_, j)| j));
    }

    // Infinite spaces: the irreducibles beyond the point closures.
    for space in SpaceId::ALL {
        let extras = irc_extras(space, 6)?;
        let shown: Vec<String> =
            extras.iter().map(|e| format!("{e} ({})", serde_json::to_value(irreducible(e).unwrap()).unwrap()["verdict"])).collect();
        println!("{space:14} extra irreducibles: {}", if shown.is_empty() { "none".into() } else { shown.join(", ") });
    }
    Ok(())
}

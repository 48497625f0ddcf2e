//! The Johnstone space: closed-set normal forms, irreducibility, and the
//! witness that neither it nor its top extension is well-filtered.

use reflekt::reflect::{scott_kreflection, KindTag, ScottKOutcome};
use reflekt::symbolic::{
    closed_catalog, irreducible, johnstone_forms, leq, split_search, wf_witness, ClosedSetRep, Point, SpaceId,
};
use reflekt::Result;

fn p(s: &str) -> Point {
    s.parse().expect("point")
}

fn main() -> Result<()> {
    let j = SpaceId::Johnstone;
    for (x, y) in [("(2,3)", "(2,ω)"), ("(1,2)", "(3,ω)"), ("(1,4)", "(3,ω)"), ("(0,ω)", "(1,ω)")] {
        println!("{x} ≤ {y}: {}", leq(j, &p(x), &p(y))?);
    }

    let bound = 4;
    println!("\n{} normal forms with description size ≤ {bound}", johnstone_forms(bound).len());
    let catalog = closed_catalog(j, bound);
    let (mut principal, mut other, mut reducible) = (0, Vec::new(), 0);
    for c in &catalog {
        if c.is_empty() {
            continue;
        }
        let verdict = irreducible(c)?;
        let search = split_search(c, 8)?;
        assert_eq!(verdict.is_irreducible(), search.is_none(), "decision rule and search disagree on {c}");
        match verdict {
            reflekt::symbolic::Irreducibility::Principal { .. } => principal += 1,
            reflekt::symbolic::Irreducibility::NonPrincipal => other.push(c.to_string()),
            reflekt::symbolic::Irreducibility::Reducible { .. } => reducible += 1,
        }
    }
    println!("principal {principal}, reducible {reducible}, non-principal irreducible {other:?}");

    let a = ClosedSetRep::point_closure(j, &p("(1,ω)"))?;
    let b = ClosedSetRep::point_closure(j, &p("(3,ω)"))?;
    println!("\n↓(1,ω) ∪ ↓(3,ω) = {}", a.union(&b)?);
    println!("↓(1,ω) ∩ ↓(3,ω) = {}", a.intersection(&b)?);

    for space in [j, SpaceId::JohnstoneTop] {
        let w = wf_witness(space)?;
        println!("\n{space}: family {}", w.family);
        println!("  open {}  intersection {}", w.open, w.intersection);
        for c in &w.clauses {
            println!("  [{}] {} ({} instances)", if c.passed { "ok" } else { "FAIL" }, c.name, c.checked);
        }
    }

    for kind in KindTag::ALL {
        match scott_kreflection(j, kind)? {
            ScottKOutcome::Reflection(r) => println!("{kind}: reflects onto Σ {} by {}", r.target, r.eta),
            ScottKOutcome::NotScott(c) => println!("{kind}: reflection is not a Scott space ({})", c.failing_hypothesis),
            ScottKOutcome::ConditionsOnly(c) => println!("{kind}: {}", c.note),
        }
    }
    Ok(())
}

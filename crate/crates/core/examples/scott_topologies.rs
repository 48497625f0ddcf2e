//! Scott, Alexandroff and upper topologies, finite and symbolic.

use reflekt::symbolic::{
    closed_catalog, closure, is_scott_closed, sup_directed, truncate, DirectedDesc, DirectedForm, NatSet, Point,
    SpaceId, SymbolicSet,
};
use reflekt::topology::{alexandroff, check, scott_space, upper_space};
use reflekt::{FinitePoset, Property, Result};

fn main() -> Result<()> {
    // On a finite poset every directed set has a greatest element and every
    // down-set is a finite union of principal ones, so the three agree.
    let p = FinitePoset::new(&["a", "b", "c", "d"], &[("a", "c"), ("b", "c"), ("c", "d")])?;
    for (name, x) in [("alexandroff", alexandroff(&p)), ("scott", scott_space(&p)?), ("upper", upper_space(&p))] {
        let closed: Vec<String> = x.closed_sets().iter().map(|&c| x.show(c)).collect();
        let props: Vec<String> =
            Property::ALL.iter().map(|&q| Ok(format!("{q}={}", check(&x, q)?.holds))).collect::<Result<_>>()?;
        println!("{name:12} {} closed sets  {}", closed.len(), props.join(" "));
        println!("             {}", closed.join(" "));
    }

    // On ℕ ∪ {a, b} the naturals have no supremum, so ℕ is Scott-closed.
    let ab = SpaceId::NatAb;
    println!("\nclosed sets of {ab}:");
    for c in closed_catalog(ab, 6) {
        println!("  {c}");
    }
    let evens = SymbolicSet::nat(ab, NatSet::periodic(2, &[0]), &[])?;
    println!("evens closed? {}  closure {}", is_scott_closed(&evens), closure(&evens));

    for space in [SpaceId::NatChain, SpaceId::NatTop, SpaceId::NatAb, SpaceId::NatAbc] {
        let sup = sup_directed(&DirectedDesc::new(space, DirectedForm::FullChain)?)?;
        println!("sup of ℕ in {space:8} {}", serde_json::to_string(&sup).unwrap());
    }
    let col = DirectedDesc::new(SpaceId::Johnstone, DirectedForm::ColumnCofinal { column: 3 })?;
    println!("sup of column 3 in johnstone {}", serde_json::to_string(&sup_directed(&col)?).unwrap());

    // Finite fragments carry the induced order.
    let t = truncate(ab, 3)?;
    println!("\n{ab} at level 3: {:?}", t.labels());
    let x = scott_space(&t)?;
    let pt: Point = "a".parse()?;
    println!("closure of a in the fragment: {}", x.show(x.point_closure(t.index_of(&pt.to_string())?)));
    Ok(())
}

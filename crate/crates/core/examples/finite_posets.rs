//! Order-theoretic basics on small posets: ideals, way-below, domain and lattice tests.

use reflekt::order::{count_labeled_relations, labeled_posets, unlabeled_posets};
use reflekt::{FinitePoset, Result};

fn describe(name: &str, p: &FinitePoset) -> Result<()> {
    println!("{name}: {} elements, Hasse edges {:?}", p.len(), p.hasse_pairs().iter().map(|&(a, b)| (p.label(a), p.label(b))).collect::<Vec<_>>());
    println!("  dcpo {}  complete lattice {}  noetherian {}", p.is_dcpo()?, p.is_complete_lattice()?, p.is_noetherian()?);
    println!("  continuous {}  algebraic {}", p.is_continuous_domain()?, p.is_algebraic_domain()?);
    let ideals = p.ideals()?;
    println!("  ideals: {}", ideals.ideals.iter().map(|&i| p.show(i)).collect::<Vec<_>>().join(" "));
    for (x, row) in p.way_below()?.iter().enumerate() {
        println!("  {} ≪ {}", p.label(x), p.show(*row));
    }
    Ok(())
}

fn main() -> Result<()> {
    let diamond = FinitePoset::new(&["0", "a", "b", "1"], &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])?;
    let vee = FinitePoset::new(&["a", "b", "c"], &[("a", "c"), ("b", "c")])?;
    describe("diamond", &diamond)?;
    describe("vee", &vee)?;
    describe("antichain(2)", &FinitePoset::antichain(2))?;

    let (top, t) = vee.add_top();
    println!("vee with a top: new element `{}`, lattice {}", top.label(t), top.is_complete_lattice()?);

    println!("\nposets by size");
    for n in 1..=4 {
        println!(
            "  n={n}: labeled {} (relation count {}), unlabeled {}",
            labeled_posets(n).len(),
            count_labeled_relations(n),
            unlabeled_posets(n)?.len()
        );
    }

    println!("\n{}", reflekt::dot::poset(&diamond, "diamond"));
    Ok(())
}

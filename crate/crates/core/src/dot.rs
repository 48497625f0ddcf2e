//! Graphviz output: Hasse diagrams only.

use std::fmt::Write;

use crate::order::FinitePoset;
use crate::topology::FiniteSpace;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Hasse diagram of a poset, larger elements drawn higher.
pub fn poset(p: &FinitePoset, name: &str) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(name)).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=plaintext];").unwrap();
    for l in p.labels() {
        writeln!(out, "  {};", quote(l)).unwrap();
    }
    for (i, j) in p.hasse_pairs() {
        writeln!(out, "  {} -> {};", quote(p.label(i)), quote(p.label(j))).unwrap();
    }
    out.push_str("}\n");
    out
}

/// Hasse diagram of the specialization order.
pub fn specialization(x: &FiniteSpace, name: &str) -> String {
    poset(&x.specialization(), name)
}

/// Hasse diagram of the closed sets under inclusion.
pub fn closed_lattice(x: &FiniteSpace, name: &str) -> String {
    let closed = x.closed_sets();
    let labels: Vec<String> = closed.iter().map(|&c| x.show(c)).collect();
    let lattice = FinitePoset::from_relation(labels, |a, b| closed[a].is_subset(closed[b]))
        .expect("inclusion is an order");
    poset(&lattice, name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_draws_covering_edges_only() {
        let d = poset(&FinitePoset::chain(3), "c3");
        assert_eq!(d.matches("->").count(), 2);
        assert!(d.contains("\"0\" -> \"1\""));
    }

    #[test]
    fn closed_lattice_of_sierpinski() {
        let d = closed_lattice(&FiniteSpace::sierpinski(), "s");
        assert!(d.contains("\"{}\" -> \"{0}\""));
        assert!(d.contains("\"{0}\" -> \"{0,1}\""));
    }
}

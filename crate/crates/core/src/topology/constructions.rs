use std::collections::BTreeSet;

use super::{ContinuousMap, FiniteSpace};
use crate::error::{Error, Result};
use crate::order::{fresh_label, FinitePoset};
use crate::subset::Subset;

/// All unions of subfamilies of `gens` (the empty union included).
pub(crate) fn union_closure(gens: &[Subset]) -> BTreeSet<Subset> {
    let mut fam = BTreeSet::from([Subset::EMPTY]);
    for &g in gens {
        let grown: Vec<Subset> = fam.iter().map(|&s| s | g).collect();
        fam.extend(grown);
    }
    fam
}

/// All intersections of subfamilies of `gens`, the empty one being `full`.
pub(crate) fn intersection_closure(gens: &[Subset], full: Subset) -> BTreeSet<Subset> {
    let mut fam = BTreeSet::from([full]);
    for &g in gens {
        let shrunk: Vec<Subset> = fam.iter().map(|&s| s & g).collect();
        fam.extend(shrunk);
    }
    fam
}

/// Topology whose closed sets are generated by `subbase` under finite unions and all intersections.
pub(crate) fn closed_topology(carrier: Vec<String>, subbase: &[Subset]) -> FiniteSpace {
    let full = Subset::full(carrier.len());
    let unions: Vec<Subset> = union_closure(subbase).into_iter().collect();
    let family = intersection_closure(&unions, full);
    FiniteSpace::from_unsorted(carrier, family.into_iter().collect())
}

/// Topology whose open sets are generated by `subbase` under finite intersections and all unions.
pub(crate) fn open_topology(carrier: Vec<String>, subbase: &[Subset]) -> FiniteSpace {
    let n = carrier.len();
    let full = Subset::full(n);
    let base: Vec<Subset> = intersection_closure(subbase, full).into_iter().collect();
    let opens = union_closure(&base);
    let mut closed: BTreeSet<Subset> = opens.into_iter().map(|u| u.complement(n)).collect();
    closed.insert(Subset::EMPTY);
    closed.insert(full);
    FiniteSpace::from_unsorted(carrier, closed.into_iter().collect())
}

/// `γ(P)`: every up-set is open; the closed sets are the down-sets.
pub fn alexandroff(p: &FinitePoset) -> FiniteSpace {
    let gens: Vec<Subset> = (0..p.len()).map(|x| p.down(x)).collect();
    FiniteSpace::from_canonical(p.labels().to_vec(), union_closure(&gens).into_iter().collect())
}

/// `σ(P)`: up-sets `U` such that a directed set whose sup lies in `U` meets `U`.
pub fn scott_space(p: &FinitePoset) -> Result<FiniteSpace> {
    let dsets = p.directed_with_sup()?;
    let n = p.len();
    let closed: Vec<Subset> = Subset::all(n)
        .filter(|&c| p.is_down_set(c))
        .filter(|&c| {
            let u = c.complement(n);
            dsets.iter().all(|&(d, s)| !u.contains(s) || d.intersects(u))
        })
        .collect();
    Ok(FiniteSpace::from_canonical(p.labels().to_vec(), closed))
}

/// `υ(P)`: generated by the complements of the principal ideals.
pub fn upper_space(p: &FinitePoset) -> FiniteSpace {
    let subbase: Vec<Subset> = (0..p.len()).map(|x| p.down(x)).collect();
    closed_topology(p.labels().to_vec(), &subbase)
}

/// `X_⊤`: a fresh point whose closure is everything; returns the space and its index.
pub fn x_top(x: &FiniteSpace) -> (FiniteSpace, usize) {
    let top = fresh_label(x.carrier(), "⊤");
    let mut carrier = x.carrier().to_vec();
    carrier.push(top.clone());
    let mut closed = x.closed_sets().to_vec();
    closed.push(Subset::full(carrier.len()));
    let space = FiniteSpace::from_unsorted(carrier, closed);
    let t = space.index(&top).expect("fresh point present");
    (space, t)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubspaceKind {
    Closed,
    Saturated,
}

pub fn subspace(x: &FiniteSpace, a: Subset, kind: SubspaceKind) -> Result<FiniteSpace> {
    let ok = match kind {
        SubspaceKind::Closed => x.is_closed(a),
        SubspaceKind::Saturated => a.is_subset(x.all()) && x.is_saturated(a),
    };
    if !ok {
        let kind = match kind {
            SubspaceKind::Closed => "closed",
            SubspaceKind::Saturated => "saturated",
        };
        return Err(Error::KindMismatch { subset: x.show(a), kind });
    }
    Ok(x.induced(a))
}

/// `E(f, g)`: the subspace where the two maps agree.
pub fn equalizer(f: &ContinuousMap, g: &ContinuousMap) -> Result<FiniteSpace> {
    if f.source() != g.source() || f.target() != g.target() {
        return Err(Error::SignatureMismatch);
    }
    let agree = Subset::from_indices((0..f.source().len()).filter(|&x| f.apply(x) == g.apply(x)));
    Ok(f.source().induced(agree))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opens(x: &FiniteSpace) -> Vec<Vec<String>> {
        x.open_sets().into_iter().map(|u| x.labels_of(u)).collect()
    }

    #[test]
    fn chain_two_gives_sierpinski() {
        let c = FinitePoset::chain(2);
        let s = scott_space(&c).unwrap();
        assert_eq!(s, FiniteSpace::sierpinski());
        assert_eq!(alexandroff(&c), s);
        assert_eq!(upper_space(&c), s);
    }

    #[test]
    fn antichain_is_discrete_three_ways() {
        let a = FinitePoset::antichain(2);
        let d = FiniteSpace::discrete(2);
        assert_eq!(alexandroff(&a), d);
        assert_eq!(scott_space(&a).unwrap(), d);
        assert_eq!(upper_space(&a), d);
        assert_eq!(d.open_sets().len(), 4);
    }

    #[test]
    fn chain_three_opens() {
        let s = scott_space(&FinitePoset::chain(3)).unwrap();
        assert_eq!(
            opens(&s),
            vec![vec![], vec!["2".to_string()], vec!["1".into(), "2".into()], vec!["0".into(), "1".into(), "2".into()]]
        );
    }

    #[test]
    fn x_top_of_sierpinski_is_chain_three() {
        let (t, top) = x_top(&FiniteSpace::sierpinski());
        let (c3, _) = FinitePoset::chain(2).add_top();
        assert_eq!(t, scott_space(&c3).unwrap());
        assert_eq!(t.point_closure(top), t.all());
        assert!(t.is_open(Subset::singleton(top)));
        let (one, _) = x_top(&FiniteSpace::discrete(1));
        assert_eq!(one.len(), 2);
        assert_eq!(one.closed_sets().len(), 3);
    }

    #[test]
    fn subspaces_check_their_kind() {
        let s = FiniteSpace::sierpinski();
        assert_eq!(subspace(&s, Subset::singleton(0), SubspaceKind::Closed).unwrap().len(), 1);
        assert_eq!(subspace(&s, Subset::singleton(1), SubspaceKind::Saturated).unwrap().len(), 1);
        assert_eq!(subspace(&s, s.all(), SubspaceKind::Closed).unwrap(), s);
        assert!(matches!(
            subspace(&s, Subset::singleton(1), SubspaceKind::Closed),
            Err(Error::KindMismatch { .. })
        ));
    }

    #[test]
    fn equalizer_examples() {
        let s = FiniteSpace::sierpinski();
        let id = ContinuousMap::new(s.clone(), s.clone(), vec![0, 1]).unwrap();
        let zero = ContinuousMap::new(s.clone(), s.clone(), vec![0, 0]).unwrap();
        let one = ContinuousMap::new(s.clone(), s.clone(), vec![1, 1]).unwrap();
        assert_eq!(equalizer(&id, &id).unwrap(), s);
        assert_eq!(equalizer(&id, &zero).unwrap().carrier(), &["0".to_string()]);
        assert!(equalizer(&zero, &one).unwrap().is_empty());
        let other = ContinuousMap::new(s.clone(), FiniteSpace::discrete(1), vec![0, 0]).unwrap();
        assert_eq!(equalizer(&id, &other), Err(Error::SignatureMismatch));
    }
}

//! Exhaustive generation of finite posets, isomorphism and monotone maps.

use std::collections::BTreeMap;

use super::{numeric_labels, FinitePoset};
use crate::error::Result;
use crate::limits;
use crate::subset::Subset;

/// Cap for isomorphism searches and canonical codes.
pub const ISO_CAP: usize = 8;

/// All posets on the labels `0..n`, each exactly once.
///
/// Grows posets one element at a time: the new element picks a down-set
/// below it and a disjoint up-set above it, with the down-set entirely
/// below the up-set.
pub fn labeled_posets(n: usize) -> Vec<FinitePoset> {
    let mut level: Vec<Vec<Subset>> = vec![Vec::new()];
    for m in 0..n {
        let mut next = Vec::new();
        for up in &level {
            let p = FinitePoset::from_closed_parts(numeric_labels(m), up.clone());
            let masks: Vec<Subset> = Subset::all(m).collect();
            let downs: Vec<Subset> = masks.iter().copied().filter(|&d| p.is_down_set(d)).collect();
            let ups: Vec<Subset> = masks.iter().copied().filter(|&u| p.is_up_set(u)).collect();
            for &d in &downs {
                let above_all = p.upper_bounds(d);
                for &u in &ups {
                    if u.intersects(d) || !u.is_subset(above_all) {
                        continue;
                    }
                    let mut rows: Vec<Subset> =
                        up.iter().enumerate().map(|(i, &r)| if d.contains(i) { r.with(m) | u } else { r }).collect();
                    rows.push(u.with(m));
                    next.push(rows);
                }
            }
        }
        level = next;
    }
    let labels = numeric_labels(n);
    level.into_iter().map(|up| FinitePoset::from_closed_parts(labels.clone(), up)).collect()
}

/// Number of partial orders on `n` labelled points, by testing every relation.
pub fn count_labeled_relations(n: usize) -> u64 {
    assert!(n <= 5, "brute-force relation count is limited to 5 points");
    let slots: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).collect();
    let mut count = 0;
    for bits in 0u64..1 << slots.len() {
        let mut rel = vec![0u32; n];
        for (k, &(i, j)) in slots.iter().enumerate() {
            if bits >> k & 1 == 1 {
                rel[i] |= 1 << j;
            }
        }
        let leq = |i: usize, j: usize| i == j || rel[i] >> j & 1 == 1;
        let antisymmetric = (0..n).all(|i| (0..n).all(|j| i == j || !(leq(i, j) && leq(j, i))));
        let transitive =
            (0..n).all(|i| (0..n).all(|j| !leq(i, j) || (0..n).all(|k| !leq(j, k) || leq(i, k))));
        if antisymmetric && transitive {
            count += 1;
        }
    }
    count
}

/// Smallest relation code over all relabellings; equal codes mean isomorphic posets.
pub fn canonical_code(p: &FinitePoset) -> Result<u64> {
    let n = p.len();
    limits::ensure("canonical code", n, ISO_CAP)?;
    let mut best = u64::MAX;
    let mut perm: Vec<usize> = (0..n).collect();
    permutations(&mut perm, 0, &mut |perm| {
        let mut code = 0u64;
        for i in 0..n {
            for j in 0..n {
                if p.leq(perm[i], perm[j]) {
                    code |= 1 << (i * n + j);
                }
            }
        }
        best = best.min(code);
    });
    Ok(best)
}

fn permutations(v: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == v.len() {
        visit(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permutations(v, k + 1, visit);
        v.swap(k, i);
    }
}

/// One representative per isomorphism class, in order of first appearance.
pub fn unlabeled_posets(n: usize) -> Result<Vec<FinitePoset>> {
    let mut seen = BTreeMap::new();
    let mut out = Vec::new();
    for p in labeled_posets(n) {
        let code = canonical_code(&p)?;
        if seen.insert(code, ()).is_none() {
            out.push(p);
        }
    }
    Ok(out)
}

/// An order isomorphism `p → q` as `iso[i] = j`, found by backtracking.
pub fn find_isomorphism(p: &FinitePoset, q: &FinitePoset) -> Result<Option<Vec<usize>>> {
    limits::ensure("isomorphism search", p.len().max(q.len()), ISO_CAP)?;
    if p.len() != q.len() {
        return Ok(None);
    }
    let sig = |x: &FinitePoset, i: usize| (x.up(i).len(), x.down(i).len());
    let mut iso = vec![usize::MAX; p.len()];
    let mut used = Subset::EMPTY;
    fn go(
        p: &FinitePoset,
        q: &FinitePoset,
        i: usize,
        iso: &mut Vec<usize>,
        used: &mut Subset,
        sig: &dyn Fn(&FinitePoset, usize) -> (usize, usize),
    ) -> bool {
        if i == p.len() {
            return true;
        }
        for j in 0..q.len() {
            if used.contains(j) || sig(p, i) != sig(q, j) {
                continue;
            }
            let consistent = (0..i).all(|k| p.leq(k, i) == q.leq(iso[k], j) && p.leq(i, k) == q.leq(j, iso[k]));
            if consistent {
                iso[i] = j;
                used.insert(j);
                if go(p, q, i + 1, iso, used, sig) {
                    return true;
                }
                used.remove(j);
            }
        }
        false
    }
    Ok(go(p, q, 0, &mut iso, &mut used, &sig).then_some(iso))
}

/// Every monotone map `p → q` as a graph.
pub fn monotone_maps(p: &FinitePoset, q: &FinitePoset) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut g = vec![0; p.len()];
    fn go(p: &FinitePoset, q: &FinitePoset, i: usize, g: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == p.len() {
            out.push(g.clone());
            return;
        }
        for v in 0..q.len() {
            let ok = (0..i).all(|k| (!p.leq(k, i) || q.leq(g[k], v)) && (!p.leq(i, k) || q.leq(v, g[k])));
            if ok {
                g[i] = v;
                go(p, q, i + 1, g, out);
            }
        }
    }
    go(p, q, 0, &mut g, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labeled_counts_match_known_sequence() {
        let counts: Vec<usize> = (0..=5).map(|n| labeled_posets(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 3, 19, 219, 4231]);
    }

    #[test]
    fn brute_force_relation_count_agrees() {
        for n in 0..=4 {
            assert_eq!(count_labeled_relations(n), labeled_posets(n).len() as u64);
        }
    }

    #[test]
    fn labeled_posets_are_distinct_and_valid() {
        let all = labeled_posets(4);
        let mut set = std::collections::HashSet::new();
        for p in &all {
            let rebuilt = FinitePoset::from_relation(p.labels().to_vec(), |i, j| p.leq(i, j)).unwrap();
            assert_eq!(&rebuilt, p);
            assert!(set.insert(p.clone()));
        }
    }

    #[test]
    fn unlabeled_counts() {
        let counts: Vec<usize> = (0..=5).map(|n| unlabeled_posets(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 16, 63]);
    }

    #[test]
    fn isomorphism_search() {
        let v = FinitePoset::new(&["x", "y", "z"], &[("x", "z"), ("y", "z")]).unwrap();
        let w = FinitePoset::new(&["p", "q", "r"], &[("q", "p"), ("r", "p")]).unwrap();
        let iso = find_isomorphism(&v, &w).unwrap().unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(v.leq(i, j), w.leq(iso[i], iso[j]));
            }
        }
        assert!(find_isomorphism(&v, &FinitePoset::chain(3)).unwrap().is_none());
        assert!(find_isomorphism(&FinitePoset::chain(9), &FinitePoset::chain(9)).is_err());
    }

    #[test]
    fn monotone_maps_between_chains() {
        // nondecreasing maps 3 → 3: C(5,3) = 10
        assert_eq!(monotone_maps(&FinitePoset::chain(3), &FinitePoset::chain(3)).len(), 10);
        assert_eq!(monotone_maps(&FinitePoset::antichain(2), &FinitePoset::chain(3)).len(), 9);
    }
}

mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use reflekt::order::{canonical_code, find_isomorphism};
use reflekt::reflect::{d_completion_alexandroff, k_reflection, ks_completion, kset_interval, sobrify, KindTag};
use reflekt::symbolic::{closed_catalog, irreducible, split_search, truncate, NatSet, Point, SpaceId};
use reflekt::topology::{alexandroff, check, hoare_space, scott_space};
use reflekt::{FinitePoset, FiniteSpace, Property, Subset};

fn poset_strategy(max: usize) -> impl Strategy<Value = FinitePoset> {
    (1..=max).prop_flat_map(|n| {
        (Just(n), proptest::collection::vec(any::<bool>(), n * n), Just(n)).prop_map(|(n, bits, _)| {
            // Relating i below j only for i < j keeps the relation acyclic.
            let labels: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
            let pairs: Vec<(String, String)> = (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .filter(|&(i, j)| i < j && bits[i * n + j])
                .map(|(i, j)| (labels[i].clone(), labels[j].clone()))
                .collect();
            FinitePoset::new(&labels, &pairs).expect("acyclic")
        })
    })
}

fn space_strategy() -> impl Strategy<Value = FiniteSpace> {
    poset_strategy(5).prop_map(|p| alexandroff(&p))
}

fn natset_strategy() -> impl Strategy<Value = NatSet> {
    prop_oneof![
        proptest::collection::btree_set(0u64..20, 0..6).prop_map(NatSet::finite),
        proptest::collection::btree_set(0u64..20, 0..6).prop_map(NatSet::cofinite),
        (1usize..5, proptest::collection::vec(0usize..5, 0..4)).prop_map(|(p, r)| {
            let r: Vec<usize> = r.into_iter().filter(|&x| x < p).collect();
            NatSet::periodic(p, &r)
        }),
        (0u64..15).prop_map(NatSet::upto),
        (0u64..15).prop_map(NatSet::from),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kset_families_are_sandwiched(x in space_strategy(), k in 0usize..3) {
        let kind = KindTag::ALL[k];
        let iv = kset_interval(&x, kind).unwrap();
        for c in &iv.point_closures { prop_assert!(iv.lower.contains(c)); }
        for c in &iv.lower { prop_assert!(iv.upper.contains(c)); }
        let (family, _) = iv.resolved.expect("finite spaces resolve");
        for c in &family { prop_assert!(iv.upper.contains(c)); }
        for c in &iv.lower { prop_assert!(family.contains(c)); }
    }

    #[test]
    fn closure_of_image_is_the_box(x in space_strategy(), bits in any::<u64>()) {
        let r = sobrify(&x).unwrap();
        let a = Subset::from_bits(bits) & x.all();
        let lhs = r.target.closure(r.eta.image(a));
        let c = x.closure(a);
        let boxed = Subset::from_indices(r.members.iter().enumerate().filter(|(_, m)| m.is_subset(c)).map(|(i, _)| i));
        prop_assert_eq!(lhs, boxed);
    }

    #[test]
    fn hoare_spaces_are_sober(x in space_strategy(), pick in any::<u64>()) {
        let nonempty: Vec<Subset> = x.closed_sets().iter().copied().filter(|c| !c.is_empty()).collect();
        let family: Vec<Subset> = nonempty.iter().enumerate().filter(|(i, _)| pick >> (i % 64) & 1 == 1).map(|(_, &c)| c).collect();
        prop_assume!(!family.is_empty());
        let h = hoare_space(&x, &family).unwrap();
        prop_assert!(check(&h.space, Property::Sober).unwrap().holds);
    }

    #[test]
    fn finite_reflections_are_homeomorphisms(x in space_strategy(), k in 0usize..3) {
        let r = k_reflection(&x, KindTag::ALL[k]).unwrap();
        prop_assert!(r.eta.is_homeomorphism());
    }

    #[test]
    fn completions_agree_with_ideals(p in poset_strategy(5)) {
        let d = d_completion_alexandroff(&p).unwrap();
        for kind in KindTag::ALL {
            let c = ks_completion(&p, kind).unwrap();
            prop_assert!(find_isomorphism(&c.target, &d.target).unwrap().is_some());
        }
        prop_assert_eq!(canonical_code(&d.target).unwrap(), canonical_code(&p).unwrap());
    }

    #[test]
    fn scott_equals_alexandroff_on_finite_posets(p in poset_strategy(6)) {
        prop_assert_eq!(scott_space(&p).unwrap(), alexandroff(&p));
    }

    #[test]
    fn poset_json_round_trips(p in poset_strategy(6), closed in any::<bool>()) {
        prop_assert_eq!(FinitePoset::from_json(&p.to_json(closed)).unwrap(), p);
    }

    #[test]
    fn natset_algebra(a in natset_strategy(), b in natset_strategy()) {
        let (u, i, d, c) = (a.union(&b), a.intersection(&b), a.difference(&b), a.complement());
        for n in 0..64 {
            prop_assert_eq!(u.contains(n), a.contains(n) || b.contains(n));
            prop_assert_eq!(i.contains(n), a.contains(n) && b.contains(n));
            prop_assert_eq!(d.contains(n), a.contains(n) && !b.contains(n));
            prop_assert_eq!(c.contains(n), !a.contains(n));
        }
        prop_assert_eq!(a.is_subset(&b), a.union(&b) == b);
        prop_assert_eq!(c.complement(), a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn symbolic_ops_match_truncations(s in 0usize..8, seed in any::<u64>()) {
        let space = SpaceId::ALL[s];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let catalog = common::catalog(space);
        let n = rand::Rng::gen_range(&mut rng, 1..=common::max_level(space).min(5));
        let level = common::Level::new(space, n);
        let a = common::random_closed(space, &catalog, &mut rng);
        let b = common::random_closed(space, &catalog, &mut rng);
        let x = level.points[rand::Rng::gen_range(&mut rng, 0..level.points.len())];
        prop_assert_eq!(common::probe(space, &level, &a, &b, &x, &mut rng), Ok(()));
    }

    #[test]
    fn normal_forms_are_canonical(s in 0usize..8, seed in any::<u64>()) {
        let space = SpaceId::ALL[s];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let catalog = common::catalog(space);
        let a = common::random_closed(space, &catalog, &mut rng);
        let b = common::random_closed(space, &catalog, &mut rng);
        let mutual = a.is_subset(&b).unwrap() && b.is_subset(&a).unwrap();
        prop_assert_eq!(a == b, mutual);
        if space.family() != reflekt::symbolic::Family::Johnstone {
            // Random sets only use points below level 14, so level 16 separates them.
            let level = common::Level::new(space, 16);
            prop_assert_eq!(a == b, level.image(&a.to_set()) == level.image(&b.to_set()));
        }
    }

    #[test]
    fn points_display_and_parse(s in 0usize..8, n in 1u64..6, i in any::<prop::sample::Index>()) {
        let space = SpaceId::ALL[s];
        let pts = reflekt::symbolic::fragment(space, n);
        let p = pts[i.index(pts.len())];
        prop_assert_eq!(p.to_string().parse::<Point>().unwrap(), p);
        prop_assert_eq!(format!("builtin:{space}").parse::<SpaceId>().unwrap(), space);
        prop_assert_eq!(truncate(space, n).unwrap().len(), pts.len());
    }
}

#[test]
fn decision_rule_matches_search_on_small_catalogs() {
    for space in SpaceId::ALL {
        for rep in closed_catalog(space, 4).into_iter().filter(|c| !c.is_empty()) {
            let decided = irreducible(&rep).unwrap();
            let found = split_search(&rep, 6).unwrap();
            assert_eq!(decided.is_irreducible(), found.is_none(), "{rep}");
        }
    }
}

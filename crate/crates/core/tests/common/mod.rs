//! Finite oracle for the symbolic set algebra: every operation is evaluated on
//! a truncation with plain bitset and poset arithmetic and compared.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use reflekt::symbolic::{closed_catalog, closure, fragment, leq, truncate, ClosedSetRep, Family, Point, SpaceId, SymbolicSet};
use reflekt::topology::scott_space;
use reflekt::{Direction, FinitePoset, FiniteSpace, Subset};

/// Deepest truncation level whose fragment fits a 64-point carrier.
pub fn max_level(space: SpaceId) -> u64 {
    match space.family() {
        Family::Johnstone => 7,
        _ => 12,
    }
}

/// A truncation with its points and, when small, its Scott space.
pub struct Level {
    pub n: u64,
    pub poset: FinitePoset,
    pub points: Vec<Point>,
    pub space: Option<FiniteSpace>,
}

impl Level {
    pub fn new(space: SpaceId, n: u64) -> Level {
        let poset = truncate(space, n).expect("truncation");
        let points: Vec<Point> = poset.labels().iter().map(|l| l.parse().expect("point label")).collect();
        // Scott closed sets are enumerated from all subsets, so only small levels get a space.
        let space = (poset.len() <= 12).then(|| scott_space(&poset).expect("scott space"));
        Level { n, poset, points, space }
    }

    pub fn image(&self, s: &SymbolicSet) -> Subset {
        Subset::from_indices((0..self.points.len()).filter(|&i| s.contains(&self.points[i])))
    }

    pub fn index(&self, p: &Point) -> usize {
        self.poset.index_of(&p.to_string()).expect("point in fragment")
    }
}

pub fn random_closed(space: SpaceId, catalog: &[ClosedSetRep], rng: &mut impl Rng) -> ClosedSetRep {
    match rng.gen_range(0..3) {
        0 => catalog.choose(rng).expect("nonempty catalog").clone(),
        1 => {
            let wide = fragment(space, max_level(space) + 2);
            let k = rng.gen_range(0..=3);
            let pts: Vec<Point> = (0..k).map(|_| *wide.choose(rng).expect("points")).collect();
            closure(&SymbolicSet::from_points(space, &pts).expect("points of the space"))
        }
        _ => {
            let a = catalog.choose(rng).expect("nonempty catalog");
            let b = catalog.choose(rng).expect("nonempty catalog");
            if rng.gen() { a.union(b).expect("same space") } else { a.intersection(b).expect("same space") }
        }
    }
}

pub fn catalog(space: SpaceId) -> Vec<ClosedSetRep> {
    closed_catalog(space, 6)
}

/// Runs one (set, set, point) probe; returns a description of the first mismatch.
pub fn probe(space: SpaceId, level: &Level, a: &ClosedSetRep, b: &ClosedSetRep, x: &Point, rng: &mut impl Rng) -> Result<(), String> {
    let fail = |what: &str| Err(format!("{space} level {}: {what} for A = {a}, B = {b}, x = {x}", level.n));
    let p = &level.poset;
    let (ia, ib) = (level.image(&a.to_set()), level.image(&b.to_set()));
    let ix = level.index(x);

    if level.image(&a.union(b).unwrap().to_set()) != (ia | ib) {
        return fail("union");
    }
    if level.image(&a.intersection(b).unwrap().to_set()) != (ia & ib) {
        return fail("intersection");
    }
    if level.image(&a.to_set().complement()) != ia.complement(level.points.len()) {
        return fail("complement");
    }
    if !p.is_down_set(ia) {
        return fail("closed set restricts to a non-down-set");
    }
    let cx = ClosedSetRep::point_closure(space, x).unwrap();
    if cx.is_subset(a).unwrap() != ia.contains(ix) {
        return fail("membership through the point closure");
    }
    if level.image(&cx.to_set()) != p.closure(Subset::singleton(ix), Direction::Down) {
        return fail("point closure");
    }
    let y = level.points[rng.gen_range(0..level.points.len())];
    let iy = level.index(&y);
    if leq(space, x, &y).unwrap() != p.leq(ix, iy) || cx.contains(&y) != p.leq(iy, ix) {
        return fail("order");
    }
    let sub = a.is_subset(b).unwrap();
    if sub && !ia.is_subset(ib) || sub != (a.union(b).unwrap() == *b) {
        return fail("inclusion");
    }
    let s = Subset::from_indices((0..level.points.len()).filter(|_| rng.gen_ratio(1, 4)));
    let pts: Vec<Point> = s.iter().map(|i| level.points[i]).collect();
    let cl = level.image(&closure(&SymbolicSet::from_points(space, &pts).unwrap()).to_set());
    if cl != p.closure(s, Direction::Down) {
        return fail("closure");
    }
    if let Some(fs) = &level.space {
        if fs.closure(s) != cl || !fs.is_closed(ia) || fs.point_closure(ix) != p.closure(Subset::singleton(ix), Direction::Down) {
            return fail("finite topology");
        }
    }
    Ok(())
}

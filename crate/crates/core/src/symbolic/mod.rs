//! The fixed catalog of countable example spaces, handled symbolically.
//!
//! | tag             | carrier                  | order                                        |
//! |-----------------|--------------------------|----------------------------------------------|
//! | `nat`           | ℕ                        | usual                                        |
//! | `nat-top`       | ℕ ∪ {⊤}                  | usual, ⊤ above all                           |
//! | `nat-ab`        | ℕ ∪ {a, b}               | n < a, n < b, a and b incomparable           |
//! | `q`             | ℕ ∪ {a, b, c}            | n < c < a, b                                 |
//! | `johnstone`     | ℕ × (ℕ ∪ {ω})            | (j,k) ≤ (m,n) iff j = m, k ≤ n or n = ω, k ≤ m |
//! | `johnstone-top` | the above ∪ {⊤}          | ⊤ above all                                  |
//! | `cofinite`      | ℕ                        | discrete (cofinite topology)                 |
//! | `cofinite-top`  | ℕ ∪ {⊤}                  | ⊤ above all                                  |
//!
//! The first six carry their Scott topologies.

mod closed;
mod compact;
mod directed;
mod eta;
mod irreducible;
mod natset;
mod sets;
mod witness;

pub use closed::{closure, is_scott_closed, ClosedForm, ClosedSetRep, Column, JForm};
pub use compact::{CompactForm, CompactSatRep, CompactVerdict, CoverWitness};
pub use directed::{sup_directed, DirectedDesc, DirectedForm, NoSup, SupOutcome};
pub use eta::{eta_sigma_continuity, irc_target, EtaVerdict, EtaWitness};
pub use irreducible::{
    closed_catalog, irc_extras, irreducible, johnstone_forms, split_search, Irreducibility, JOHNSTONE_BOUND,
};
pub use natset::NatSet;
pub use sets::{ColumnSet, SymbolicSet};
pub use witness::{wf_witness, Clause, WfWitness, WINDOW};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::order::FinitePoset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SpaceId {
    #[serde(rename = "nat")]
    NatChain,
    #[serde(rename = "nat-top")]
    NatTop,
    #[serde(rename = "nat-ab")]
    NatAb,
    #[serde(rename = "q")]
    NatAbc,
    #[serde(rename = "johnstone")]
    Johnstone,
    #[serde(rename = "johnstone-top")]
    JohnstoneTop,
    #[serde(rename = "cofinite")]
    CofiniteNat,
    #[serde(rename = "cofinite-top")]
    CofiniteNatTop,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    NatLike,
    Johnstone,
    Cofinite,
}

impl SpaceId {
    pub const ALL: [SpaceId; 8] = [
        SpaceId::NatChain,
        SpaceId::NatTop,
        SpaceId::NatAb,
        SpaceId::NatAbc,
        SpaceId::Johnstone,
        SpaceId::JohnstoneTop,
        SpaceId::CofiniteNat,
        SpaceId::CofiniteNatTop,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            SpaceId::NatChain => "nat",
            SpaceId::NatTop => "nat-top",
            SpaceId::NatAb => "nat-ab",
            SpaceId::NatAbc => "q",
            SpaceId::Johnstone => "johnstone",
            SpaceId::JohnstoneTop => "johnstone-top",
            SpaceId::CofiniteNat => "cofinite",
            SpaceId::CofiniteNatTop => "cofinite-top",
        }
    }

    pub fn family(self) -> Family {
        match self {
            SpaceId::NatChain | SpaceId::NatTop | SpaceId::NatAb | SpaceId::NatAbc => Family::NatLike,
            SpaceId::Johnstone | SpaceId::JohnstoneTop => Family::Johnstone,
            SpaceId::CofiniteNat | SpaceId::CofiniteNatTop => Family::Cofinite,
        }
    }

    pub fn has_top(self) -> bool {
        matches!(self, SpaceId::NatTop | SpaceId::JohnstoneTop | SpaceId::CofiniteNatTop)
    }

    /// The points besides ℕ or the Johnstone grid.
    pub fn specials(self) -> &'static [Special] {
        match self {
            SpaceId::NatAb => &[Special::A, Special::B],
            SpaceId::NatAbc => &[Special::A, Special::B, Special::C],
            s if s.has_top() => &[Special::Top],
            _ => &[],
        }
    }

    /// The space this one adjoins a top to.
    pub fn base(self) -> Option<SpaceId> {
        match self {
            SpaceId::NatTop => Some(SpaceId::NatChain),
            SpaceId::JohnstoneTop => Some(SpaceId::Johnstone),
            SpaceId::CofiniteNatTop => Some(SpaceId::CofiniteNat),
            _ => None,
        }
    }

    /// Whether the topology is the Scott topology of the order.
    pub fn is_scott(self) -> bool {
        self.family() != Family::Cofinite
    }

    pub fn check_point(self, p: &Point) -> Result<()> {
        let ok = match (self.family(), p) {
            (Family::Johnstone, Point::J(..)) => true,
            (Family::NatLike | Family::Cofinite, Point::Nat(_)) => true,
            (_, Point::Special(s)) => self.specials().contains(s),
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::BadPoint { space: self.tag().into(), point: p.to_string() })
        }
    }
}

impl fmt::Display for SpaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.tag())
    }
}

impl FromStr for SpaceId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.strip_prefix("builtin:").unwrap_or(s);
        SpaceId::ALL
            .into_iter()
            .find(|id| id.tag() == s)
            .or(match s {
                "nat-abc" | "natabc" => Some(SpaceId::NatAbc),
                "natab" => Some(SpaceId::NatAb),
                "cofinite-nat" => Some(SpaceId::CofiniteNat),
                "cofinite-nat-top" => Some(SpaceId::CofiniteNatTop),
                _ => None,
            })
            .ok_or_else(|| Error::Parse(format!("unknown builtin space `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Special {
    C,
    A,
    B,
    Top,
}

impl Special {
    pub fn name(self) -> &'static str {
        match self {
            Special::A => "a",
            Special::B => "b",
            Special::C => "c",
            Special::Top => "⊤",
        }
    }
}

/// A row index of a Johnstone column; `Omega` tops the column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Level {
    Fin(u64),
    Omega,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Point {
    Nat(u64),
    Special(Special),
    J(u64, Level),
}

impl Point {
    pub const TOP: Point = Point::Special(Special::Top);
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Nat(n) => write!(f, "{n}"),
            Point::Special(s) => f.write_str(s.name()),
            Point::J(j, Level::Fin(k)) => write!(f, "({j},{k})"),
            Point::J(j, Level::Omega) => write!(f, "({j},ω)"),
        }
    }
}

impl FromStr for Point {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("cannot read point `{s}`"));
        let t = s.trim();
        match t {
            "a" => return Ok(Point::Special(Special::A)),
            "b" => return Ok(Point::Special(Special::B)),
            "c" => return Ok(Point::Special(Special::C)),
            "⊤" | "top" => return Ok(Point::TOP),
            _ => {}
        }
        if let Some(inner) = t.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
            let (j, k) = inner.split_once(',').ok_or_else(bad)?;
            let j = j.trim().parse().map_err(|_| bad())?;
            let k = match k.trim() {
                "ω" | "w" | "omega" => Level::Omega,
                k => Level::Fin(k.parse().map_err(|_| bad())?),
            };
            return Ok(Point::J(j, k));
        }
        t.parse().map(Point::Nat).map_err(|_| bad())
    }
}

/// The order of the space; for the cofinite spaces, the specialization order.
pub fn leq(space: SpaceId, x: &Point, y: &Point) -> Result<bool> {
    space.check_point(x)?;
    space.check_point(y)?;
    Ok(leq_unchecked(space, x, y))
}

pub(crate) fn leq_unchecked(space: SpaceId, x: &Point, y: &Point) -> bool {
    use Point::{Nat, Special as S};
    if x == y || *y == Point::TOP {
        return true;
    }
    if *x == Point::TOP {
        return false;
    }
    match space.family() {
        Family::NatLike => match (x, y) {
            (Nat(m), Nat(n)) => m <= n,
            (Nat(_), S(_)) => true,
            (S(Special::C), S(Special::A | Special::B)) => true,
            _ => false,
        },
        Family::Cofinite => false,
        Family::Johnstone => match (x, y) {
            (Point::J(j, k), Point::J(m, n)) => {
                (j == m && k <= n) || (*n == Level::Omega && matches!(k, Level::Fin(k) if k <= m))
            }
            _ => false,
        },
    }
}

/// Level-`n` fragment: naturals (or grid columns and rows) below `n` plus the named points.
pub fn fragment(space: SpaceId, n: u64) -> Vec<Point> {
    let mut pts = Vec::new();
    match space.family() {
        Family::NatLike | Family::Cofinite => pts.extend((0..n).map(Point::Nat)),
        Family::Johnstone => {
            for j in 0..n {
                pts.extend((0..n).map(|k| Point::J(j, Level::Fin(k))));
                pts.push(Point::J(j, Level::Omega));
            }
        }
    }
    pts.extend(space.specials().iter().map(|&s| Point::Special(s)));
    pts
}

/// The induced order on the level-`n` fragment, labelled by point names.
pub fn truncate(space: SpaceId, n: u64) -> Result<FinitePoset> {
    if n == 0 {
        return Err(Error::Unsupported("truncation level must be at least 1".into()));
    }
    let pts = fragment(space, n);
    let labels = pts.iter().map(Point::to_string).collect();
    FinitePoset::from_relation(labels, |i, j| leq_unchecked(space, &pts[i], &pts[j]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Point {
        s.parse().unwrap()
    }

    #[test]
    fn johnstone_order_rule() {
        let j = SpaceId::Johnstone;
        assert!(leq(j, &p("(2,3)"), &p("(2,ω)")).unwrap());
        assert!(leq(j, &p("(1,2)"), &p("(3,ω)")).unwrap());
        assert!(!leq(j, &p("(1,4)"), &p("(3,ω)")).unwrap());
        assert!(!leq(j, &p("(1,ω)"), &p("(3,ω)")).unwrap());
        assert!(!leq(j, &p("(1,2)"), &p("(3,5)")).unwrap());
        assert!(leq(SpaceId::JohnstoneTop, &p("(1,ω)"), &p("⊤")).unwrap());
    }

    #[test]
    fn nat_ab_order() {
        let s = SpaceId::NatAb;
        assert!(!leq(s, &p("a"), &p("b")).unwrap());
        assert!(leq(s, &p("7"), &p("b")).unwrap());
        assert!(matches!(leq(s, &p("c"), &p("a")), Err(Error::BadPoint { .. })));
        assert!(leq(SpaceId::NatAbc, &p("c"), &p("a")).unwrap());
    }

    #[test]
    fn truncations() {
        assert_eq!(truncate(SpaceId::Johnstone, 2).unwrap().len(), 6);
        let c = truncate(SpaceId::NatChain, 3).unwrap();
        assert_eq!(c, FinitePoset::new(&["0", "1", "2"], &[("0", "1"), ("1", "2")]).unwrap());
        let ab = truncate(SpaceId::NatAb, 2).unwrap();
        let expect =
            FinitePoset::new(&["0", "1", "a", "b"], &[("0", "1"), ("1", "a"), ("1", "b")]).unwrap();
        assert_eq!(ab, expect);
        assert!(truncate(SpaceId::NatAb, 0).is_err());
    }

    #[test]
    fn points_round_trip_through_text() {
        for s in ["(3,ω)", "(0,12)", "a", "⊤", "41"] {
            assert_eq!(p(s).to_string(), s);
        }
        assert_eq!(p("(3,w)"), Point::J(3, Level::Omega));
        assert!("(3)".parse::<Point>().is_err());
    }

    #[test]
    fn tags_round_trip() {
        for id in SpaceId::ALL {
            assert_eq!(id.tag().parse::<SpaceId>().unwrap(), id);
            assert_eq!(serde_json::to_string(&id).unwrap(), format!("\"{}\"", id.tag()));
        }
        assert_eq!("builtin:q".parse::<SpaceId>().unwrap(), SpaceId::NatAbc);
    }
}

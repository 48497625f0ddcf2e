//! Suprema of described directed sets.

use serde::{Deserialize, Serialize};

use super::{leq_unchecked, Family, Level, Point, SpaceId};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "form")]
pub enum DirectedForm {
    Points { points: Vec<Point> },
    /// The finite rows of one Johnstone column.
    ColumnCofinal { column: u64 },
    /// All of ℕ.
    FullChain,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DirectedDesc {
    pub space: SpaceId,
    pub form: DirectedForm,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "reason")]
pub enum NoSup {
    NoUpperBound,
    /// Upper bounds exist, but the minimal ones are pairwise incomparable.
    IncomparableMinimal { bounds: Vec<Point> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "outcome")]
pub enum SupOutcome {
    Sup { point: Point },
    NoSup(NoSup),
}

impl DirectedDesc {
    pub fn new(space: SpaceId, form: DirectedForm) -> Result<Self> {
        match &form {
            DirectedForm::Points { points } => {
                if points.is_empty() {
                    return Err(Error::NotDirected("the empty set".into()));
                }
                for p in points {
                    space.check_point(p)?;
                }
                if greatest(space, points).is_none() {
                    return Err(Error::NotDirected(format!("{points:?} has no greatest element")));
                }
            }
            DirectedForm::ColumnCofinal { .. } if space.family() != Family::Johnstone => {
                return Err(Error::Unsupported(format!("columns exist only in Johnstone spaces, not {space}")));
            }
            DirectedForm::FullChain if space.family() == Family::Cofinite => {
                return Err(Error::NotDirected(format!("ℕ is an antichain in {space}")));
            }
            DirectedForm::FullChain if space.family() == Family::Johnstone => {
                return Err(Error::Unsupported(format!("{space} has no full chain")));
            }
            _ => {}
        }
        Ok(DirectedDesc { space, form })
    }
}

/// A finite set is directed exactly when it has a greatest element.
fn greatest(space: SpaceId, points: &[Point]) -> Option<Point> {
    points.iter().copied().find(|g| points.iter().all(|p| leq_unchecked(space, p, g)))
}

pub fn sup_directed(d: &DirectedDesc) -> Result<SupOutcome> {
    let space = d.space;
    let d = DirectedDesc::new(space, d.form.clone())?;
    Ok(match d.form {
        DirectedForm::Points { points } => SupOutcome::Sup { point: greatest(space, &points).expect("checked") },
        DirectedForm::ColumnCofinal { column } => SupOutcome::Sup { point: Point::J(column, Level::Omega) },
        DirectedForm::FullChain => {
            // Upper bounds of ℕ are exactly the named points.
            let bounds: Vec<Point> = space.specials().iter().map(|&s| Point::Special(s)).collect();
            let minimal: Vec<Point> = bounds
                .iter()
                .copied()
                .filter(|b| !bounds.iter().any(|c| c != b && leq_unchecked(space, c, b)))
                .collect();
            match minimal.as_slice() {
                [] => SupOutcome::NoSup(NoSup::NoUpperBound),
                [p] => SupOutcome::Sup { point: *p },
                _ => SupOutcome::NoSup(NoSup::IncomparableMinimal { bounds: minimal }),
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::Special;

    fn sup(space: SpaceId, form: DirectedForm) -> SupOutcome {
        sup_directed(&DirectedDesc { space, form }).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(
            sup(SpaceId::Johnstone, DirectedForm::ColumnCofinal { column: 2 }),
            SupOutcome::Sup { point: Point::J(2, Level::Omega) }
        );
        assert_eq!(sup(SpaceId::NatChain, DirectedForm::FullChain), SupOutcome::NoSup(NoSup::NoUpperBound));
        assert_eq!(
            sup(SpaceId::NatAb, DirectedForm::FullChain),
            SupOutcome::NoSup(NoSup::IncomparableMinimal { bounds: vec![Point::Special(Special::A), Point::Special(Special::B)] })
        );
        assert_eq!(sup(SpaceId::NatAbc, DirectedForm::FullChain), SupOutcome::Sup { point: Point::Special(Special::C) });
        assert_eq!(sup(SpaceId::NatTop, DirectedForm::FullChain), SupOutcome::Sup { point: Point::TOP });
    }

    #[test]
    fn rejects_non_directed() {
        let pts = vec![Point::J(0, Level::Fin(1)), Point::J(1, Level::Fin(0))];
        let r = sup_directed(&DirectedDesc { space: SpaceId::Johnstone, form: DirectedForm::Points { points: pts } });
        assert!(matches!(r, Err(Error::NotDirected(_))));
        let r = DirectedDesc::new(SpaceId::CofiniteNat, DirectedForm::FullChain);
        assert!(matches!(r, Err(Error::NotDirected(_))));
    }
}

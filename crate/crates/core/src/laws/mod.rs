//! The law catalog: each law is an executable check of one theorem instance at
//! a fixed scale, reported as a [`Certificate`].

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::certificate::Certificate;
use crate::error::{Error, Result};

mod finite;
mod symbolic;

/// Scale parameters and their defaults.
pub const SCALE_KEYS: [(&str, u64, &str); 8] = [
    ("carrier", 4, "largest carrier for exhaustive space sweeps"),
    ("poset", 5, "largest carrier for poset sweeps"),
    ("maps", 4, "largest carrier for sweeps over pairs of posets and their maps"),
    ("equalizer", 3, "largest codomain for equalizer sweeps"),
    ("bound", 6, "description bound for Johnstone closed-set forms"),
    ("fragment", 12, "fragment level for the bounded splitting search"),
    ("target", 4, "largest target in universal-property checks"),
    ("steps", 6, "steps in generated eventually-constant maps"),
];

#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize)]
pub struct Scale(BTreeMap<String, u64>);

impl Scale {
    pub fn get(&self, key: &str) -> u64 {
        self.0.get(key).copied().unwrap_or_else(|| {
            SCALE_KEYS.iter().find(|(k, _, _)| *k == key).map(|(_, v, _)| *v).expect("known scale key")
        })
    }

    pub fn set(&mut self, key: &str, value: u64) -> Result<()> {
        if !SCALE_KEYS.iter().any(|(k, _, _)| *k == key) {
            return Err(Error::Parse(format!("unknown scale key `{key}`")));
        }
        self.0.insert(key.to_string(), value);
        Ok(())
    }

    /// Reads `key=value`.
    pub fn apply(&mut self, assignment: &str) -> Result<()> {
        let (k, v) = assignment
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected key=value, got `{assignment}`")))?;
        let v = v.trim().parse().map_err(|_| Error::Parse(format!("`{v}` is not a number")))?;
        self.set(k.trim(), v)
    }

    pub(crate) fn usize(&self, key: &str) -> usize {
        self.get(key) as usize
    }
}

pub struct Law {
    pub id: &'static str,
    pub slug: &'static str,
    pub statement: &'static str,
    check: fn(&Scale) -> Result<Certificate>,
}

impl Law {
    pub fn name(&self) -> String {
        format!("{}-{}", self.id, self.slug)
    }
}

pub static CATALOG: [Law; 18] = [
    Law {
        id: "L1",
        slug: "finite-collapse",
        statement: "every finite T0 space is sober, well-filtered and a d-space, with point closures, directed closures and irreducibles all equal",
        check: finite::l1,
    },
    Law { id: "L2", slug: "hoare-sober", statement: "the Hoare space over any family of nonempty closed sets is sober", check: finite::l2 },
    Law {
        id: "L3",
        slug: "closure-lemma",
        statement: "in the sobrification, the closure of η(A) is the box of the closure of A",
        check: finite::l3,
    },
    Law { id: "L4", slug: "equalizer", statement: "equalizers keep sobriety, well-filteredness and the d-space property", check: finite::l4 },
    Law { id: "L5", slug: "hereditary", statement: "closed and saturated subspaces keep the three properties", check: finite::l5 },
    Law {
        id: "L6",
        slug: "top-preservation",
        statement: "adjoining a top preserves and reflects the three properties, and the Scott space of P with a top is the Scott space of P plus a top",
        check: finite::l6,
    },
    Law {
        id: "L7",
        slug: "scott-cont-equiv",
        statement: "a monotone map is continuous between Scott spaces iff it preserves directed suprema",
        check: finite::l7,
    },
    Law { id: "L8", slug: "continuous-domain-sober", statement: "the Scott space of a continuous domain is sober", check: finite::l8 },
    Law { id: "L9", slug: "complete-lattice-wf", statement: "the Scott space of a complete lattice is well-filtered", check: finite::l9 },
    Law {
        id: "L10",
        slug: "johnstone-irc",
        statement: "the irreducible closed sets of the Johnstone space are the principal ideals and the whole space",
        check: symbolic::l10,
    },
    Law {
        id: "L11",
        slug: "johnstone-not-wf",
        statement: "the Johnstone space and its top extension are not well-filtered",
        check: symbolic::l11,
    },
    Law {
        id: "L12",
        slug: "johnstone-not-scott",
        statement: "the sobrification and well-filtered reflection of the Johnstone space are not Scott spaces",
        check: symbolic::l12,
    },
    Law {
        id: "L13",
        slug: "nat-reflection",
        statement: "the Scott space of ℕ reflects onto the Scott space of ℕ with a top by the inclusion",
        check: symbolic::l13,
    },
    Law {
        id: "L14",
        slug: "natab-reflection",
        statement: "the Scott space of ℕ ∪ {a,b} reflects onto the Scott space of Q",
        check: symbolic::l14,
    },
    Law {
        id: "L15",
        slug: "cofinite-eta",
        statement: "for the cofinite naturals the canonical map into the Scott space of irreducibles is not continuous, every nonempty subset is compact saturated, and the space is not well-filtered",
        check: symbolic::l15,
    },
    Law {
        id: "L16",
        slug: "alexandroff-reflection",
        statement: "the Alexandroff space of P reflects onto the Scott space of its ideals, extending maps by suprema",
        check: finite::l16,
    },
    Law {
        id: "L17",
        slug: "completions-agree",
        statement: "the d-, well-filtered and sober completions of P all equal the ideal completion",
        check: finite::l17,
    },
    Law {
        id: "L18",
        slug: "noetherian-equiv",
        statement: "for a poset, sober, well-filtered and d-space Alexandroff topology, Noetherian, algebraic with all elements compact, and Alexandroff equal to Scott coincide",
        check: finite::l18,
    },
];

pub fn find(id: &str) -> Result<&'static Law> {
    CATALOG
        .iter()
        .find(|l| l.id.eq_ignore_ascii_case(id) || l.slug == id || l.name() == id)
        .ok_or_else(|| Error::UnknownLaw(id.to_string()))
}

/// Runs one law; an exceeded cap becomes a capped certificate.
pub fn run_law(id: &str, scale: &Scale) -> Result<Certificate> {
    let law = find(id)?;
    let mut cert = match (law.check)(scale) {
        Ok(c) => c,
        Err(Error::CapExceeded { what, size, cap }) => {
            let mut c = Certificate::pass(law.name());
            c.cap(json!({ "bound": what, "size": size, "cap": cap }));
            c
        }
        Err(e) => {
            let mut c = Certificate::pass(law.name());
            c.fail(json!({ "error": e.to_string() }));
            c
        }
    };
    cert.law = law.name();
    Ok(cert)
}

/// Runs every law concurrently; results come back in catalog order.
pub fn run_all(scale: &Scale) -> Vec<Certificate> {
    CATALOG.par_iter().map(|l| run_law(l.id, scale).expect("catalog ids resolve")).collect()
}

/// Folds per-instance certificates in order, so the first failure found is kept.
pub(crate) fn merge(law: &str, parts: impl IntoIterator<Item = Result<Certificate>>) -> Result<Certificate> {
    let mut cert = Certificate::pass(law);
    for p in parts {
        cert.absorb(&p?);
    }
    Ok(cert)
}

/// Asserts `holds`, failing with `witness` otherwise.
pub(crate) fn expect(cert: &mut Certificate, key: &str, holds: bool, witness: impl FnOnce() -> serde_json::Value) {
    cert.add(key, 1);
    if !holds {
        cert.fail(witness());
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scale_parsing() {
        let mut s = Scale::default();
        assert_eq!(s.get("bound"), 6);
        s.apply("bound=4").unwrap();
        assert_eq!(s.get("bound"), 4);
        assert!(s.apply("nope=1").is_err());
        assert!(s.apply("bound").is_err());
    }

    #[test]
    fn lookup() {
        assert_eq!(find("l10").unwrap().slug, "johnstone-irc");
        assert_eq!(find("cofinite-eta").unwrap().id, "L15");
        assert!(matches!(find("L19"), Err(Error::UnknownLaw(_))));
    }

    #[test]
    fn small_scale_catalog_passes() {
        let mut s = Scale::default();
        for kv in ["carrier=3", "poset=3", "maps=3", "equalizer=2", "bound=4", "fragment=4", "target=2", "steps=3"] {
            s.apply(kv).unwrap();
        }
        for c in run_all(&s) {
            assert!(c.passed(), "{c:?}");
        }
    }
}

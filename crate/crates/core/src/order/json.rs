use serde::{Deserialize, Serialize};

use super::FinitePoset;
use crate::error::Result;

/// Poset exchange format. `leq` may be any generating set on input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub elements: Vec<String>,
    pub leq: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closed: Option<bool>,
}

impl FinitePoset {
    /// Transitive reduction, or the full strict relation when `closed`.
    pub fn to_json(&self, closed: bool) -> PosetJson {
        let pairs = if closed { self.pairs() } else { self.hasse_pairs() };
        PosetJson {
            elements: self.labels().to_vec(),
            leq: pairs.into_iter().map(|(i, j)| [self.label(i).to_string(), self.label(j).to_string()]).collect(),
            closed: closed.then_some(true),
        }
    }

    pub fn from_json(raw: &PosetJson) -> Result<Self> {
        let pairs: Vec<(&str, &str)> = raw.leq.iter().map(|[a, b]| (a.as_str(), b.as_str())).collect();
        let elements: Vec<&str> = raw.elements.iter().map(String::as_str).collect();
        FinitePoset::new(&elements, &pairs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_round_trips() {
        let p = FinitePoset::chain(4);
        let j = p.to_json(false);
        assert_eq!(j.leq.len(), 3);
        assert_eq!(FinitePoset::from_json(&j).unwrap(), p);
        let c = p.to_json(true);
        assert_eq!(c.leq.len(), 6);
        assert_eq!(c.closed, Some(true));
        assert_eq!(FinitePoset::from_json(&c).unwrap(), p);
    }

    #[test]
    fn parses_plain_json() {
        let raw: PosetJson = serde_json::from_str(r#"{"elements":["a","b"],"leq":[["a","b"]]}"#).unwrap();
        let p = FinitePoset::from_json(&raw).unwrap();
        assert!(p.lt(0, 1));
    }
}

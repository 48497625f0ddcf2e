use serde::{Deserialize, Serialize};

use super::FiniteSpace;
use crate::error::Result;

/// Space exchange format: carrier labels and the closed sets as label lists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceJson {
    pub carrier: Vec<String>,
    pub closed: Vec<Vec<String>>,
}

impl FiniteSpace {
    pub fn to_json(&self) -> SpaceJson {
        SpaceJson {
            carrier: self.carrier().to_vec(),
            closed: self.closed_sets().iter().map(|&c| self.labels_of(c)).collect(),
        }
    }

    pub fn from_json(raw: &SpaceJson) -> Result<Self> {
        let carrier: Vec<&str> = raw.carrier.iter().map(String::as_str).collect();
        let closed: Vec<Vec<&str>> = raw.closed.iter().map(|c| c.iter().map(String::as_str).collect()).collect();
        let refs: Vec<&[&str]> = closed.iter().map(Vec::as_slice).collect();
        FiniteSpace::from_labels(&carrier, &refs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let s = FiniteSpace::sierpinski();
        let j = s.to_json();
        assert_eq!(j.closed, vec![Vec::<String>::new(), vec!["0".to_string()], vec!["0".into(), "1".into()]]);
        assert_eq!(FiniteSpace::from_json(&j).unwrap(), s);
    }
}

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Capped,
}

/// Outcome of one mechanical check, with the instance counts behind it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub law: String,
    pub status: Status,
    pub counts: BTreeMap<String, u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

impl Certificate {
    pub fn pass(law: impl Into<String>) -> Self {
        Certificate { law: law.into(), status: Status::Pass, counts: BTreeMap::new(), witness: None }
    }

    pub fn count(mut self, key: &str, n: u64) -> Self {
        *self.counts.entry(key.to_string()).or_insert(0) += n;
        self
    }

    pub fn add(&mut self, key: &str, n: u64) {
        *self.counts.entry(key.to_string()).or_insert(0) += n;
    }

    /// Records a failure; the first witness wins.
    pub fn fail(&mut self, witness: Value) {
        if self.status != Status::Fail {
            self.status = Status::Fail;
            self.witness = Some(witness);
        }
    }

    pub fn cap(&mut self, bound: Value) {
        if self.status == Status::Pass {
            self.status = Status::Capped;
            self.witness = Some(bound);
        }
    }

    pub fn with_witness(mut self, witness: Value) -> Self {
        self.witness = Some(witness);
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Folds another certificate's counts and status into this one.
    pub fn absorb(&mut self, other: &Certificate) {
        for (k, v) in &other.counts {
            self.add(k, *v);
        }
        match other.status {
            Status::Pass => {}
            Status::Fail => self.fail(other.witness.clone().unwrap_or(Value::Null)),
            Status::Capped => self.cap(other.witness.clone().unwrap_or(Value::Null)),
        }
    }
}

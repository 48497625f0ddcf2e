use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

use super::{Completion, Reflection, ScottKOutcome, SymbolicCompletion};
use crate::certificate::Certificate;

/// Uniform JSON shape for reflections and completions.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub source: Value,
    pub kind: String,
    pub target: Value,
    pub eta: Value,
    pub certificates: Vec<Certificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl From<&Reflection> for Report {
    fn from(r: &Reflection) -> Self {
        let eta: BTreeMap<&str, &str> =
            (0..r.source.len()).map(|x| (r.source.label(x), r.target.label(r.eta.apply(x)))).collect();
        Report {
            source: json!(r.source.to_json()),
            kind: r.kind.to_string(),
            target: json!(r.target.to_json()),
            eta: json!(eta),
            certificates: r.evidence.clone(),
            note: Some(r.justification.clone()),
        }
    }
}

impl From<&Completion> for Report {
    fn from(c: &Completion) -> Self {
        let eta: BTreeMap<&str, &str> =
            (0..c.source.len()).map(|x| (c.source.label(x), c.target.label(c.map[x]))).collect();
        Report {
            source: json!(c.source.to_json(false)),
            kind: json!(c.variant).as_str().unwrap_or_default().to_string(),
            target: json!(c.target.to_json(false)),
            eta: json!(eta),
            certificates: c.evidence.clone(),
            note: None,
        }
    }
}

impl From<&SymbolicCompletion> for Report {
    fn from(c: &SymbolicCompletion) -> Self {
        Report {
            source: json!(c.source),
            kind: json!(c.variant).as_str().unwrap_or_default().to_string(),
            target: json!(c.target),
            eta: json!(c.map),
            certificates: c.evidence.clone(),
            note: Some(format!("route: {}", c.route)),
        }
    }
}

impl From<&ScottKOutcome> for Report {
    fn from(o: &ScottKOutcome) -> Self {
        match o {
            ScottKOutcome::Reflection(r) => Report {
                source: json!(r.source),
                kind: r.kind.to_string(),
                target: json!(r.target),
                eta: json!(r.eta),
                certificates: r.evidence.clone(),
                note: Some(format!("route: {}", r.route)),
            },
            ScottKOutcome::NotScott(c) => Report {
                source: json!(c.source),
                kind: c.kind.to_string(),
                target: Value::Null,
                eta: Value::Null,
                certificates: c.evidence.clone(),
                note: Some(format!("not a Scott space: {}", c.failing_hypothesis)),
            },
            ScottKOutcome::ConditionsOnly(c) => Report {
                source: json!(c.source),
                kind: c.kind.to_string(),
                target: Value::Null,
                eta: json!(c.eta_sigma),
                certificates: vec![c.irc_shape.clone()],
                note: Some(c.note.clone()),
            },
        }
    }
}

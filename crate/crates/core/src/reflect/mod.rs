//! K-set families, reflections into sober, well-filtered and d-spaces, and the
//! completions of posets they induce.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::topology::Property;

mod completion;
mod finite;
mod kset;
mod report;
mod scott;

pub use completion::{d_completion_alexandroff, ideal_extension, ks_completion, Completion, Variant};
pub use finite::{
    alexandroff_reflection, extend_map, k_reflection, sobrify, universal_property_check, Extension, Reflection,
    UNIQUENESS_CAP,
};
pub use kset::{kset_interval, Justification, KSetInterval};
pub use report::Report;
pub use scott::{
    is_k_space, ks_completion_symbolic, ks_completion_top_route, scott_kreflection, symbolic_ideals,
    symbolic_kset_interval, symbolic_universal_property, with_top, ConditionsReport, IdealCompletion,
    KSpaceVerdict, NotScottCertificate, ScottKOutcome, SymbolicCompletion, SymbolicKSetInterval,
    SymbolicReflection, STEP_BOUND,
};

/// Which family of spaces a reflection lands in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KindTag {
    Sob,
    D,
    Wf,
}

impl KindTag {
    pub const ALL: [KindTag; 3] = [KindTag::Sob, KindTag::D, KindTag::Wf];

    pub fn name(self) -> &'static str {
        match self {
            KindTag::Sob => "sob",
            KindTag::D => "d",
            KindTag::Wf => "wf",
        }
    }

    /// The defining property of a K-space.
    pub fn property(self) -> Property {
        match self {
            KindTag::Sob => Property::Sober,
            KindTag::D => Property::DSpace,
            KindTag::Wf => Property::WellFiltered,
        }
    }
}

impl fmt::Display for KindTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for KindTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "sob" | "sober" => Ok(KindTag::Sob),
            "d" | "d-space" | "dspace" => Ok(KindTag::D),
            "wf" | "well-filtered" => Ok(KindTag::Wf),
            _ => Err(Error::Parse(format!("unknown kind `{s}` (expected sob, d or wf)"))),
        }
    }
}

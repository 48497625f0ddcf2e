//! Size caps for enumeration-heavy operations.

use std::sync::OnceLock;

use crate::error::{Error, Result};

pub const DEFAULT_MAX_CARRIER: usize = 16;

/// Carrier cap for operations that enumerate subsets; `REFLEKT_MAX_CARRIER` overrides it.
pub fn max_carrier() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("REFLEKT_MAX_CARRIER")
            .ok()
            .and_then(|v| v.parse().ok())
            .map(|v: usize| v.min(crate::subset::MAX_CARRIER - 1))
            .unwrap_or(DEFAULT_MAX_CARRIER)
    })
}

pub fn ensure(what: &str, size: usize, cap: usize) -> Result<()> {
    if size > cap {
        Err(Error::CapExceeded { what: what.to_string(), size, cap })
    } else {
        Ok(())
    }
}

pub fn ensure_carrier(what: &str, size: usize) -> Result<()> {
    ensure(what, size, max_carrier())
}

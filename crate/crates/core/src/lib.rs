pub mod certificate;
pub mod cli;
pub mod dot;
pub mod error;
pub mod laws;
pub mod limits;
pub mod order;
pub mod reflect;
pub mod subset;
pub mod symbolic;
pub mod topology;

pub use certificate::{Certificate, Status};
pub use error::{Error, Result};
pub use order::{Direction, FinitePoset, IdealFamily, MonotoneMap};
pub use subset::Subset;
pub use topology::{ContinuousMap, FiniteSpace, Property};

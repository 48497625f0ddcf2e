use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("order relation has a cycle through `{0}` and `{1}`")]
    CycleDetected(String, String),
    #[error("map is not monotone: {x} <= {y} but the images are not related")]
    NotMonotone { x: String, y: String },
    #[error("map is not continuous: the preimage of closed set {0} is not closed")]
    NotContinuous(String),
    #[error("space is not T0: `{0}` and `{1}` have the same closure")]
    NotT0(String, String),
    #[error("not a topology: {0}")]
    InvalidTopology(String),
    #[error("family contains the empty set")]
    EmptyMember,
    #[error("{0} is not closed")]
    NotClosed(String),
    #[error("maps do not share source and target")]
    SignatureMismatch,
    #[error("{subset} is not {kind}")]
    KindMismatch { subset: String, kind: &'static str },
    #[error("{what} has size {size}, above the cap {cap}")]
    CapExceeded { what: String, size: usize, cap: usize },
    #[error("`{point}` is not a point of {space}")]
    BadPoint { space: String, point: String },
    #[error("operands live in different spaces ({0} and {1})")]
    SpaceMismatch(String, String),
    #[error("the set is empty")]
    EmptySet,
    #[error("no well-filteredness witness is known for {0}")]
    NoneKnown(String),
    #[error("not directed: {0}")]
    NotDirected(String),
    #[error("unresolved: {0}")]
    Unresolved(String),
    #[error("target space is not sober")]
    TargetNotSober,
    #[error("closure of the image of {0} is not a point closure")]
    NoUniquePoint(String),
    #[error("target is not a dcpo: {0}")]
    TargetNotDcpo(String),
    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),
    #[error("unknown law `{0}`")]
    UnknownLaw(String),
    #[error("invalid normal form: {0}")]
    InvalidForm(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
}

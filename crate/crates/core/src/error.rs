use thiserror::Error;

use crate::field::FieldSpec;
use crate::groupoid::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("modulus {0} is not a prime below 2^31")]
    InvalidModulus(u64),
    #[error("inversion of zero")]
    ZeroInverse,
    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch { expected: FieldSpec, found: FieldSpec },
    #[error("parse error: {0}")]
    Parse(String),

    #[error("groupoid has no elements")]
    EmptyGroupoid,
    #[error("groupoid has {size} elements, above the cap of {cap}")]
    GroupoidTooLarge { size: usize, cap: usize },
    #[error("invalid groupoid:\n{0}")]
    InvalidGroupoid(ValidationReport),
    #[error("unknown element {0:?}")]
    UnknownElement(String),
    #[error("{0} is not a unit")]
    NotAUnit(String),

    #[error("not a bisection: {0}")]
    NotABisection(String),
    #[error("empty list")]
    EmptyList,
    #[error("element is zero")]
    ZeroElement,
    #[error("compression at unit {unit} is zero")]
    ZeroCompression { unit: String },

    #[error("enumeration of {requested} vectors exceeds the cap of {cap}")]
    SizeCap { requested: u128, cap: u64 },
    #[error("condition (LP) fails at units {violators:?}: nontrivial isotropy; use the brute-force oracle")]
    LpViolated { violators: Vec<String> },
    #[error("unit {unit} has isotropy of order {order}")]
    NontrivialIsotropy { unit: String, order: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("internal consistency check failed: {0}")]
    Consistency(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("graph has a cycle through {0}")]
    CyclicGraph(String),
    #[error("{0} is not a line point")]
    NotALinePoint(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

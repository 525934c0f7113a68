use thiserror::Error;

use crate::dynkin::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("no Dynkin diagram {0}")]
    InvalidDiagram(String),

    #[error("type {0} is not the type of any representation-finite self-injective algebra")]
    TypeNotInClassification(String),

    #[error("type {0}: {1} is not an integer")]
    NonIntegralInvariant(String, &'static str),

    #[error("vertex {0} is not canonical for this algebra")]
    NotCanonical(Vertex),

    #[error("row {q} is out of range for a diagram with {n} vertices")]
    RowOutOfRange { q: u32, n: u32 },

    #[error("Loewy length {length} out of range 1..={max}")]
    OutOfRange { length: u32, max: u32 },

    #[error("socle index {index} out of range 1..={s}")]
    SocleOutOfRange { index: u32, s: u32 },

    #[error("Nakayama algebra with {s} simples and Loewy length {} is not symmetric", .n + 1)]
    NotSymmetric { s: u32, n: u32 },

    #[error("triangle parameters violate 1<=i<=s, 0<k<=r<=n, 1<=j<=n+1-r: {0}")]
    SideConditionViolated(String),

    #[error("chosen module {0} is not a stable brick in the two-sided perpendicular set")]
    PickNotInPerp(String),

    #[error("operation requires a self-injective Nakayama algebra, got {0}")]
    NotNakayama(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("no ν-orbit in the two-sided perpendicular set keeps the system orthogonal")]
    NoValidAddition,

    #[error("loop invariant violated: {0}")]
    InvariantViolated(String),

    #[error("search budget of {budget} nodes exceeded")]
    BudgetExceeded { budget: u64 },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

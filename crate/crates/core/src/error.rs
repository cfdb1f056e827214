use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cyclic factor order must be at least 2, got {0}")]
    InvalidOrder(u64),

    #[error("group order overflows u64")]
    GroupTooLarge,

    #[error("invalid group literal {literal:?}: {reason}")]
    GroupLiteral { literal: String, reason: String },

    #[error("element has {found} coordinates, group has {expected} factors")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("coordinate {index} = {value} is out of range for Z{order}")]
    CoordinateOutOfRange {
        index: usize,
        value: u64,
        order: u64,
    },

    #[error("cyclotomic value {0} is not a rational integer")]
    NonRationalValue(String),

    #[error("connection set contains the identity")]
    ContainsIdentity,

    #[error("connection set is not inverse-closed: {element} is present but {inverse} is not")]
    NotInverseClosed { element: String, inverse: String },

    #[error("operation requires a cubelike graph (group exponent <= 2), group is {0}")]
    NotCubelike(String),

    #[error("{vertices} vertices exceeds the configured cap of {cap}")]
    TooLarge { vertices: u64, cap: u64 },

    #[error("eigenvalue gap {gap:e} falls in the ambiguous band [{lower:e}, {upper:e}]; adjust the tolerance")]
    ClusterAmbiguity { gap: f64, lower: f64, upper: f64 },

    #[error("eigenpair residual {residual:e} exceeds {bound:e}")]
    EigenResidual { residual: f64, bound: f64 },

    #[error("dimension {0} is invalid: constructions need an odd d >= 5")]
    BadDimension(usize),

    #[error("cycle length {0} is invalid: the product needs an odd m >= 3")]
    EvenCycle(u64),

    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}

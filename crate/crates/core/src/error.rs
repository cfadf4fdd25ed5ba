use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be weakly decreasing")]
    InvalidPartition(Vec<i64>),
    #[error("cycle type and shape disagree")]
    ShapeMismatch,
    #[error("unknown root system `{0}`")]
    UnknownSystem(String),
    #[error("weight {weight:?} has {got} coordinates, expected {expected} for {system}")]
    WeightArity { weight: Vec<i32>, got: usize, expected: usize, system: String },
    #[error("weight {0:?} is not dominant")]
    NonDominant(Vec<i32>),
    #[error("characters live on different root systems ({0} vs {1})")]
    SystemMismatch(String, String),
    #[error("epsilon coordinates must be all integers or all half-integers: {0:?}")]
    MixedIntegrality(Vec<i64>),
    #[error("epsilon coordinates {0:?} are not valid for type {1}")]
    InvalidEpsilon(Vec<i64>, String),
    #[error("partition {partition} does not fit the {rows}x{cols} box")]
    BoxViolation { partition: String, rows: usize, cols: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error at position {pos} near `{token}`: {msg}")]
    Parse { pos: usize, token: String, msg: String },
    #[error("indeterminate: cap exceeded ({reason}); progress: {progress}")]
    Indeterminate { reason: String, progress: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

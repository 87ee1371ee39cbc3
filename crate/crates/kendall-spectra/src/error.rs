//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid model: {0}")]
    InvalidModel(String),

    #[error("integrand appears unbounded (|g| > {bound:e} at a probe point)")]
    UnboundedIntegrand { bound: f64 },

    #[error("quadrature tolerance {requested:e} not reached (achieved ~{achieved:e})")]
    QuadratureTolerance { requested: f64, achieved: f64 },

    #[error("class cap exceeded: model has {got} classes, cap is {cap}")]
    ClassCapExceeded { got: usize, cap: usize },

    #[error("moment order cap exceeded: R = {got}, cap is {cap}")]
    MomentCapExceeded { got: usize, cap: usize },

    #[error("missing moment order {0} for the supplied measure")]
    MissingMoment(usize),

    #[error("model is not column-iid: {0}")]
    NotColumnIid(String),

    #[error("row {row} has degenerate scores; normalization undefined")]
    DegenerateRow { row: usize },

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("non-finite value: {0}")]
    NonFinite(String),

    #[error("eigensolver failed to converge on row {0}")]
    EigenNoConvergence(usize),

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("{path}:{line}: {msg}")]
    Parse {
        path: String,
        line: usize,
        msg: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

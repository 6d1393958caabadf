use thiserror::Error;

/// Errors surfaced by the library. Variant names follow the per-operation
/// contracts; everything else panics only on internal invariant violations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("empty interval: lower endpoint {lo} must be strictly below upper endpoint {hi}")]
    EmptyInterval { lo: String, hi: String },

    #[error("interval endpoint touches zero; the operation requires endpoints bounded away from 0")]
    TouchesZero,

    #[error("set is not contained in the admissible band [{lo}, {hi}]")]
    OutsideBand { lo: String, hi: String },

    #[error("dilation scale must be positive, got {0}")]
    NonpositiveScale(f64),

    #[error("shift {shift} is not aligned with the sample grid (dt = {dt})")]
    MisalignedShift { shift: f64, dt: f64 },

    #[error("incompatible grids: {0}")]
    GridMismatch(String),

    #[error("fiber norm {found} exceeds the band limit 1 (tolerance {tol}) at lambda = {lambda}")]
    BandViolation { lambda: f64, found: f64, tol: f64 },

    #[error("set is not dilation congruent with the Shannon set")]
    NotDilationCongruent,

    #[error("invalid counterexample set E: {0}")]
    BadE(String),

    #[error("invalid admissibility bounds: require 0 < A <= B, got A = {a}, B = {b}")]
    BadBounds { a: f64, b: f64 },

    #[error("test bank is empty; refusing a vacuous verification pass")]
    EmptyBank,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

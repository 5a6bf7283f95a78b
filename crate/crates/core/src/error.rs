use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("cover list contains a cycle")]
    CycleDetected,
    #[error("size {n} exceeds enumeration cap {cap}")]
    SizeCap { n: usize, cap: usize },
    #[error("wattle sizes must have at least two chains, each of size >= 2")]
    BadSizes,
    #[error("biequivalence axiom {axiom} violated: {detail}")]
    AxiomViolation {
        axiom: &'static str,
        detail: String,
    },
    #[error("not a dyadic set: {0}")]
    NotDyadic(String),
    #[error("point is not reducible: {0}")]
    NotReducible(String),
    #[error("equivalence class too small (need more than 2 elements)")]
    ClassTooSmall,
    #[error("not a Coxeter graph: {0}")]
    NotCoxeter(String),
    #[error("graph is not connected")]
    Disconnected,
    #[error("marking is not semilinear: {0}")]
    NotSemilinear(String),
    #[error("bad Coxeter matrix: {0}")]
    BadMatrix(String),
    #[error("formula produced a non-integral group order")]
    NonIntegral,
    #[error("path shape violated: {0}")]
    ShapeViolation(String),
    #[error("unsupported marking kind: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("schema error: {0}")]
    Schema(String),
}

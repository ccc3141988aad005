//! Error taxonomy shared across the workspace.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ArchError {
    /// An entity id did not resolve in the owning module's store.
    #[error("not found: {0}")]
    NotFound(String),

    /// A remote invocation failed at the transport level (connect, timeout, io).
    #[error("transport error in {method}: {detail}")]
    Transport { method: String, detail: String },

    /// A payload could not be decoded on either side of a boundary.
    #[error("protocol error: {0}")]
    Protocol(String),

    /// Assembly-time misconfiguration: duplicate routes, undeclared event
    /// types, cyclic requires graphs.
    #[error("configuration error: {0}")]
    Configuration(String),

    /// Similarity weights are outside [0,1] or do not sum to 1.
    #[error("invalid weights: {0}")]
    InvalidWeights(String),

    /// Benchmark results with mismatched configs cannot be compared.
    #[error("invalid comparison: {0}")]
    InvalidComparison(String),

    /// A consistency scenario did not reach quiescence in time.
    #[error("scenario timeout: {0}")]
    ScenarioTimeout(String),

    /// Corpus spec violates its invariants.
    #[error("invalid corpus spec: {0}")]
    InvalidSpec(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl ArchError {
    pub fn is_not_found(&self) -> bool {
        matches!(self, ArchError::NotFound(_))
    }
}

use thiserror::Error;

/// Errors produced by the coherent-state algebra and the protocol layers.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("mode count mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },

    #[error("invalid mode index {index} for a {mode_count}-mode state")]
    InvalidMode { index: usize, mode_count: usize },

    #[error("basis is singular at |alpha| = {alpha_abs}: {reason}")]
    Singularity { alpha_abs: f64, reason: String },

    #[error("unsupported state support: {0}")]
    UnsupportedSupport(String),

    #[error("unsupported input: {0}")]
    UnsupportedInput(String),

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("measurement outcome has zero probability; Bob state undefined")]
    UndefinedBobState,

    #[error("non-finite amplitude or coefficient encountered")]
    NonFinite,

    #[error("unknown form id: {0}")]
    UnknownForm(String),

    #[error("resource limit: {0}")]
    Resource(String),
}

pub type Result<T> = std::result::Result<T, Error>;
